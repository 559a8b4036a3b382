//! The compact ring syntax of `ideal-lab lattice`, e.g.
//! `idealization(zmod(4), quotient(2))` or `product(gf(2), gf(2))`.
//! It is translated to the scene JSON for rings.

use serde_json::{json, Map, Value};

use super::scene::RingSpec;

#[derive(Debug)]
enum Term {
    Int(i64),
    Call(String, Vec<Term>),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().unwrap().len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn fail<T>(&self, what: &str) -> Result<T, String> {
        Err(format!("column {}: {what}", self.pos + 1))
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while self.src[self.pos..].starts_with(&f) {
            self.pos += self.src[self.pos..].chars().next().unwrap().len_utf8();
        }
        &self.src[start..self.pos]
    }

    fn term(&mut self) -> Result<Term, String> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == '-' => {
                let digits = self.take_while(|c| c.is_ascii_digit() || c == '-');
                digits.parse().map(Term::Int).or_else(|_| self.fail("bad integer"))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_').to_ascii_lowercase();
                let mut args = Vec::new();
                match self.peek() {
                    Some('(') => {
                        self.pos += 1;
                        if self.peek() != Some(')') {
                            loop {
                                args.push(self.term()?);
                                match self.peek() {
                                    Some(',') => self.pos += 1,
                                    Some(')') => break,
                                    _ => return self.fail("expected ',' or ')'"),
                                }
                            }
                        }
                        self.pos += 1;
                    }
                    Some(c) if c.is_ascii_digit() => args.push(self.term()?),
                    _ => {}
                }
                Ok(Term::Call(name, args))
            }
            _ => self.fail("expected a ring, module or integer"),
        }
    }
}

fn to_json(t: &Term) -> Value {
    match t {
        Term::Int(n) => json!(n),
        Term::Call(name, args) => {
            let vals: Vec<Value> = args.iter().map(to_json).collect();
            let body = match (name.as_str(), vals.as_slice()) {
                (_, []) => return json!(name),
                ("idealization", [r, m]) => json!({ "ring": r, "module": m }),
                ("split_z", _) => json!({ "module": vals }),
                ("semigroup", _) => json!({ "gens": vals }),
                ("zmod" | "gf", [x]) => x.clone(),
                _ => Value::Array(vals),
            };
            let mut m = Map::new();
            m.insert(name.clone(), body);
            Value::Object(m)
        }
    }
}

/// Parses compact syntax or, when the text starts with `{`, scene JSON.
pub fn parse_ringspec(text: &str) -> Result<RingSpec, String> {
    let text = text.trim();
    let value = if text.starts_with('{') || text.starts_with('"') {
        serde_json::from_str(text).map_err(|e| e.to_string())?
    } else {
        let mut p = Parser { src: text, pos: 0 };
        let t = p.term()?;
        if p.peek().is_some() {
            return p.fail("trailing input");
        }
        to_json(&t)
    };
    serde_json::from_value(value).map_err(|e| e.to_string())
}
