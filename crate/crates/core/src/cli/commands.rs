use std::fmt::Write as _;

use serde::Serialize;

use super::build::{finite_ring_of, InputError};
use super::compact::parse_ringspec;
use super::corpus::{corpus, run_corpus};
use super::run::{format_text, run_scene, RunOptions};
use crate::finite::DEFAULT_MAX_SIZE;
use crate::predicates::lattice_table;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// What a command prints and the exit code it ends with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String, all_match: bool) -> Self {
        Output { stdout, stderr: String::new(), code: if all_match { 0 } else { 1 } }
    }

    fn input_error(e: InputError) -> Self {
        Output { stdout: String::new(), stderr: format!("error: {e}\n"), code: 2 }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

/// `ideal-lab check`: runs one scene file's text.
pub fn cmd_check(source: &str, text: &str, format: Format, opts: RunOptions) -> Output {
    let located = |e: InputError| {
        let loc = if e.location.is_empty() { source.to_string() } else { format!("{source}: {}", e.location) };
        InputError::new(loc, e.message)
    };
    let scene = match super::parse_scene(text) {
        Ok(s) => s,
        Err(e) => return Output::input_error(located(e)),
    };
    match run_scene(&scene, opts) {
        Ok(r) => {
            let out = match format {
                Format::Json => json(&r),
                Format::Text => format_text(&r),
            };
            Output::ok(out, r.all_match)
        }
        Err(e) => Output::input_error(located(e)),
    }
}

/// `ideal-lab corpus`.
pub fn cmd_corpus(only: Option<&str>, list: bool, format: Format, opts: RunOptions) -> Output {
    if list {
        let mut s = String::new();
        for g in corpus() {
            let checks: usize = g.scenes.iter().map(|s| s.checks.len()).sum();
            let _ = writeln!(s, "{:<5} {} ({checks} checks)", g.id, g.title);
        }
        return Output::ok(s, true);
    }
    match run_corpus(only, opts) {
        Ok(r) => {
            let out = match format {
                Format::Json => json(&r),
                Format::Text => {
                    let mut s = String::new();
                    for g in &r.groups {
                        let _ = writeln!(s, "== {} {} ==", g.id, g.title);
                        for scene in &g.scenes {
                            s.push_str(&format_text(scene));
                        }
                    }
                    let ok = r.groups.iter().filter(|g| g.all_match).count();
                    let _ = writeln!(s, "{ok}/{} groups as expected", r.groups.len());
                    s
                }
            };
            Output::ok(out, r.all_match)
        }
        Err(e) => Output::input_error(e),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeRowReport {
    pub ideal: String,
    pub generators: String,
    pub size: usize,
    pub big: bool,
    pub upper_big: bool,
    pub basic: bool,
    pub c_ideal: bool,
    pub nilpotent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub ring: String,
    pub size: usize,
    pub ideals: Vec<LatticeRowReport>,
    pub big_ideal_ring: bool,
}

pub fn lattice_report(ringspec: &str, max_size: Option<usize>) -> Result<LatticeReport, InputError> {
    let spec = parse_ringspec(ringspec).map_err(|m| InputError::new("ringspec", m))?;
    let ring = finite_ring_of(&spec).map_err(|m| InputError::new("ringspec", m))?;
    let table = lattice_table(&ring, max_size.unwrap_or(DEFAULT_MAX_SIZE)).map_err(|e| InputError::new("ringspec", e))?;
    let ideals = table
        .rows
        .iter()
        .map(|r| LatticeRowReport {
            ideal: r.ideal.to_string(),
            generators: r.ideal.generator_form(),
            size: r.ideal.size(),
            big: r.big,
            upper_big: r.upper_big,
            basic: r.basic,
            c_ideal: r.c_ideal,
            nilpotent: r.nilpotent,
        })
        .collect();
    Ok(LatticeReport { ring: ring.to_string(), size: ring.size(), ideals, big_ideal_ring: table.big_ideal_ring })
}

/// `ideal-lab lattice`.
pub fn cmd_lattice(ringspec: &str, max_size: Option<usize>, format: Format) -> Output {
    let report = match lattice_report(ringspec, max_size) {
        Ok(r) => r,
        Err(e) => return Output::input_error(e),
    };
    let out = match format {
        Format::Json => json(&report),
        Format::Text => {
            let yn = |b: bool| if b { "yes" } else { "no" };
            let width = report.ideals.iter().map(|r| r.generators.chars().count()).max().unwrap_or(0).max(5);
            let mut s = format!("{} (order {}), {} ideals\n", report.ring, report.size, report.ideals.len());
            let _ = writeln!(
                s,
                "{:<width$}  {:>4}  {:>3}  {:>9}  {:>5}  {:>7}  {:>9}  members",
                "ideal", "size", "big", "upper-big", "basic", "C-ideal", "nilpotent"
            );
            for r in &report.ideals {
                let _ = writeln!(
                    s,
                    "{:<width$}  {:>4}  {:>3}  {:>9}  {:>5}  {:>7}  {:>9}  {}",
                    r.generators,
                    r.size,
                    yn(r.big),
                    yn(r.upper_big),
                    yn(r.basic),
                    yn(r.c_ideal),
                    yn(r.nilpotent),
                    r.ideal
                );
            }
            let _ = writeln!(s, "big ideal ring: {}", yn(report.big_ideal_ring));
            s
        }
    };
    Output::ok(out, true)
}
