use std::fmt;
use std::sync::Arc;

use super::module::FiniteModule;
use crate::error::{AlgebraError, Result};
use crate::field::is_prime;

/// Rings up to this size have their axioms verified on construction.
pub const VERIFY_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    ZMod(u64),
    GF(u64),
    Product(Arc<FiniteRing>, Arc<FiniteRing>),
    Idealization(Arc<FiniteRing>, Arc<FiniteModule>),
}

/// A finite commutative ring given by addition and multiplication tables on
/// the indices `0..size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    size: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    one: usize,
    labels: Vec<String>,
    provenance: Provenance,
}

impl FiniteRing {
    fn build(
        size: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        zero: usize,
        one: usize,
        labels: Vec<String>,
        provenance: Provenance,
    ) -> Result<Self> {
        let mut add_t = Vec::with_capacity(size * size);
        let mut mul_t = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                add_t.push(add(a, b) as u32);
                mul_t.push(mul(a, b) as u32);
            }
        }
        let neg = (0..size)
            .map(|a| (0..size).find(|&b| add_t[a * size + b] as usize == zero).map(|b| b as u32))
            .collect::<Option<Vec<u32>>>()
            .ok_or_else(|| AlgebraError::NotARing("missing additive inverse".into()))?;
        let ring = FiniteRing { size, add: add_t, mul: mul_t, neg, zero, one, labels, provenance };
        if size <= VERIFY_LIMIT {
            ring.verify()?;
        }
        Ok(ring)
    }

    /// Commutative ring axioms, by a full table scan.
    pub fn verify(&self) -> Result<()> {
        let n = self.size;
        let fail = |what: &str| Err(AlgebraError::NotARing(what.to_string()));
        for a in 0..n {
            if self.add(a, self.zero) != a || self.mul(a, self.one) != a {
                return fail("identity");
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return fail("commutativity");
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail("additive associativity");
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplicative associativity");
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("distributivity");
                    }
                }
            }
        }
        Ok(())
    }

    pub fn zmod(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(AlgebraError::ZeroModulus);
        }
        let m = n as usize;
        let labels = (0..m).map(|k| k.to_string()).collect();
        let one = if m == 1 { 0 } else { 1 };
        FiniteRing::build(m, |a, b| (a + b) % m, |a, b| (a * b) % m, 0, one, labels, Provenance::ZMod(n))
    }

    pub fn gf(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        let mut r = FiniteRing::zmod(p)?;
        r.provenance = Provenance::GF(p);
        Ok(r)
    }

    pub fn product(a: &Arc<FiniteRing>, b: &Arc<FiniteRing>) -> Result<Self> {
        let nb = b.size;
        let split = |x: usize| (x / nb, x % nb);
        let labels = (0..a.size * nb)
            .map(|x| {
                let (i, j) = split(x);
                format!("({},{})", a.labels[i], b.labels[j])
            })
            .collect();
        FiniteRing::build(
            a.size * nb,
            |x, y| {
                let ((i, j), (k, l)) = (split(x), split(y));
                a.add(i, k) * nb + b.add(j, l)
            },
            |x, y| {
                let ((i, j), (k, l)) = (split(x), split(y));
                a.mul(i, k) * nb + b.mul(j, l)
            },
            a.zero * nb + b.zero,
            a.one * nb + b.one,
            labels,
            Provenance::Product(a.clone(), b.clone()),
        )
    }

    /// `A ⋉ E` with `(a,e)(a',e') = (aa', ae' + a'e)`.
    pub fn idealization(a: &Arc<FiniteRing>, e: &Arc<FiniteModule>) -> Result<Self> {
        if **e.ring() != **a {
            return Err(AlgebraError::RingMismatch);
        }
        let ne = e.size();
        let split = |x: usize| (x / ne, x % ne);
        let labels = (0..a.size * ne)
            .map(|x| {
                let (i, j) = split(x);
                format!("({},{})", a.labels[i], e.label(j))
            })
            .collect();
        FiniteRing::build(
            a.size * ne,
            |x, y| {
                let ((i, j), (k, l)) = (split(x), split(y));
                a.add(i, k) * ne + e.add(j, l)
            },
            |x, y| {
                let ((i, j), (k, l)) = (split(x), split(y));
                a.mul(i, k) * ne + e.add(e.act(i, l), e.act(k, j))
            },
            a.zero * ne + e.zero(),
            a.one * ne + e.zero(),
            labels,
            Provenance::Idealization(a.clone(), e.clone()),
        )
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn is_field(&self) -> bool {
        self.size > 1 && (0..self.size).all(|a| a == self.zero || (0..self.size).any(|b| self.mul(a, b) == self.one))
    }

    /// The factors `(A, E)` of an idealization.
    pub fn idealization_parts(&self) -> Result<(&Arc<FiniteRing>, &Arc<FiniteModule>)> {
        match &self.provenance {
            Provenance::Idealization(a, e) => Ok((a, e)),
            _ => Err(AlgebraError::NotIdealization),
        }
    }

    /// `(a, e)` as an index of an idealization.
    pub fn pair_index(&self, a: usize, e: usize) -> Result<usize> {
        let (_, m) = self.idealization_parts()?;
        Ok(a * m.size() + e)
    }

    /// The `(a, e)` components of an element of an idealization.
    pub fn pair(&self, x: usize) -> Result<(usize, usize)> {
        let (_, m) = self.idealization_parts()?;
        Ok((x / m.size(), x % m.size()))
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::ZMod(n) => write!(f, "Z/{n}"),
            Provenance::GF(p) => write!(f, "F_{p}"),
            Provenance::Product(a, b) => write!(f, "{a} x {b}"),
            Provenance::Idealization(a, e) => write!(f, "{a} ⋉ {e}"),
        }
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.provenance {
            Provenance::Product(..) | Provenance::Idealization(..) => write!(f, "({})", self.provenance),
            p => write!(f, "{p}"),
        }
    }
}
