//! Monomial ideals of `k[x_1, …, x_d]`, stored by minimal generators.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{AlgebraError, Result};

pub type Exponent = Vec<u32>;

fn divides(g: &[u32], m: &[u32]) -> bool {
    g.iter().zip(m).all(|(a, b)| a <= b)
}

#[derive(Debug, Clone)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<Exponent>,
    vars: Vec<String>,
}

// Variable names are presentation only.
impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

impl Hash for MonomialIdeal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.dim.hash(state);
        self.gens.hash(state);
    }
}

/// Drops non-minimal generators and sorts the rest.
pub fn minimalize(mut gens: Vec<Exponent>) -> Vec<Exponent> {
    gens.sort();
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| !gens.iter().enumerate().any(|(j, h)| i != j && divides(h, g)))
        .collect();
    gens.into_iter().zip(keep).filter_map(|(g, k)| k.then_some(g)).collect()
}

fn default_vars(dim: usize) -> Vec<String> {
    const NAMES: [&str; 4] = ["a", "b", "c", "d"];
    (0..dim)
        .map(|i| NAMES.get(i).map_or_else(|| format!("x{}", i + 1), |s| s.to_string()))
        .collect()
}

impl MonomialIdeal {
    pub fn new(dim: usize, gens: Vec<Exponent>) -> Result<Self> {
        if dim == 0 {
            return Err(AlgebraError::Precondition("monomial ideals need at least one variable".into()));
        }
        if let Some(g) = gens.iter().find(|g| g.len() != dim) {
            return Err(AlgebraError::DimensionMismatch { expected: dim, found: g.len() });
        }
        Ok(MonomialIdeal { dim, gens: minimalize(gens), vars: default_vars(dim) })
    }

    /// Renames the variables used for display.
    pub fn with_vars(mut self, vars: Vec<String>) -> Result<Self> {
        if vars.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, found: vars.len() });
        }
        self.vars = vars;
        Ok(self)
    }

    pub fn zero(dim: usize) -> Self {
        MonomialIdeal { dim, gens: Vec::new(), vars: default_vars(dim) }
    }

    pub fn unit(dim: usize) -> Self {
        MonomialIdeal { dim, gens: vec![vec![0; dim]], vars: default_vars(dim) }
    }

    /// `(x_1, …, x_d)^k`.
    pub fn maximal_power(dim: usize, k: u32) -> Self {
        let vars = (0..dim).map(|i| {
            let mut e = vec![0; dim];
            e[i] = 1;
            e
        });
        let m = MonomialIdeal::new(dim, vars.collect()).expect("well formed");
        if k == 0 {
            return MonomialIdeal::unit(dim);
        }
        m.power(k as usize).expect("positive exponent")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    fn check(&self, other: &MonomialIdeal) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(AlgebraError::DimensionMismatch { expected: self.dim, found: other.dim })
        }
    }

    pub fn member(&self, m: &[u32]) -> Result<bool> {
        if m.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, found: m.len() });
        }
        Ok(self.gens.iter().any(|g| divides(g, m)))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let sums = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(move |h| g.iter().zip(h).map(|(a, b)| a + b).collect()))
            .collect();
        Ok(MonomialIdeal { dim: self.dim, gens: minimalize(sums), vars: self.vars.clone() })
    }

    pub fn power(&self, n: usize) -> Result<MonomialIdeal> {
        if n == 0 {
            return Err(AlgebraError::Precondition("power exponent must be positive".into()));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal { dim: self.dim, gens: minimalize(gens), vars: self.vars.clone() })
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check(other)?;
        Ok(other.gens.iter().all(|g| self.gens.iter().any(|h| divides(h, g))))
    }

    pub fn equal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check(other)?;
        Ok(self.gens == other.gens)
    }

    fn format_monomial(&self, e: &[u32]) -> String {
        let parts: Vec<String> = e
            .iter()
            .zip(&self.vars)
            .filter(|(k, _)| **k > 0)
            .map(|(k, v)| if *k == 1 { v.clone() } else { format!("{v}^{k}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("")
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        // Descending in the first variable reads naturally: (a^4, a^3b, ...).
        let mut gens: Vec<&Exponent> = self.gens.iter().collect();
        gens.reverse();
        let parts: Vec<String> = gens.iter().map(|g| self.format_monomial(g)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `I = (a^4, a^3b, ab^3, b^4)` and `J = (a, b)^4`: `I ⊊ J` (since
/// `a^2b^2 ∉ I`) while `I^2 = J^2`.
pub fn prufer_witness() -> (MonomialIdeal, MonomialIdeal) {
    let i = MonomialIdeal::new(2, vec![vec![4, 0], vec![3, 1], vec![1, 3], vec![0, 4]]).expect("well formed");
    (i, MonomialIdeal::maximal_power(2, 4))
}

/// The same pair in the variables `a, X`.
pub fn polynomial_ring_witness() -> (MonomialIdeal, MonomialIdeal) {
    let vars = vec!["a".to_string(), "X".to_string()];
    let (j, i) = prufer_witness();
    (j.with_vars(vars.clone()).expect("two variables"), i.with_vars(vars).expect("two variables"))
}
