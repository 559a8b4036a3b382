use std::collections::BTreeSet;
use std::fmt;

use num::integer::gcd;

use crate::error::{AlgebraError, Result};

/// A finite abelian group `Z/m_1 × … × Z/m_k` as a `Z`-module.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicProduct {
    moduli: Vec<u64>,
}

type Vector = Vec<u64>;

impl CyclicProduct {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.contains(&0) {
            return Err(AlgebraError::ZeroModulus);
        }
        Ok(CyclicProduct { moduli })
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().product()
    }

    fn elements(&self) -> Vec<Vector> {
        let mut out = vec![Vec::new()];
        for &m in &self.moduli {
            out = out.into_iter().flat_map(|v| (0..m).map(move |x| [v.clone(), vec![x]].concat())).collect();
        }
        out
    }

    fn add(&self, a: &[u64], b: &[u64]) -> Vector {
        a.iter().zip(b).zip(&self.moduli).map(|((x, y), m)| (x + y) % m).collect()
    }

    fn scale(&self, n: u64, a: &[u64]) -> Vector {
        a.iter().zip(&self.moduli).map(|(x, m)| (n % m) * x % m).collect()
    }

    fn reduce(&self, a: &[u64]) -> Result<Vector> {
        if a.len() != self.moduli.len() {
            return Err(AlgebraError::DimensionMismatch { expected: self.moduli.len(), found: a.len() });
        }
        Ok(a.iter().zip(&self.moduli).map(|(x, m)| x % m).collect())
    }
}

impl fmt::Display for CyclicProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moduli.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.moduli.iter().map(|m| format!("Z/{m}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// A split ideal `nZ ⋉ F` of `Z ⋉ E`, with `F` a subgroup and `nE ⊆ F`.
/// `n = 0` is the zero ideal of `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitIdealZ {
    module: CyclicProduct,
    n: u64,
    f: BTreeSet<Vector>,
}

impl SplitIdealZ {
    /// `nZ ⋉ ⟨generators⟩`.
    pub fn new(module: &CyclicProduct, n: u64, generators: &[Vec<u64>]) -> Result<Self> {
        let mut f: BTreeSet<Vector> = BTreeSet::from([vec![0; module.moduli.len()]]);
        for g in generators {
            let g = module.reduce(g)?;
            let mut frontier: Vec<Vector> = f.iter().cloned().collect();
            while let Some(v) = frontier.pop() {
                let w = module.add(&v, &g);
                if f.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
        let ideal = SplitIdealZ { module: module.clone(), n, f };
        let ne: BTreeSet<Vector> = module.elements().iter().map(|e| module.scale(n, e)).collect();
        if !ne.is_subset(&ideal.f) {
            return Err(AlgebraError::NotAnIdeal(format!("{ideal}: nE is not inside F")));
        }
        Ok(ideal)
    }

    /// `nZ ⋉ E`.
    pub fn full(module: &CyclicProduct, n: u64) -> Self {
        let f = module.elements().into_iter().collect();
        SplitIdealZ { module: module.clone(), n, f }
    }

    pub fn multiplier(&self) -> u64 {
        self.n
    }

    pub fn module(&self) -> &CyclicProduct {
        &self.module
    }

    /// The elements of `F`, in lexicographic order.
    pub fn module_part(&self) -> impl Iterator<Item = &[u64]> {
        self.f.iter().map(Vec::as_slice)
    }

    pub fn module_part_order(&self) -> usize {
        self.f.len()
    }

    fn check(&self, other: &SplitIdealZ) -> Result<()> {
        if self.module == other.module {
            Ok(())
        } else {
            Err(AlgebraError::ModuleMismatch)
        }
    }

    /// `(n1 Z ⋉ F1)(n2 Z ⋉ F2) = n1n2 Z ⋉ (n1F2 + n2F1)`.
    pub fn product(&self, other: &SplitIdealZ) -> Result<SplitIdealZ> {
        self.check(other)?;
        let e = &self.module;
        let a: BTreeSet<Vector> = other.f.iter().map(|v| e.scale(self.n, v)).collect();
        let b: BTreeSet<Vector> = self.f.iter().map(|v| e.scale(other.n, v)).collect();
        let f = a.iter().flat_map(|x| b.iter().map(move |y| e.add(x, y))).collect();
        Ok(SplitIdealZ { module: e.clone(), n: self.n * other.n, f })
    }

    /// `other ⊆ self`: `n_self | n_other` and `F_other ⊆ F_self`.
    pub fn contains(&self, other: &SplitIdealZ) -> Result<bool> {
        self.check(other)?;
        let divides = if self.n == 0 { other.n == 0 } else { other.n.is_multiple_of(self.n) };
        Ok(divides && other.f.is_subset(&self.f))
    }

    /// The `Z`-part of the sum is `gcd(n1, n2) Z`.
    pub fn sum(&self, other: &SplitIdealZ) -> Result<SplitIdealZ> {
        self.check(other)?;
        let e = &self.module;
        let f = self.f.iter().flat_map(|x| other.f.iter().map(move |y| e.add(x, y))).collect();
        Ok(SplitIdealZ { module: e.clone(), n: gcd(self.n, other.n), f })
    }
}

impl fmt::Display for SplitIdealZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.n {
            0 => "0".to_string(),
            1 => "Z".to_string(),
            n => format!("{n}Z"),
        };
        let part = if self.f.len() == 1 {
            "0".to_string()
        } else if self.f.len() as u64 == self.module.order() {
            self.module.to_string()
        } else {
            let elems: Vec<String> = self
                .f
                .iter()
                .map(|v| format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
                .collect();
            format!("{{{}}}", elems.join(", "))
        };
        write!(f, "{base} ⋉ {part}")
    }
}
