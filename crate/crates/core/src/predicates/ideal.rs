use std::collections::HashSet;
use std::fmt::{Debug, Display};
use std::hash::Hash;

use super::verdict::{PowerCheck, ReductionVerdict};
use crate::error::{AlgebraError, Result};
use crate::finite::{FiniteIdeal, SplitIdealZ};
use crate::monomial::MonomialIdeal;
use crate::series::ProfileModule;

/// What the predicates need from a kernel.
pub trait Ideal: Clone + Eq + Hash + Debug + Display {
    /// `other ⊆ self`.
    fn contains(&self, other: &Self) -> Result<bool>;

    fn product(&self, other: &Self) -> Result<Self>;

    fn power(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(AlgebraError::Precondition("power exponent must be positive".into()));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Whether power sequences are eventually periodic (finitely many
    /// ideals), which lets "for every n" be decided exactly.
    fn periodic_powers(&self) -> bool {
        false
    }
}

/// Kernels with colon ideals, needed for the Ratliff-Rush closure.
pub trait ColonIdeal: Ideal {
    /// `(self : by)` inside the ambient of the kernel.
    fn colon(&self, by: &Self) -> Result<Self>;

    fn sum(&self, other: &Self) -> Result<Self>;

    fn intersect(&self, other: &Self) -> Result<Self>;
}

/// The least `n ≥ 1` with `J^n = I^n`.
///
/// With periodic powers the pair `(J^n, I^n)` is tracked until it repeats,
/// after which nothing new can happen and the answer is exact. Otherwise the
/// search stops at `n_max`.
pub fn first_equal_power<W: Ideal>(j: &W, i: &W, n_max: usize) -> Result<PowerCheck> {
    let periodic = j.periodic_powers() && i.periodic_powers();
    let (mut jp, mut ip) = (j.clone(), i.clone());
    let mut seen = HashSet::new();
    let mut n = 1;
    loop {
        if jp == ip {
            return Ok(PowerCheck::EqualAt(n));
        }
        if periodic {
            if !seen.insert((jp.clone(), ip.clone())) {
                return Ok(PowerCheck::StrictForAll);
            }
        } else if n >= n_max {
            return Ok(PowerCheck::StrictThrough(n_max));
        }
        jp = jp.product(j)?;
        ip = ip.product(i)?;
        n += 1;
    }
}

/// The least `n ≥ 0` with `J·I^n = I^(n+1)`; `I^0` is the unit ideal, so
/// index 0 means `J = I`.
pub fn reduction_index<W: Ideal>(j: &W, i: &W, n_max: usize) -> Result<ReductionVerdict> {
    if !i.contains(j)? {
        return Err(AlgebraError::Precondition(format!("{j} is not inside {i}")));
    }
    if j == i {
        return Ok(ReductionVerdict::Index(0));
    }
    let periodic = i.periodic_powers();
    let mut seen = HashSet::new();
    let mut p = i.clone();
    let mut n = 1;
    loop {
        let next = p.product(i)?;
        if j.product(&p)? == next {
            return Ok(ReductionVerdict::Index(n));
        }
        if periodic {
            // J·I^n = I^(n+1) depends on I^n alone.
            if !seen.insert(p.clone()) {
                return Ok(ReductionVerdict::Never);
            }
        } else if n >= n_max {
            return Ok(ReductionVerdict::NotWithin(n_max));
        }
        p = next;
        n += 1;
    }
}

impl Ideal for ProfileModule {
    fn contains(&self, other: &Self) -> Result<bool> {
        ProfileModule::contains(self, other)
    }

    fn product(&self, other: &Self) -> Result<Self> {
        ProfileModule::product(self, other)
    }
}

impl ColonIdeal for ProfileModule {
    fn colon(&self, by: &Self) -> Result<Self> {
        ProfileModule::colon(self, by)
    }

    fn sum(&self, other: &Self) -> Result<Self> {
        ProfileModule::sum(self, other)
    }

    fn intersect(&self, other: &Self) -> Result<Self> {
        self.intersection(other)
    }
}

impl Ideal for MonomialIdeal {
    fn contains(&self, other: &Self) -> Result<bool> {
        MonomialIdeal::contains(self, other)
    }

    fn product(&self, other: &Self) -> Result<Self> {
        MonomialIdeal::product(self, other)
    }
}

impl Ideal for FiniteIdeal {
    fn contains(&self, other: &Self) -> Result<bool> {
        FiniteIdeal::contains(self, other)
    }

    fn product(&self, other: &Self) -> Result<Self> {
        FiniteIdeal::product(self, other)
    }

    fn periodic_powers(&self) -> bool {
        true
    }
}

impl ColonIdeal for FiniteIdeal {
    fn colon(&self, by: &Self) -> Result<Self> {
        FiniteIdeal::colon(self, by)
    }

    fn sum(&self, other: &Self) -> Result<Self> {
        FiniteIdeal::sum(self, other)
    }

    fn intersect(&self, other: &Self) -> Result<Self> {
        self.intersection(other)
    }
}

impl Ideal for SplitIdealZ {
    fn contains(&self, other: &Self) -> Result<bool> {
        SplitIdealZ::contains(self, other)
    }

    fn product(&self, other: &Self) -> Result<Self> {
        SplitIdealZ::product(self, other)
    }
}
