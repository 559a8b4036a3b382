use std::fmt;

use crate::error::{AlgebraError, Result};

/// A subset of `N` that is either finite or cofinite, stored as membership
/// flags below the conductor plus the constant value beyond it.
///
/// Normalized: the last flag differs from `tail`, so the conductor is
/// minimal and equality is representation equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentSet {
    below: Vec<bool>,
    tail: bool,
}

impl ExponentSet {
    pub fn new(mut below: Vec<bool>, tail: bool) -> Self {
        while below.last() == Some(&tail) {
            below.pop();
        }
        ExponentSet { below, tail }
    }

    pub fn empty() -> Self {
        ExponentSet::new(Vec::new(), false)
    }

    /// All of `N`.
    pub fn naturals() -> Self {
        ExponentSet::new(Vec::new(), true)
    }

    /// `members ∪ [from, ∞)`; with `from = None` the set is finite.
    pub fn from_members(members: &[usize], from: Option<usize>) -> Self {
        let top = members.iter().map(|m| m + 1).max().unwrap_or(0).max(from.unwrap_or(0));
        let below = (0..top).map(|n| members.contains(&n) || from.is_some_and(|f| n >= f)).collect();
        ExponentSet::new(below, from.is_some())
    }

    /// `{n ≥ from}`.
    pub fn from_exponent(from: usize) -> Self {
        ExponentSet::from_members(&[], Some(from))
    }

    /// The additive monoid generated by `gens`. Must be cofinite, so the
    /// generators need gcd 1 (an empty list gives `{0}`).
    pub fn semigroup(gens: &[usize]) -> Result<Self> {
        let gens: Vec<usize> = gens.iter().copied().filter(|&g| g > 0).collect();
        if gens.is_empty() {
            return Ok(ExponentSet::from_members(&[0], None));
        }
        let g = gens.iter().copied().fold(0, num::integer::gcd);
        if g != 1 {
            return Err(AlgebraError::NotARing(format!("semigroup generators have gcd {g}, not cofinite")));
        }
        let smallest = *gens.iter().min().unwrap();
        let largest = *gens.iter().max().unwrap();
        // The Frobenius number is below smallest * largest.
        let bound = smallest * largest + smallest;
        let mut member = vec![false; bound + 1];
        member[0] = true;
        for n in 1..=bound {
            member[n] = gens.iter().any(|&g| g <= n && member[n - g]);
        }
        Ok(ExponentSet::new(member, true))
    }

    pub fn contains(&self, n: usize) -> bool {
        self.below.get(n).copied().unwrap_or(self.tail)
    }

    pub fn conductor(&self) -> usize {
        self.below.len()
    }

    pub fn is_cofinite(&self) -> bool {
        self.tail
    }

    pub fn is_empty(&self) -> bool {
        !self.tail && self.below.is_empty()
    }

    pub fn min(&self) -> Option<usize> {
        (0..=self.below.len()).find(|&n| self.contains(n)).filter(|_| !self.is_empty())
    }

    /// Members below `bound`.
    pub fn members_below(&self, bound: usize) -> Vec<usize> {
        (0..bound).filter(|&n| self.contains(n)).collect()
    }

    pub fn is_subset(&self, other: &ExponentSet) -> bool {
        let top = self.conductor().max(other.conductor());
        (0..=top).all(|n| !self.contains(n) || other.contains(n))
    }

    pub fn union(&self, other: &ExponentSet) -> ExponentSet {
        let top = self.conductor().max(other.conductor());
        ExponentSet::new((0..top).map(|n| self.contains(n) || other.contains(n)).collect(), self.tail || other.tail)
    }

    pub fn intersection(&self, other: &ExponentSet) -> ExponentSet {
        let top = self.conductor().max(other.conductor());
        ExponentSet::new((0..top).map(|n| self.contains(n) && other.contains(n)).collect(), self.tail && other.tail)
    }

    /// Sumset `{i + j}`.
    pub fn sum(&self, other: &ExponentSet) -> ExponentSet {
        if self.is_empty() || other.is_empty() {
            return ExponentSet::empty();
        }
        let top = self.conductor() + other.conductor();
        let flags: Vec<bool> = (0..=top).map(|n| (0..=n).any(|i| self.contains(i) && other.contains(n - i))).collect();
        let tail = flags[top];
        ExponentSet::new(flags, tail)
    }

    pub fn power(&self, n: usize) -> ExponentSet {
        assert!(n >= 1, "power exponent must be positive");
        (1..n).fold(self.clone(), |acc, _| acc.sum(self))
    }

    /// `{n : n + other ⊆ self}`.
    pub fn colon(&self, other: &ExponentSet) -> Result<ExponentSet> {
        if other.is_empty() {
            return Err(AlgebraError::ColonByZero);
        }
        let c_self = self.conductor();
        let reach = c_self.max(other.conductor());
        let flags: Vec<bool> = (0..=c_self)
            .map(|n| (0..=reach).all(|m| !other.contains(m) || self.contains(n + m)))
            .collect();
        let tail = flags[c_self];
        Ok(ExponentSet::new(flags, tail))
    }

    pub fn shift(&self, k: usize) -> ExponentSet {
        let mut below = vec![false; k];
        below.extend(self.below.iter().copied());
        ExponentSet::new(below, self.tail)
    }
}

impl fmt::Display for ExponentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown = if self.tail { self.conductor() + 2 } else { self.conductor() };
        let parts: Vec<String> = self.members_below(shown).iter().map(|n| n.to_string()).collect();
        if self.tail {
            write!(f, "{{{}, ...}}", parts.join(", "))
        } else {
            write!(f, "{{{}}}", parts.join(", "))
        }
    }
}
