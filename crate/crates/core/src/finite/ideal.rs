use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use bitvec::prelude::*;

use super::module::Submodule;
use super::ring::FiniteRing;
use crate::error::{AlgebraError, Result};

/// Default bound on ring size for exhaustive ideal enumeration.
pub const DEFAULT_MAX_SIZE: usize = 64;

/// An ideal of a [`FiniteRing`], as a member set.
#[derive(Debug, Clone)]
pub struct FiniteIdeal {
    ring: Arc<FiniteRing>,
    members: BitVec,
}

impl PartialEq for FiniteIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
    }
}

impl Eq for FiniteIdeal {}

impl Hash for FiniteIdeal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl FiniteIdeal {
    pub fn zero(ring: &Arc<FiniteRing>) -> Self {
        let mut members = bitvec![0; ring.size()];
        members.set(ring.zero(), true);
        FiniteIdeal { ring: ring.clone(), members }
    }

    pub fn unit(ring: &Arc<FiniteRing>) -> Self {
        FiniteIdeal { ring: ring.clone(), members: bitvec![1; ring.size()] }
    }

    /// `R·x`.
    pub fn principal(ring: &Arc<FiniteRing>, x: usize) -> Self {
        let mut members = bitvec![0; ring.size()];
        for r in 0..ring.size() {
            members.set(ring.mul(r, x), true);
        }
        FiniteIdeal { ring: ring.clone(), members }
    }

    pub fn generated(ring: &Arc<FiniteRing>, elements: &[usize]) -> Self {
        let mut acc = FiniteIdeal::zero(ring);
        for &x in elements {
            if !acc.members[x] {
                acc = acc.sum_unchecked(&FiniteIdeal::principal(ring, x));
            }
        }
        acc
    }

    /// Member indices given as a set, rejected unless they form an ideal.
    pub fn from_members(ring: &Arc<FiniteRing>, members: &[usize]) -> Result<Self> {
        let i = FiniteIdeal::generated(ring, members);
        let distinct: HashSet<&usize> = members.iter().collect();
        if i.size() != distinct.len() {
            let labels: Vec<&str> = members.iter().map(|&m| ring.label(m)).collect();
            return Err(AlgebraError::NotAnIdeal(format!("{{{}}}", labels.join(", "))));
        }
        Ok(i)
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn members(&self) -> Vec<usize> {
        self.members.iter_ones().collect()
    }

    pub fn contains_element(&self, x: usize) -> bool {
        self.members[x]
    }

    pub fn size(&self) -> usize {
        self.members.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.size() == 1
    }

    pub fn is_unit(&self) -> bool {
        self.members.all()
    }

    fn check(&self, other: &FiniteIdeal) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &FiniteIdeal) -> Result<bool> {
        self.check(other)?;
        Ok(other.members.iter_ones().all(|x| self.members[x]))
    }

    fn sum_unchecked(&self, other: &FiniteIdeal) -> FiniteIdeal {
        let r = &self.ring;
        let mut members = bitvec![0; r.size()];
        for a in self.members.iter_ones() {
            for b in other.members.iter_ones() {
                members.set(r.add(a, b), true);
            }
        }
        FiniteIdeal { ring: r.clone(), members }
    }

    pub fn sum(&self, other: &FiniteIdeal) -> Result<FiniteIdeal> {
        self.check(other)?;
        Ok(self.sum_unchecked(other))
    }

    pub fn intersection(&self, other: &FiniteIdeal) -> Result<FiniteIdeal> {
        self.check(other)?;
        Ok(FiniteIdeal { ring: self.ring.clone(), members: self.members.clone() & other.members.clone() })
    }

    /// The ideal generated by all products `a·b`.
    pub fn product(&self, other: &FiniteIdeal) -> Result<FiniteIdeal> {
        self.check(other)?;
        let r = &self.ring;
        let mut products = bitvec![0; r.size()];
        for a in self.members.iter_ones() {
            for b in other.members.iter_ones() {
                products.set(r.mul(a, b), true);
            }
        }
        Ok(FiniteIdeal::generated(r, &products.iter_ones().collect::<Vec<_>>()))
    }

    pub fn power(&self, n: usize) -> Result<FiniteIdeal> {
        if n == 0 {
            return Err(AlgebraError::Precondition("power exponent must be positive".into()));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `(self : by) = {x : x·by ⊆ self}`.
    pub fn colon(&self, by: &FiniteIdeal) -> Result<FiniteIdeal> {
        self.check(by)?;
        let r = &self.ring;
        let mut members = bitvec![0; r.size()];
        for x in 0..r.size() {
            members.set(x, by.members.iter_ones().all(|b| self.members[r.mul(x, b)]));
        }
        Ok(FiniteIdeal { ring: r.clone(), members })
    }

    pub fn is_nilpotent(&self) -> bool {
        let mut p = self.clone();
        loop {
            if p.is_zero() {
                return true;
            }
            let next = p.product(self).expect("same ring");
            if next == p {
                return false;
            }
            p = next;
        }
    }

    /// A generating set, greedily in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut acc = FiniteIdeal::zero(&self.ring);
        for x in self.members.iter_ones() {
            if !acc.members[x] {
                gens.push(x);
                acc = acc.sum_unchecked(&FiniteIdeal::principal(&self.ring, x));
            }
        }
        gens
    }

    /// `(g1, g2, …)` in element labels.
    pub fn generator_form(&self) -> String {
        let gens = self.generators();
        if gens.is_empty() {
            return "(0)".into();
        }
        let labels: Vec<&str> = gens.iter().map(|&g| self.ring.label(g)).collect();
        format!("({})", labels.join(", "))
    }

    /// `(I_L, F_L)`: the projections of `L ⊆ A ⋉ E` to `A` and to `E`.
    pub fn decompose(&self) -> Result<(FiniteIdeal, Submodule)> {
        let (a, e) = self.ring.idealization_parts()?;
        let mut first = Vec::new();
        let mut second = Vec::new();
        for x in self.members.iter_ones() {
            let (i, f) = self.ring.pair(x)?;
            first.push(i);
            second.push(f);
        }
        let i_l = FiniteIdeal::from_members(a, &first)?;
        let f_l = Submodule::from_members(e, &second)?;
        Ok((i_l, f_l))
    }
}

/// `I ⋉ F` inside `ring = A ⋉ E`; needs `I·E ⊆ F`.
pub fn split_ideal(ring: &Arc<FiniteRing>, i: &FiniteIdeal, f: &Submodule) -> Result<FiniteIdeal> {
    let (a, e) = ring.idealization_parts()?;
    if **i.ring() != **a {
        return Err(AlgebraError::RingMismatch);
    }
    if **f.module() != **e {
        return Err(AlgebraError::ModuleMismatch);
    }
    if !f.contains(&Submodule::full(e).scale_by(i)) {
        return Err(AlgebraError::NotAnIdeal(format!("{i} ⋉ {f}: I·E is not inside F")));
    }
    let mut members = bitvec![0; ring.size()];
    for x in i.members() {
        for y in f.members() {
            members.set(ring.pair_index(x, y)?, true);
        }
    }
    Ok(FiniteIdeal { ring: ring.clone(), members })
}

/// Every ideal of `ring`, ordered by size and then by member set.
pub fn enumerate_ideals(ring: &Arc<FiniteRing>, max_size: usize) -> Result<Vec<FiniteIdeal>> {
    if ring.size() > max_size {
        return Err(AlgebraError::SizeBound { size: ring.size(), bound: max_size });
    }
    let principal: Vec<FiniteIdeal> = (0..ring.size()).map(|x| FiniteIdeal::principal(ring, x)).collect();
    let mut found = vec![FiniteIdeal::zero(ring)];
    let mut seen: HashSet<FiniteIdeal> = found.iter().cloned().collect();
    let mut next = 0;
    // Every ideal is a sum of principal ideals, so closing under sums with
    // them reaches the whole lattice.
    while next < found.len() {
        let base = found[next].clone();
        for p in &principal {
            let s = base.sum_unchecked(p);
            if seen.insert(s.clone()) {
                found.push(s);
            }
        }
        next += 1;
    }
    found.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.members().cmp(&b.members())));
    Ok(found)
}

impl fmt::Display for FiniteIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.members.iter_ones().map(|x| self.ring.label(x)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}
