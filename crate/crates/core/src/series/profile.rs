use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::exponents::ExponentSet;
use crate::error::{AlgebraError, Result};
use crate::field::{same_field, Element, ExtensionField, Subspace};

/// A graded module `⊕ P(n) X^n` inside `K[[X]]`: subspaces `P(0..c)` and a
/// tail subspace used for every `n ≥ c`.
///
/// Normalized so that `c` is minimal. Since every module is eventually
/// constant, products, powers and colons below are exact.
#[derive(Debug, Clone)]
pub struct ProfileModule {
    ambient: Arc<ExtensionField>,
    table: Vec<Subspace>,
    tail: Subspace,
}

// Subspace equality already compares ambient fields.
impl PartialEq for ProfileModule {
    fn eq(&self, other: &Self) -> bool {
        self.tail == other.tail && self.table == other.table
    }
}

impl Eq for ProfileModule {}

impl Hash for ProfileModule {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.table.hash(state);
        self.tail.hash(state);
    }
}

impl ProfileModule {
    pub fn new(ambient: &Arc<ExtensionField>, mut table: Vec<Subspace>, tail: Subspace) -> Result<Self> {
        for s in table.iter().chain(std::iter::once(&tail)) {
            if !same_field(ambient, s.ambient()) {
                return Err(AlgebraError::AmbientMismatch);
            }
        }
        while table.last() == Some(&tail) {
            table.pop();
        }
        Ok(ProfileModule { ambient: ambient.clone(), table, tail })
    }

    fn from_parts(ambient: &Arc<ExtensionField>, table: Vec<Subspace>, tail: Subspace) -> Self {
        ProfileModule::new(ambient, table, tail).expect("parts share the ambient field")
    }

    pub fn zero(ambient: &Arc<ExtensionField>) -> Self {
        ProfileModule::from_parts(ambient, Vec::new(), Subspace::zero(ambient))
    }

    /// `K[[X]]` itself.
    pub fn full(ambient: &Arc<ExtensionField>) -> Self {
        ProfileModule::from_parts(ambient, Vec::new(), Subspace::full(ambient))
    }

    /// `Σ_{n ∈ S} K X^n`.
    pub fn from_exponents(ambient: &Arc<ExtensionField>, set: &ExponentSet) -> Self {
        let pick = |on: bool| if on { Subspace::full(ambient) } else { Subspace::zero(ambient) };
        let table = (0..set.conductor()).map(|n| pick(set.contains(n))).collect();
        ProfileModule::from_parts(ambient, table, pick(set.is_cofinite()))
    }

    /// The exponent set, when every coefficient space is `0` or `K`.
    pub fn exponent_set(&self) -> Option<ExponentSet> {
        let flag = |s: &Subspace| {
            if s.is_zero() {
                Some(false)
            } else if s.is_full() {
                Some(true)
            } else {
                None
            }
        };
        let below = self.table.iter().map(flag).collect::<Option<Vec<bool>>>()?;
        Some(ExponentSet::new(below, flag(&self.tail)?))
    }

    pub fn ambient(&self) -> &Arc<ExtensionField> {
        &self.ambient
    }

    pub fn table(&self) -> &[Subspace] {
        &self.table
    }

    pub fn tail(&self) -> &Subspace {
        &self.tail
    }

    /// Coefficient space at exponent `n`.
    pub fn at(&self, n: usize) -> &Subspace {
        self.table.get(n).unwrap_or(&self.tail)
    }

    pub fn conductor(&self) -> usize {
        self.table.len()
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty() && self.tail.is_zero()
    }

    /// Smallest exponent with a nonzero coefficient space.
    pub fn offset(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        (0..=self.conductor()).find(|&n| !self.at(n).is_zero())
    }

    fn check(&self, other: &ProfileModule) -> Result<()> {
        if same_field(&self.ambient, &other.ambient) {
            Ok(())
        } else {
            Err(AlgebraError::AmbientMismatch)
        }
    }

    fn exponent_pair(&self, other: &ProfileModule) -> Option<(ExponentSet, ExponentSet)> {
        if self.ambient.degree() == 1 {
            Some((self.exponent_set()?, other.exponent_set()?))
        } else {
            None
        }
    }

    /// `other ⊆ self`, exponent by exponent.
    pub fn contains(&self, other: &ProfileModule) -> Result<bool> {
        self.check(other)?;
        let top = self.conductor().max(other.conductor());
        for n in 0..=top {
            if !self.at(n).contains(other.at(n))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn pointwise(
        &self,
        other: &ProfileModule,
        op: impl Fn(&Subspace, &Subspace) -> Result<Subspace>,
    ) -> Result<ProfileModule> {
        self.check(other)?;
        let top = self.conductor().max(other.conductor());
        let table = (0..top).map(|n| op(self.at(n), other.at(n))).collect::<Result<_>>()?;
        Ok(ProfileModule::from_parts(&self.ambient, table, op(&self.tail, &other.tail)?))
    }

    pub fn sum(&self, other: &ProfileModule) -> Result<ProfileModule> {
        self.pointwise(other, |a, b| a.sum(b))
    }

    pub fn intersection(&self, other: &ProfileModule) -> Result<ProfileModule> {
        self.pointwise(other, |a, b| a.intersection(b))
    }

    /// Product module; uses sumset arithmetic when the ambient field is the
    /// base field itself.
    pub fn product(&self, other: &ProfileModule) -> Result<ProfileModule> {
        self.check(other)?;
        match self.exponent_pair(other) {
            Some((a, b)) => Ok(ProfileModule::from_exponents(&self.ambient, &a.sum(&b))),
            None => self.graded_product(other),
        }
    }

    /// `(P·Q)(n) = Σ_{i+j=n} P(i)·Q(j)`, always through subspace arithmetic.
    /// Exponents `≥ c_P + c_Q` all give the same sum.
    pub fn graded_product(&self, other: &ProfileModule) -> Result<ProfileModule> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(ProfileModule::zero(&self.ambient));
        }
        let (cp, cq) = (self.conductor(), other.conductor());
        // P(i)Q(j) only depends on (min(i, cp), min(j, cq)).
        let mut pair = vec![vec![None; cq + 1]; cp + 1];
        for (i, row) in pair.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = Some(self.at(i).product(other.at(j))?);
            }
        }
        let top = cp + cq;
        let mut values = Vec::with_capacity(top + 1);
        for n in 0..=top {
            let parts = (0..=n).map(|i| pair[i.min(cp)][(n - i).min(cq)].as_ref().unwrap());
            values.push(Subspace::sum_all(&self.ambient, parts)?);
        }
        let tail = values.pop().unwrap();
        Ok(ProfileModule::from_parts(&self.ambient, values, tail))
    }

    pub fn power(&self, n: usize) -> Result<ProfileModule> {
        if n == 0 {
            return Err(AlgebraError::Precondition("power exponent must be positive".into()));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `(P : Q) ∩ K[[X]] = {f : f·Q ⊆ P}`; sumset arithmetic for degree-one
    /// ambients, subspace arithmetic otherwise.
    pub fn colon(&self, by: &ProfileModule) -> Result<ProfileModule> {
        self.check(by)?;
        if by.is_zero() {
            return Err(AlgebraError::ColonByZero);
        }
        match self.exponent_pair(by) {
            Some((a, b)) => Ok(ProfileModule::from_exponents(&self.ambient, &a.colon(&b)?)),
            None => self.graded_colon(by),
        }
    }

    /// `(P:Q)(n) = ∩_m (P(n+m) : Q(m))` over the window `m ≤ c_P + c_Q`,
    /// tabulated up to `n = c_P + c_Q` and then re-checked one further
    /// window of width `c_Q` out.
    pub fn graded_colon(&self, by: &ProfileModule) -> Result<ProfileModule> {
        self.check(by)?;
        if by.is_zero() {
            return Err(AlgebraError::ColonByZero);
        }
        let (cp, cq) = (self.conductor(), by.conductor());
        let reach = cp + cq;
        let at_exponent = |n: usize| -> Result<Subspace> {
            let mut acc = Subspace::full(&self.ambient);
            for m in 0..=reach {
                if acc.is_zero() {
                    break;
                }
                acc = acc.intersection(&self.at(n + m).colon(by.at(m))?)?;
            }
            Ok(acc)
        };
        let mut values = (0..=reach).map(at_exponent).collect::<Result<Vec<_>>>()?;
        let tail = values.pop().unwrap();
        if at_exponent(reach + cq + 1)? != tail {
            return Err(AlgebraError::InexactColon);
        }
        Ok(ProfileModule::from_parts(&self.ambient, values, tail))
    }

    /// `X^k · P`.
    pub fn shift(&self, k: usize) -> ProfileModule {
        let mut table = vec![Subspace::zero(&self.ambient); k];
        table.extend(self.table.iter().cloned());
        ProfileModule::from_parts(&self.ambient, table, self.tail.clone())
    }

    /// `x · P` for a field element `x`.
    pub fn scale(&self, x: &Element) -> ProfileModule {
        let table = self.table.iter().map(|s| s.scale(x)).collect();
        ProfileModule::from_parts(&self.ambient, table, self.tail.scale(x))
    }

    /// Whether `ring · self ⊆ self`.
    pub fn is_module_over(&self, ring: &ProfileModule) -> Result<bool> {
        self.contains(&ring.product(self)?)
    }
}

impl fmt::Display for ProfileModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ambient.degree() == 1 {
            return write!(f, "{}", self.exponent_set().expect("degree one"));
        }
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self
            .table
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(n, s)| format!("X^{n}·{s}"))
            .collect();
        if !self.tail.is_zero() {
            parts.push(format!("X^{{≥{}}}·{}", self.conductor(), self.tail));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{BaseField, Scalar};

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from_integer(x.into())).collect()
    }

    fn cube_root_two() -> Arc<ExtensionField> {
        Arc::new(ExtensionField::from_minpoly(BaseField::Rationals, &ints(&[-2, 0, 0, 1]), None).unwrap())
    }

    /// R = Q + X K[[X]], M = X K[[X]], I = X(W + M) with W = span{1, θ}.
    fn cubic_setup() -> (Arc<ExtensionField>, ProfileModule, ProfileModule, ProfileModule) {
        let k = cube_root_two();
        let r = ProfileModule::new(&k, vec![Subspace::scalars(&k)], Subspace::full(&k)).unwrap();
        let m = ProfileModule::full(&k).shift(1);
        let w = Subspace::span(&k, vec![k.basis(0), k.basis(1)]);
        let i = ProfileModule::new(&k, vec![Subspace::zero(&k), w], Subspace::full(&k)).unwrap();
        (k, r, m, i)
    }

    #[test]
    fn normalization_trims_table() {
        let k = cube_root_two();
        let p = ProfileModule::new(&k, vec![Subspace::zero(&k), Subspace::full(&k), Subspace::full(&k)], Subspace::full(&k)).unwrap();
        assert_eq!(p.conductor(), 1);
        assert_eq!(p, ProfileModule::full(&k).shift(1));
        assert!(ProfileModule::zero(&k).table().is_empty());
    }

    #[test]
    fn strict_containment_of_the_plane_module() {
        let (_, r, m, i) = cubic_setup();
        assert!(m.contains(&i).unwrap());
        assert_ne!(m, i);
        assert!(!i.contains(&m).unwrap());
        assert!(i.is_module_over(&r).unwrap());
        assert!(m.is_module_over(&r).unwrap());
    }

    #[test]
    fn square_of_plane_module_equals_square_of_maximal() {
        let (k, r, m, i) = cubic_setup();
        let i2 = i.product(&i).unwrap();
        assert_eq!(i2, m.product(&m).unwrap());
        assert_eq!(i2, ProfileModule::full(&k).shift(2));
        assert_eq!(i.product(&r).unwrap(), i);
    }

    #[test]
    fn colon_by_unit_ring_and_zero() {
        let (k, r, _, i) = cubic_setup();
        assert_eq!(i.colon(&r).unwrap(), i);
        assert_eq!(i.colon(&ProfileModule::zero(&k)), Err(AlgebraError::ColonByZero));
    }

    #[test]
    fn exponent_set_examples_through_profiles() {
        let q = Arc::new(ExtensionField::trivial(BaseField::Rationals));
        let n = ProfileModule::from_exponents(&q, &ExponentSet::from_exponent(3));
        assert_eq!(n.power(2).unwrap(), ProfileModule::from_exponents(&q, &ExponentSet::from_exponent(6)));
        let r = ProfileModule::from_exponents(&q, &ExponentSet::semigroup(&[3, 4]).unwrap());
        let m = ProfileModule::from_exponents(&q, &ExponentSet::from_members(&[3, 4], Some(6)));
        let t = r.colon(&m).unwrap();
        assert_eq!(t.exponent_set().unwrap(), ExponentSet::semigroup(&[3, 4, 5]).unwrap());
        assert_eq!(r.graded_colon(&m).unwrap(), t);
    }

    #[test]
    fn offset_and_shift() {
        let (k, _, _, i) = cubic_setup();
        assert_eq!(i.offset(), Some(1));
        assert_eq!(i.shift(2).offset(), Some(3));
        assert_eq!(ProfileModule::zero(&k).offset(), None);
    }
}
