use std::fmt;
use std::sync::Arc;

use super::exponents::ExponentSet;
use super::profile::ProfileModule;
use crate::error::{AlgebraError, Result};
use crate::field::{Element, ExtensionField, Subspace};
use crate::predicates::{Checked, Outcome, PowerCheck, Scope, Verdict};

/// A subring of `K[[X]]` given by its profile.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeriesRing {
    profile: ProfileModule,
}

impl SeriesRing {
    /// Checks `1 ∈ P(0)` and `P·P ⊆ P`.
    pub fn new(profile: ProfileModule) -> Result<Self> {
        if !profile.at(0).contains_one() {
            return Err(AlgebraError::NotARing("constant term space does not contain 1".into()));
        }
        if !profile.is_module_over(&profile)? {
            return Err(AlgebraError::NotARing("profile is not closed under multiplication".into()));
        }
        Ok(SeriesRing { profile })
    }

    /// `k[[X^g : g ∈ gens]]` with `K = k`.
    pub fn semigroup(ambient: &Arc<ExtensionField>, gens: &[usize]) -> Result<Self> {
        let set = ExponentSet::semigroup(gens)?;
        SeriesRing::new(ProfileModule::from_exponents(ambient, &set))
    }

    /// `D + X K[[X]]` for a subring `D ⊆ K` given as a subspace.
    pub fn pullback(ambient: &Arc<ExtensionField>, constants: Subspace) -> Result<Self> {
        SeriesRing::new(ProfileModule::new(ambient, vec![constants], Subspace::full(ambient))?)
    }

    pub fn profile(&self) -> &ProfileModule {
        &self.profile
    }

    pub fn ambient(&self) -> &Arc<ExtensionField> {
        self.profile.ambient()
    }

    pub fn is_ideal(&self, i: &ProfileModule) -> Result<bool> {
        Ok(self.profile.contains(i)? && i.is_module_over(&self.profile)?)
    }

    fn require_ideal(&self, i: &ProfileModule) -> Result<()> {
        if self.is_ideal(i)? {
            Ok(())
        } else {
            Err(AlgebraError::NotAnIdeal(i.to_string()))
        }
    }

    /// `a·R` for a homogeneous generator `a = x X^k`.
    pub fn principal(&self, x: &Element, k: usize) -> ProfileModule {
        self.profile.scale(x).shift(k)
    }

    /// `(I : I)`, which always contains `R`.
    pub fn endomorphism_ring(&self, i: &ProfileModule) -> Result<SeriesRing> {
        if i.is_zero() {
            return Err(AlgebraError::Precondition("endomorphism ring of the zero module".into()));
        }
        if !i.is_module_over(&self.profile)? {
            return Err(AlgebraError::NotAModule(i.to_string()));
        }
        SeriesRing::new(i.colon(i)?)
    }

    /// Searches for `a = x X^o` with `I = a·(I:I)`, where `o` is the offset of
    /// `I` and `x` runs over a basis of `I(o)`.
    ///
    /// The search is complete: for graded `I` and `T = (I:I)`, `I = f·T`
    /// forces `I = in(f)·T`, and `T(0)` is a field, so any nonzero element of
    /// `I(o)` generates.
    pub fn is_strongly_stable(&self, i: &ProfileModule) -> Result<StrongStability> {
        self.require_ideal(i)?;
        let t = self.endomorphism_ring(i)?;
        let o = i.offset().expect("nonzero ideal");
        for x in i.at(o).basis() {
            if t.principal(x, o) == *i {
                return Ok(StrongStability::Holds { generator: x.clone(), shift: o, endomorphisms: t });
            }
        }
        Ok(StrongStability::Fails { endomorphisms: t })
    }
}

impl fmt::Display for SeriesRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.profile)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrongStability {
    Holds { generator: Element, shift: usize, endomorphisms: SeriesRing },
    Fails { endomorphisms: SeriesRing },
}

impl StrongStability {
    pub fn holds(&self) -> bool {
        matches!(self, StrongStability::Holds { .. })
    }

    pub fn endomorphisms(&self) -> &SeriesRing {
        match self {
            StrongStability::Holds { endomorphisms, .. } | StrongStability::Fails { endomorphisms } => endomorphisms,
        }
    }

    /// The generator rendered as `x·X^k`.
    pub fn generator_display(&self) -> Option<String> {
        match self {
            StrongStability::Holds { generator, shift, endomorphisms } => {
                let x = endomorphisms.ambient().format_element(generator);
                Some(if x == "1" { format!("X^{shift}") } else { format!("({x})·X^{shift}") })
            }
            StrongStability::Fails { .. } => None,
        }
    }
}

/// Whether some power `W^n`, `2 ≤ n ≤ n_max`, is all of `K`. Fails at the
/// smallest such `n`; the transcript records each power computed. Powers
/// that stop growing below `K` settle the question for every `n`.
pub fn submodule_power_escapes(w: &Subspace, n_max: usize) -> Result<Verdict<Subspace>> {
    if w.is_full() || !w.contains_one() {
        return Err(AlgebraError::Precondition("subspace must be proper and contain 1".into()));
    }
    let mut power = w.clone();
    let mut transcript = Vec::new();
    for n in 2..=n_max.max(2) {
        power = power.product(w)?;
        if power.is_full() {
            transcript.push(Checked { candidate: power, decided: PowerCheck::EqualAt(n) });
            return Ok(Verdict { outcome: Outcome::Fails { witness: w.clone(), n }, transcript });
        }
        let stalled = transcript.last().is_some_and(|c: &Checked<Subspace>| c.candidate == power);
        transcript.push(Checked { candidate: power.clone(), decided: PowerCheck::StrictThrough(n) });
        // 1 ∈ W makes the powers increase, so a repeat is final.
        if stalled || power == *w {
            let last = transcript.last_mut().unwrap();
            last.decided = PowerCheck::StrictForAll;
            return Ok(Verdict { outcome: Outcome::HoldsExhaustive, transcript });
        }
    }
    Ok(Verdict { outcome: Outcome::HoldsWithinBounds { n_max, scope: Scope::Direct }, transcript })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{BaseField, Scalar};

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from_integer(x.into())).collect()
    }

    fn rational_line() -> Arc<ExtensionField> {
        Arc::new(ExtensionField::trivial(BaseField::Rationals))
    }

    fn exps(k: &Arc<ExtensionField>, members: &[usize], from: usize) -> ProfileModule {
        ProfileModule::from_exponents(k, &ExponentSet::from_members(members, Some(from)))
    }

    #[test]
    fn rejects_non_rings() {
        let k = rational_line();
        assert!(SeriesRing::new(exps(&k, &[0, 2], 5)).is_err());
        assert!(SeriesRing::new(exps(&k, &[], 1)).is_err());
        assert!(SeriesRing::semigroup(&k, &[2, 3]).is_ok());
    }

    #[test]
    fn endomorphisms_of_maximal_ideal_in_cusp() {
        let k = rational_line();
        let r = SeriesRing::semigroup(&k, &[2, 3]).unwrap();
        let m = exps(&k, &[], 2);
        let t = r.endomorphism_ring(&m).unwrap();
        assert_eq!(*t.profile(), ProfileModule::full(&k));
        assert!(r.is_strongly_stable(&m).unwrap().holds());
    }

    #[test]
    fn principal_ideal_is_strongly_stable() {
        let k = rational_line();
        let r = SeriesRing::semigroup(&k, &[3, 4]).unwrap();
        let i = r.principal(&k.one(), 3);
        let s = r.is_strongly_stable(&i).unwrap();
        assert_eq!(s.endomorphisms(), &r);
        assert_eq!(s.generator_display().as_deref(), Some("X^3"));
    }

    #[test]
    fn maximal_ideal_of_three_four_is_not_strongly_stable() {
        let k = rational_line();
        let r = SeriesRing::semigroup(&k, &[3, 4]).unwrap();
        let i = exps(&k, &[3, 4], 6);
        let s = r.is_strongly_stable(&i).unwrap();
        assert!(!s.holds());
        assert_eq!(s.endomorphisms().profile(), &exps(&k, &[0], 3));
    }

    #[test]
    fn power_escapes_for_cube_root_plane() {
        let k = Arc::new(ExtensionField::from_minpoly(BaseField::Rationals, &ints(&[-2, 0, 0, 1]), None).unwrap());
        let w = Subspace::span(&k, vec![k.one(), k.basis(1)]);
        let v = submodule_power_escapes(&w, 8).unwrap();
        assert_eq!(v.witness().map(|(_, n)| n), Some(2));
        let line = submodule_power_escapes(&Subspace::scalars(&k), 8).unwrap();
        assert!(line.is_exhaustive());
        assert!(submodule_power_escapes(&Subspace::full(&k), 8).is_err());
    }
}
