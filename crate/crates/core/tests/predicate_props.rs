mod common;

use std::sync::Arc;

use common::{catalogue, fields};
use ideal_lab::finite::{enumerate_ideals, FiniteIdeal};
use ideal_lab::predicates::{
    is_basic, is_big, is_c_ideal, is_reduction, is_upper_big, Candidates, Ideal, IdealHandle, ReductionVerdict,
    RingHandle, Verdict,
};
use ideal_lab::series::SeriesRing;
use proptest::prelude::*;

const N_MAX: usize = 8;

/// `n` is the least exponent with `J^n = I^n`.
fn first_equal_at<W: Ideal>(j: &W, i: &W, n: usize) -> bool {
    j.power(n).unwrap() == i.power(n).unwrap() && (1..n).all(|k| j.power(k).unwrap() != i.power(k).unwrap())
}

/// `n` is the least index with `J·I^n = I^(n+1)`.
fn reduction_at<W: Ideal>(j: &W, i: &W, n: usize) -> bool {
    let at = |k: usize| {
        if k == 0 {
            j == i
        } else {
            j.product(&i.power(k).unwrap()).unwrap() == i.power(k + 1).unwrap()
        }
    };
    at(n) && (0..n).all(|k| !at(k))
}

fn recheck_below<W: Ideal>(v: &Verdict<W>, i: &W, reduction: bool) -> Result<(), TestCaseError> {
    if let Some((j, n)) = v.witness() {
        prop_assert!(i.contains(j).unwrap() && j != i, "{} is not properly inside {}", j, i);
        if reduction {
            prop_assert!(reduction_at(j, i, n), "{} is not a reduction of {} with index {}", j, i, n);
        } else {
            prop_assert!(first_equal_at(j, i, n), "{}^{} vs {}", j, n, i);
        }
    }
    Ok(())
}

fn recheck_above<W: Ideal>(v: &Verdict<W>, i: &W, reduction: bool) -> Result<(), TestCaseError> {
    if let Some((j, n)) = v.witness() {
        prop_assert!(j.contains(i).unwrap() && j != i);
        if reduction {
            prop_assert!(reduction_at(i, j, n));
        } else {
            prop_assert!(first_equal_at(i, j, n));
        }
    }
    Ok(())
}

fn finite_case() -> impl Strategy<Value = (usize, usize)> {
    (0..catalogue().len(), any::<usize>())
}

fn finite_setup(k: usize, x: usize) -> (Vec<FiniteIdeal>, FiniteIdeal) {
    let r = &catalogue()[k].1;
    let all = enumerate_ideals(r, 64).unwrap();
    let i = all[x % all.len()].clone();
    (all, i)
}

fn below(all: &[FiniteIdeal], i: &FiniteIdeal) -> Vec<FiniteIdeal> {
    all.iter().filter(|j| i.contains(j).unwrap()).cloned().collect()
}

fn above(all: &[FiniteIdeal], i: &FiniteIdeal) -> Vec<FiniteIdeal> {
    all.iter().filter(|j| j.contains(i).unwrap()).cloned().collect()
}

fn shuffled<T: Clone>(items: &[T], seed: u64) -> Vec<T> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut out = items.to_vec();
    out.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    out
}

/// Exponent-set ideals of small semigroup rings, as `R·X^a + R·X^b`.
fn series_case() -> impl Strategy<Value = (Vec<usize>, usize, usize)> {
    let gens = prop::sample::select(vec![vec![2, 3], vec![3, 4], vec![3, 4, 5], vec![2, 5], vec![3, 5, 7]]);
    (gens, 0usize..=6, 0usize..=6)
}

fn series_setup(g: &[usize], a: usize, b: usize) -> Option<(RingHandle, IdealHandle)> {
    let k = fields()[0].clone();
    let ring = SeriesRing::semigroup(&k, g).unwrap();
    let s = ring.profile().exponent_set().unwrap();
    if !s.contains(a) || !s.contains(b) {
        return None;
    }
    let one = k.one();
    let i = ring.principal(&one, a).sum(&ring.principal(&one, b)).unwrap();
    Some((RingHandle::Series(ring), IdealHandle::Series(i)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn finite_witnesses_recheck((k, x) in finite_case()) {
        let (all, i) = finite_setup(k, x);
        let (sub, sup) = (Candidates::complete(below(&all, &i)), Candidates::complete(above(&all, &i)));
        recheck_below(&is_big(&i, &sub, N_MAX).unwrap(), &i, false)?;
        recheck_below(&is_basic(&i, &sub, N_MAX).unwrap(), &i, true)?;
        recheck_above(&is_upper_big(&i, &sup, N_MAX).unwrap(), &i, false)?;
        recheck_above(&is_c_ideal(&i, &sup, N_MAX).unwrap(), &i, true)?;
    }

    #[test]
    fn finite_diagram_edges((k, x) in finite_case()) {
        let (all, i) = finite_setup(k, x);
        let (sub, sup) = (Candidates::complete(below(&all, &i)), Candidates::complete(above(&all, &i)));
        let big = is_big(&i, &sub, N_MAX).unwrap();
        let upper = is_upper_big(&i, &sup, N_MAX).unwrap();
        prop_assert!(big.holds() == big.is_exhaustive() && upper.holds() == upper.is_exhaustive());
        if is_basic(&i, &sub, N_MAX).unwrap().holds() {
            prop_assert!(big.holds());
        }
        if is_c_ideal(&i, &sup, N_MAX).unwrap().holds() {
            prop_assert!(upper.holds());
        }
    }

    #[test]
    fn equal_powers_give_reductions((k, x) in finite_case()) {
        let (all, i) = finite_setup(k, x);
        for j in below(&all, &i) {
            if j == i {
                continue;
            }
            let v = is_big(&i, &Candidates::complete(vec![j.clone()]), N_MAX).unwrap();
            if let Some((_, n)) = v.witness() {
                match is_reduction(&j, &i, N_MAX).unwrap() {
                    ReductionVerdict::Index(r) => prop_assert!(r < n, "{} in {}: index {} vs n {}", j, i, r, n),
                    other => prop_assert!(false, "{} in {}: {:?}", j, i, other),
                }
            }
        }
    }

    #[test]
    fn finite_verdicts_ignore_candidate_order((k, x) in finite_case(), seed in any::<u64>()) {
        let (all, i) = finite_setup(k, x);
        let sub = below(&all, &i);
        let v1 = is_big(&i, &Candidates::complete(sub.clone()), N_MAX).unwrap();
        prop_assert_eq!(&v1, &is_big(&i, &Candidates::complete(sub.clone()), N_MAX).unwrap());
        let v2 = is_big(&i, &Candidates::complete(shuffled(&sub, seed)), N_MAX).unwrap();
        prop_assert_eq!(v1.holds(), v2.holds());
        prop_assert_eq!(v1.is_exhaustive(), v2.is_exhaustive());
        prop_assert_eq!(v1.witness().map(|w| w.1), v2.witness().map(|w| w.1));
        recheck_below(&v2, &i, false)?;
        let sup = above(&all, &i);
        let u1 = is_upper_big(&i, &Candidates::complete(sup.clone()), N_MAX).unwrap();
        let u2 = is_upper_big(&i, &Candidates::complete(shuffled(&sup, seed)), N_MAX).unwrap();
        prop_assert_eq!(u1.witness().map(|w| w.1), u2.witness().map(|w| w.1));
        prop_assert_eq!(u1.is_exhaustive(), u2.is_exhaustive());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn series_witnesses_recheck((g, a, b) in series_case(), seed in any::<u64>()) {
        let Some((ring, i)) = series_setup(&g, a, b) else { return Ok(()) };
        let sub = ring.sub_candidates(&i, None).unwrap();
        let v = is_big(&i, &sub, N_MAX).unwrap();
        recheck_below(&v, &i, false)?;
        if let Some((j, n)) = v.witness() {
            let r = is_reduction(j, &i, N_MAX).unwrap().index();
            prop_assert!(r.is_some_and(|r| r < n));
        }
        recheck_below(&is_basic(&i, &sub, N_MAX).unwrap(), &i, true)?;
        let order = Candidates { items: shuffled(&sub.items, seed), scope: sub.scope };
        let v2 = is_big(&i, &order, N_MAX).unwrap();
        prop_assert_eq!(v.holds(), v2.holds());
        prop_assert_eq!(v.witness().map(|w| w.1), v2.witness().map(|w| w.1));
        let sup = ring.super_candidates(&i, None, &Default::default()).unwrap();
        recheck_above(&is_upper_big(&i, &sup, N_MAX).unwrap(), &i, false)?;
        recheck_above(&is_c_ideal(&i, &sup, N_MAX).unwrap(), &i, true)?;
    }
}

#[test]
fn verdicts_are_deterministic_across_runs() {
    let r = Arc::clone(&catalogue().iter().find(|(n, _)| n.contains("⋉")).unwrap().1);
    let all = enumerate_ideals(&r, 64).unwrap();
    let runs: Vec<_> = (0..3)
        .map(|_| all.iter().map(|i| is_big(i, &Candidates::complete(below(&all, i)), N_MAX).unwrap()).collect::<Vec<_>>())
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
}
