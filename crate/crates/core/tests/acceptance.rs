//! One line per acceptance criterion; exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use common::{catalogue, monomial_product_oracle, product_oracle, q, Naive};
use ideal_lab::cli::lattice_report;
use ideal_lab::field::{BaseField, ExtensionField, Subspace};
use ideal_lab::finite::{enumerate_ideals, split_ideal, CyclicProduct, FiniteIdeal, FiniteModule, FiniteRing, SplitIdealZ};
use ideal_lab::monomial::{polynomial_ring_witness, prufer_witness, MonomialIdeal};
use ideal_lab::predicates::{
    is_basic, is_big, is_c_ideal, is_reduction, is_upper_big, lattice_table, ratliff_rush, Candidates, IdealHandle,
    LatticeTable, ReductionVerdict, RingHandle, SuperAmbient,
};
use ideal_lab::series::{submodule_power_escapes, ExponentSet, ProfileModule, SeriesRing};
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn cube_root_of_two(base: BaseField) -> Arc<ExtensionField> {
    Arc::new(ExtensionField::from_minpoly(base, &[q(-2), q(0), q(0), q(1)], None).unwrap())
}

/// `K + X·L[[X]]`-style pieces: `M = X L[[X]]` and `X(W + M)`.
fn maximal_and_shifted(k: &Arc<ExtensionField>, w: Subspace) -> (ProfileModule, ProfileModule) {
    let m = ProfileModule::new(k, vec![Subspace::zero(k)], Subspace::full(k)).unwrap();
    let i = ProfileModule::new(k, vec![Subspace::zero(k), w], Subspace::full(k)).unwrap();
    (m, i)
}

fn series(p: &ProfileModule) -> IdealHandle {
    IdealHandle::Series(p.clone())
}

fn criterion_1() -> Outcome {
    let k = cube_root_of_two(BaseField::Rationals);
    let w = Subspace::span(&k, vec![k.one(), k.basis(1)]);
    let (m, i) = maximal_and_shifted(&k, w.clone());
    ensure!(ok(m.contains(&i))? && m != i, "M does not strictly contain I");
    ensure!(ok(i.power(2))? == ok(m.power(2))?, "I^2 != M^2");
    let esc = ok(submodule_power_escapes(&w, 8))?;
    ensure!(esc.witness().map(|w| w.1) == Some(2), "W^2 is not the whole field");
    let v = ok(is_upper_big(&i, &Candidates::supplied(vec![m.clone()]), 8))?;
    match v.witness() {
        Some((j, 2)) if *j == m => Ok("upper big fails with witness M at n = 2".into()),
        _ => Err(format!("unexpected verdict: {}", v.outcome)),
    }
}

fn criterion_2() -> Outcome {
    let k = cube_root_of_two(BaseField::prime(7).unwrap());
    let ring = ok(SeriesRing::pullback(&k, Subspace::scalars(&k)))?;
    let w = Subspace::span(&k, vec![k.one(), k.basis(1)]);
    let (m, i) = maximal_and_shifted(&k, w);
    let handle = RingHandle::Series(ring);
    let sub = ok(handle.sub_candidates(&series(&i), Some(4)))?;
    let count = sub.items.len();
    let big = ok(is_big(&series(&i), &sub, 6))?;
    ensure!(!big.fails(), "is_big fails over F_7: {}", big.outcome);
    ensure!(count > 0, "no subideal candidates in the window");
    let sup = ok(handle.super_candidates(&series(&i), Some(4), &SuperAmbient::Ring))?;
    let upper = ok(is_upper_big(&series(&i), &sup, 6))?;
    ensure!(upper.witness() == Some((&series(&m), 2)), "upper big: {}", upper.outcome);
    Ok(format!("is_big holds on all {count} subideals in window 4 for n <= 6; upper big fails with M at n = 2"))
}

fn criterion_3() -> Outcome {
    let k = Arc::new(ExtensionField::trivial(BaseField::prime(2).unwrap()));
    let ring = ok(SeriesRing::semigroup(&k, &[3, 4]))?;
    let i = ProfileModule::from_exponents(&k, &ExponentSet::from_exponent(6));
    let j0 = ProfileModule::from_exponents(&k, &ExponentSet::from_members(&[6, 7], Some(9)));
    ensure!(ok(i.contains(&j0))? && i != j0, "J0 is not strictly inside I");
    ensure!(ok(j0.power(2))? == ok(i.power(2))?, "J0^2 != I^2");
    let big = ok(is_big(&i, &Candidates::supplied(vec![j0.clone()]), 8))?;
    ensure!(big.witness() == Some((&j0, 2)), "is_big: {}", big.outcome);
    let handle = RingHandle::Series(ring);
    let mut sizes = Vec::new();
    for ambient in [SuperAmbient::Ring, SuperAmbient::PowerSeries] {
        let sup = ok(handle.super_candidates(&series(&i), Some(12), &ambient))?;
        sizes.push(sup.items.len());
        let v = ok(is_upper_big(&series(&i), &sup, 6))?;
        ensure!(!v.fails(), "upper big fails: {}", v.outcome);
    }
    Ok(format!(
        "J0 witnesses is_big failing at n = 2; upper big holds for n <= 6 over {} ideals and {} R-modules in window 12",
        sizes[0], sizes[1]
    ))
}

fn criterion_4() -> Outcome {
    let k = Arc::new(ExtensionField::trivial(BaseField::Rationals));
    let ring = ok(SeriesRing::semigroup(&k, &[2, 3]))?;
    let m = ProfileModule::from_exponents(&k, &ExponentSet::from_exponent(2));
    let x2r = ring.principal(&k.one(), 2);
    ensure!(ok(is_reduction(&x2r, &m, 8))? == ReductionVerdict::Index(1), "X^2 R is not a reduction of index 1");
    let handle = RingHandle::Series(ring.clone());
    let basic = ok(is_basic(&series(&m), &ok(handle.sub_candidates(&series(&m), Some(6)))?, 8))?;
    ensure!(basic.witness().map(|w| w.0) == Some(&series(&x2r)), "is_basic: {}", basic.outcome);
    let sup = ok(handle.super_candidates(&series(&x2r), Some(6), &SuperAmbient::Ring))?;
    let c = ok(is_c_ideal(&series(&x2r), &sup, 8))?;
    ensure!(c.witness().map(|w| w.0) == Some(&series(&m)), "is_c_ideal: {}", c.outcome);
    let rr = ok(ratliff_rush(&m, ring.profile(), 8))?;
    ensure!(rr.closure == m && rr.exact, "RR(M) = {}", rr.closure);
    ensure!(rr.stabilized_at == Some(1), "stabilized at {:?}", rr.stabilized_at);
    Ok("index 1; basic fails with X^2 R; C-ideal fails with M; RR(M) = M from the first term".into())
}

fn check_witness_pair(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<(), String> {
    ensure!(ok(j.contains(i))? && i != j, "{i} is not strictly inside {j}");
    ensure!(!ok(i.member(&[2, 2]))? && ok(j.member(&[2, 2]))?, "(2,2) does not separate {i} and {j}");
    let (i2, j2) = (ok(i.power(2))?, ok(j.power(2))?);
    ensure!(i2 == j2, "squares differ");
    for (m, expected) in monomial_product_oracle(i.gens(), i.gens(), 2, 10) {
        ensure!(ok(i2.member(&m))? == expected, "I^2 membership of {m:?}");
        ensure!(ok(j2.member(&m))? == expected, "J^2 membership of {m:?}");
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let (i, j) = prufer_witness();
    check_witness_pair(&i, &j)?;
    let (i, j) = polynomial_ring_witness();
    check_witness_pair(&i, &j)?;
    Ok("both pairs: (2,2) separates, squares equal, 121 memberships agree with the split oracle".into())
}

fn criterion_6() -> Outcome {
    let k = Arc::new(ExtensionField::biquadratic(BaseField::Rationals, 2, 3).unwrap());
    let ring = ok(SeriesRing::pullback(&k, Subspace::scalars(&k)))?;
    let w = Subspace::span(&k, vec![k.one(), k.basis(1), k.basis(2)]);
    let esc = ok(submodule_power_escapes(&w, 8))?;
    ensure!(esc.witness().map(|w| w.1) == Some(2), "W does not escape at n = 2: {}", esc.outcome);
    let (m, i) = maximal_and_shifted(&k, w);
    ensure!(ok(m.contains(&i))? && m != i && ok(i.power(2))? == ok(m.power(2))?, "X(W+M) is not a square-equal subideal");
    let v = ok(is_big(&m, &Candidates::supplied(vec![i.clone()]), 8))?;
    ensure!(v.witness() == Some((&i, 2)), "is_big: {}", v.outcome);
    ensure!(ok(ring.is_strongly_stable(&m))?.holds(), "M is not strongly stable");
    Ok("W^2 = K; is_big(M) fails with X(W+M) at n = 2; M strongly stable".into())
}

fn criterion_7() -> Outcome {
    let k = Arc::new(ExtensionField::trivial(BaseField::Rationals));
    let ring = ok(SeriesRing::semigroup(&k, &[2, 3]))?;
    let s = ring.profile().exponent_set().unwrap();
    let mut ideals = BTreeSet::new();
    for c in 0..=10usize {
        for mask in 0u32..(1 << c) {
            if c > 0 && mask & (1 << (c - 1)) != 0 {
                continue;
            }
            let members: Vec<usize> = (0..c).filter(|n| mask & (1 << n) != 0).collect();
            let set = ExponentSet::from_members(&members, Some(c));
            if set.is_subset(&s) && set.sum(&s).is_subset(&set) {
                ideals.insert(format!("{set}"));
                let p = ProfileModule::from_exponents(&k, &set);
                ensure!(ok(ring.is_strongly_stable(&p))?.holds(), "{set} is not strongly stable");
            }
        }
    }
    let t = ok(SeriesRing::semigroup(&k, &[3, 4, 5]))?;
    let n = ProfileModule::from_exponents(&k, &ExponentSet::from_exponent(3));
    let i = ProfileModule::from_exponents(&k, &ExponentSet::from_members(&[3, 4], Some(6)));
    ensure!(ok(t.is_ideal(&i))? && ok(t.is_ideal(&n))?, "I or N is not an ideal of T");
    ensure!(ok(n.contains(&i))? && n != i && ok(i.power(2))? == ok(n.power(2))?, "I, N do not have equal squares");
    let v = ok(is_big(&n, &Candidates::supplied(vec![i.clone()]), 8))?;
    ensure!(v.witness() == Some((&i, 2)), "is_big(N): {}", v.outcome);
    Ok(format!("{} ideals of k[[X^2,X^3]] strongly stable; is_big(N) fails with I at n = 2 in T", ideals.len()))
}

fn zmod(n: u64) -> Arc<FiniteRing> {
    Arc::new(FiniteRing::zmod(n).unwrap())
}

fn idealize(a: &Arc<FiniteRing>, e: FiniteModule) -> Result<Arc<FiniteRing>, String> {
    Ok(Arc::new(ok(FiniteRing::idealization(a, &Arc::new(e)))?))
}

fn decomposition_squares(r: &Arc<FiniteRing>) -> Result<usize, String> {
    let all = ok(enumerate_ideals(r, 64))?;
    for l in &all {
        let (i_l, f_l) = ok(l.decompose())?;
        let split = ok(split_ideal(r, &i_l, &f_l))?;
        ensure!(ok(l.power(2))? == ok(split.power(2))?, "{l} in {r}: L^2 != (I_L ⋉ F_L)^2");
    }
    Ok(all.len())
}

fn criterion_8() -> Outcome {
    let (f2, f3, z4) = (zmod(2), zmod(3), zmod(4));
    let two = FiniteIdeal::principal(&z4, 2);
    let rings = [
        idealize(&f2, FiniteModule::regular(&f2))?,
        idealize(&f3, FiniteModule::regular(&f3))?,
        idealize(&z4, ok(FiniteModule::quotient(&z4, &two))?)?,
    ];
    let mut counts = Vec::new();
    for r in &rings {
        let (_, e) = ok(r.idealization_parts())?;
        ensure!(e.is_simple(), "{e} is not simple");
        counts.push(format!("{r}: {}", decomposition_squares(r)?));
    }
    Ok(format!("every L checked ({})", counts.join(", ")))
}

fn row<'a>(t: &'a LatticeTable, i: &FiniteIdeal) -> &'a ideal_lab::predicates::LatticeRow {
    t.rows.iter().find(|r| r.ideal == *i).expect("ideal in lattice")
}

fn criterion_9() -> Outcome {
    let a = zmod(4);
    let m = FiniteIdeal::principal(&a, 2);
    let r = idealize(&a, ok(FiniteModule::quotient(&a, &m))?)?;
    let (_, e) = ok(r.idealization_parts())?;
    let e = e.clone();
    decomposition_squares(&r)?;
    let (ta, tr) = (ok(lattice_table(&a, 64))?, ok(lattice_table(&r, 64))?);
    let mut refuted = Vec::new();
    for l in ok(enumerate_ideals(&r, 64))?.iter().filter(|l| !l.is_zero()) {
        let (i_l, f_l) = ok(l.decompose())?;
        let split = ok(split_ideal(&r, &i_l, &f_l))?;
        let literal = f_l.is_full() && row(&ta, &i_l).upper_big;
        let upper = row(&tr, l).upper_big;
        ensure!(upper == (literal && split == *l), "{l}: upper big {upper}");
        if upper != literal {
            refuted.push(l.to_string());
        }
    }
    let full = ideal_lab::finite::Submodule::full(&e);
    for i in ok(enumerate_ideals(&a, 64))? {
        let ie = ok(split_ideal(&r, &i, &full))?;
        if ok(m.contains(&i))? {
            ensure!(!row(&tr, &ie).big, "{i} ⋉ E is big");
        } else {
            ensure!(row(&tr, &ie).big == row(&ta, &i).big, "{i} ⋉ E big mismatch");
        }
    }
    Ok(format!(
        "squares agree; L upper big iff L = I_L ⋉ E with I_L upper big; big clauses hold. \
         The converse with only F_L = E is refuted by {}",
        refuted.join(", ")
    ))
}

fn criterion_10() -> Outcome {
    let e = ok(CyclicProduct::new(vec![2]))?;
    let j = ok(SplitIdealZ::new(&e, 2, &[]))?;
    let i = SplitIdealZ::full(&e, 2);
    ensure!(ok(i.contains(&j))? && i != j, "2Z ⋉ 0 is not strictly inside 2Z ⋉ Z/2");
    ensure!(ok(j.product(&j))? == ok(i.product(&i))?, "squares differ");
    let dual = ok(lattice_report("idealization(gf(2), regular)", None))?;
    let oe = dual.ideals.iter().find(|r| r.size == 2).ok_or("no ideal 0 ⋉ E")?;
    ensure!(oe.upper_big && !oe.big, "0 ⋉ E: big {} upper big {}", oe.big, oe.upper_big);
    let prod = ok(lattice_report("product(gf(2), gf(2))", None))?;
    ensure!(prod.big_ideal_ring && prod.ideals.len() == 4, "F2 x F2 is not reported a big ideal ring");
    Ok("split squares agree; 0 ⋉ E upper big, not big; F2 x F2 a big ideal ring".into())
}

fn criterion_11() -> Outcome {
    let mut edges = 0;
    for (name, r) in catalogue() {
        let t = ok(lattice_table(r, 64))?;
        for row in &t.rows {
            ensure!(!row.basic || row.big, "{} basic, not big, in {name}", row.ideal);
            ensure!(!row.c_ideal || row.upper_big, "{} C-ideal, not upper big, in {name}", row.ideal);
            edges += 1;
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let mut monomial = 0;
    while monomial < 100 {
        let d = rng.gen_range(1..=3);
        let mut gens = || (0..rng.gen_range(1..=4)).map(|_| (0..d).map(|_| rng.gen_range(0..=4)).collect()).collect();
        let (a, b): (Vec<Vec<u32>>, Vec<Vec<u32>>) = (gens(), gens());
        let ij = ok(ok(MonomialIdeal::new(d, a.clone()))?.product(&ok(MonomialIdeal::new(d, b.clone()))?))?;
        for (m, expected) in monomial_product_oracle(&a, &b, d, 10) {
            ensure!(ok(ij.member(&m))? == expected, "monomial product at {m:?}");
        }
        monomial += 1;
    }
    let k = Arc::new(ExtensionField::trivial(BaseField::Rationals));
    let mut exponent = 0;
    while exponent < 100 {
        let mut draw = || {
            let from = rng.gen_range(0..=12);
            let below: Vec<usize> = (0..from).filter(|_| rng.gen_bool(0.5)).collect();
            let p = ProfileModule::from_exponents(&k, &ExponentSet::from_members(&below, Some(from)));
            (p, Naive { below: below.into_iter().collect(), from: Some(from) })
        };
        let ((p, np), (r, nr)) = (draw(), draw());
        let (fp, fr) = (np.from.unwrap(), nr.from.unwrap());
        let bound = fp + fr + 3;
        let prod = ok(p.product(&r))?.exponent_set().unwrap();
        let colon = ok(p.colon(&r))?.exponent_set().unwrap();
        let (sum, quot) = (np.sum(&nr, bound), np.colon(&nr, bound, fp + 1));
        for n in 0..bound {
            ensure!(prod.contains(n) == sum[n], "exponent product at {n}");
            ensure!(colon.contains(n) == quot[n], "exponent colon at {n}");
        }
        exponent += 1;
    }
    let cat = catalogue();
    let mut finite = 0;
    while finite < 100 {
        let r = &cat[rng.gen_range(0..cat.len())].1;
        let all = ok(enumerate_ideals(r, 64))?;
        let (i, j) = (&all[rng.gen_range(0..all.len())], &all[rng.gen_range(0..all.len())]);
        let got: BTreeSet<usize> = ok(i.product(j))?.members().into_iter().collect();
        ensure!(got == product_oracle(i, j), "finite product {i} * {j} in {r}");
        finite += 1;
    }
    Ok(format!(
        "diagram edges on {edges} ideals of {} rings; oracles agree on {monomial} monomial, {exponent} exponent-set, {finite} finite pairs",
        cat.len()
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("cube root of 2 over Q: I not upper big", criterion_1),
        ("cube root of 2 over F_7: exhaustive window", criterion_2),
        ("k[[X^3,X^4]]: X^6 k[[X]] upper big, not big", criterion_3),
        ("k[[X^2,X^3]]: reductions and Ratliff-Rush", criterion_4),
        ("monomial witnesses", criterion_5),
        ("biquadratic residue field: M strongly stable, not big", criterion_6),
        ("strong stability in k[[X^2,X^3]], N not big in T", criterion_7),
        ("decomposition squares for simple E", criterion_8),
        ("Z/4 ⋉ Z/2 exhaustively", criterion_9),
        ("split ideals and small lattices", criterion_10),
        ("property suites and oracles", criterion_11),
    ];
    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2}: PASS  {title}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {title}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
