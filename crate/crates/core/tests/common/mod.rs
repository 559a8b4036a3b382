#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use ideal_lab::field::{BaseField, ExtensionField, Scalar};
use ideal_lab::finite::{FiniteIdeal, FiniteModule, FiniteRing};

pub fn arc(r: FiniteRing) -> Arc<FiniteRing> {
    Arc::new(r)
}

pub fn zmod(n: u64) -> Arc<FiniteRing> {
    arc(FiniteRing::zmod(n).unwrap())
}

pub fn product(a: &Arc<FiniteRing>, b: &Arc<FiniteRing>) -> Arc<FiniteRing> {
    arc(FiniteRing::product(a, b).unwrap())
}

pub fn idealize(a: &Arc<FiniteRing>, e: FiniteModule) -> Arc<FiniteRing> {
    arc(FiniteRing::idealization(a, &Arc::new(e)).unwrap())
}

/// `A / (g)` as an `A`-module.
pub fn quotient(a: &Arc<FiniteRing>, g: usize) -> FiniteModule {
    FiniteModule::quotient(a, &FiniteIdeal::principal(a, g)).unwrap()
}

/// Idealizations `A ⋉ E` of order at most 16, with the parts.
pub fn idealizations() -> Vec<(Arc<FiniteRing>, Arc<FiniteRing>)> {
    let (f2, f3, z4, z8) = (zmod(2), zmod(3), zmod(4), zmod(8));
    let reg = |a: &Arc<FiniteRing>| FiniteModule::regular(a);
    let sum = |parts: Vec<FiniteModule>| FiniteModule::direct_sum(&parts.iter().collect::<Vec<_>>()).unwrap();
    let f2f2 = product(&f2, &f2);
    let one_zero = f2f2.index_of("(1,0)").unwrap();
    vec![
        (f2.clone(), idealize(&f2, reg(&f2))),
        (f2.clone(), idealize(&f2, sum(vec![reg(&f2), reg(&f2)]))),
        (f2.clone(), idealize(&f2, sum(vec![reg(&f2), reg(&f2), reg(&f2)]))),
        (f3.clone(), idealize(&f3, reg(&f3))),
        (z4.clone(), idealize(&z4, reg(&z4))),
        (z4.clone(), idealize(&z4, quotient(&z4, 2))),
        (z4.clone(), idealize(&z4, sum(vec![quotient(&z4, 2), quotient(&z4, 2)]))),
        (z8.clone(), idealize(&z8, quotient(&z8, 2))),
        (f2f2.clone(), idealize(&f2f2, reg(&f2f2))),
        (f2f2.clone(), idealize(&f2f2, quotient(&f2f2, one_zero))),
    ]
}

/// Every finite ring of order at most 16 the kernel can build from `Z/n`,
/// products and idealizations, with a name for messages.
pub fn catalogue() -> &'static [(String, Arc<FiniteRing>)] {
    static CATALOGUE: OnceLock<Vec<(String, Arc<FiniteRing>)>> = OnceLock::new();
    CATALOGUE.get_or_init(build_catalogue)
}

fn build_catalogue() -> Vec<(String, Arc<FiniteRing>)> {
    let mut out: Vec<Arc<FiniteRing>> = (2..=16).map(zmod).collect();
    for a in 2..=8u64 {
        for b in a..=16 / a {
            out.push(product(&zmod(a), &zmod(b)));
        }
    }
    let f2 = zmod(2);
    let f2f2 = product(&f2, &f2);
    out.push(product(&f2f2, &f2));
    out.push(product(&f2f2, &zmod(3)));
    out.push(product(&f2f2, &zmod(4)));
    out.push(product(&f2f2, &f2f2));
    let ideal: Vec<Arc<FiniteRing>> = idealizations().into_iter().map(|(_, r)| r).collect();
    let dual = ideal[0].clone();
    out.extend(ideal);
    out.push(product(&f2, &dual));
    out.push(product(&zmod(3), &dual));
    out.push(product(&zmod(4), &dual));
    out.push(product(&dual, &dual));
    out.into_iter().map(|r| (r.to_string(), r)).collect()
}

/// `IJ` by closing the pairwise products under addition, straight from the
/// ring tables.
pub fn product_oracle(i: &FiniteIdeal, j: &FiniteIdeal) -> BTreeSet<usize> {
    let r = i.ring();
    let mut set: BTreeSet<usize> = BTreeSet::from([r.zero()]);
    for a in i.members() {
        for b in j.members() {
            set.insert(r.mul(a, b));
        }
    }
    loop {
        let mut grown = set.clone();
        for &x in &set {
            for &y in &set {
                grown.insert(r.add(x, y));
            }
        }
        if grown == set {
            return set;
        }
        set = grown;
    }
}

/// Cofinite exponent sets as explicit membership up to a bound, everything
/// at or beyond `from` counted in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Naive {
    pub below: BTreeSet<usize>,
    pub from: Option<usize>,
}

impl Naive {
    pub fn contains(&self, n: usize) -> bool {
        self.below.contains(&n) || self.from.is_some_and(|f| n >= f)
    }

    /// Elements below `bound`.
    pub fn upto(&self, bound: usize) -> Vec<usize> {
        (0..bound).filter(|&n| self.contains(n)).collect()
    }

    pub fn sum(&self, other: &Naive, bound: usize) -> Vec<bool> {
        let (a, b) = (self.upto(bound), other.upto(bound));
        let mut out = vec![false; bound];
        for x in &a {
            for y in &b {
                if x + y < bound {
                    out[x + y] = true;
                }
            }
        }
        out
    }

    /// `{n : n + other ⊆ self}` below `bound`; `other` is checked through
    /// `probe`, past which every shift lands in the tail of `self`.
    pub fn colon(&self, other: &Naive, bound: usize, probe: usize) -> Vec<bool> {
        (0..bound).map(|n| other.upto(probe).iter().all(|q| self.contains(n + q))).collect()
    }
}

pub fn q(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

/// A handful of fields of degree 1 to 4 over `Q` and small primes.
pub fn fields() -> Vec<Arc<ExtensionField>> {
    let qq = BaseField::Rationals;
    let p7 = BaseField::prime(7).unwrap();
    let p5 = BaseField::prime(5).unwrap();
    vec![
        Arc::new(ExtensionField::trivial(qq)),
        Arc::new(ExtensionField::from_minpoly(qq, &[q(-2), q(0), q(1)], None).unwrap()),
        Arc::new(ExtensionField::from_minpoly(qq, &[q(-2), q(0), q(0), q(1)], None).unwrap()),
        Arc::new(ExtensionField::biquadratic(qq, 2, 3).unwrap()),
        Arc::new(ExtensionField::from_minpoly(p5, &[q(-2), q(0), q(1)], None).unwrap()),
        Arc::new(ExtensionField::from_minpoly(p7, &[q(-2), q(0), q(0), q(1)], None).unwrap()),
    ]
}

/// Every exponent vector of length `dim` with coordinates at most `bound`.
pub fn box_vectors(dim: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        out = out.into_iter().flat_map(|v| (0..=bound).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out
}

fn below(g: &[u32], m: &[u32]) -> bool {
    g.iter().zip(m).all(|(a, b)| a <= b)
}

/// Monomials `m` in the box with `m = a + b` for some `a ∈ (gi)`, `b ∈ (gj)`,
/// found by trying every split of `m`.
pub fn monomial_product_oracle(gi: &[Vec<u32>], gj: &[Vec<u32>], dim: usize, bound: u32) -> Vec<(Vec<u32>, bool)> {
    let in_i = |v: &[u32]| gi.iter().any(|g| below(g, v));
    let in_j = |v: &[u32]| gj.iter().any(|g| below(g, v));
    let all = box_vectors(dim, bound);
    all.iter()
        .map(|m| {
            let hit = all
                .iter()
                .filter(|a| below(a, m))
                .any(|a| in_i(a) && in_j(&m.iter().zip(a.iter()).map(|(x, y)| x - y).collect::<Vec<_>>()));
            (m.clone(), hit)
        })
        .collect()
}
