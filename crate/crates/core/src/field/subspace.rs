use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::base::{BaseField, Scalar};
use super::extension::{Element, ExtensionField};
use super::linalg::{self, Matrix};
use crate::error::{AlgebraError, Result};

/// A base-field linear subspace of an extension field, stored as the unique
/// reduced row-echelon basis. Equality of values is equality of subspaces.
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient: Arc<ExtensionField>,
    basis: Matrix,
}

pub(crate) fn same_field(a: &Arc<ExtensionField>, b: &Arc<ExtensionField>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis && same_field(&self.ambient, &other.ambient)
    }
}

impl Eq for Subspace {}

impl Hash for Subspace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.basis.hash(state);
    }
}

impl Subspace {
    pub fn zero(ambient: &Arc<ExtensionField>) -> Self {
        Subspace { ambient: ambient.clone(), basis: Vec::new() }
    }

    pub fn full(ambient: &Arc<ExtensionField>) -> Self {
        let basis = (0..ambient.degree()).map(|i| ambient.basis(i)).collect();
        Subspace { ambient: ambient.clone(), basis }
    }

    /// Span of the base-field line through `1`.
    pub fn scalars(ambient: &Arc<ExtensionField>) -> Self {
        Subspace::span(ambient, vec![ambient.one()])
    }

    pub fn span(ambient: &Arc<ExtensionField>, vectors: Vec<Element>) -> Self {
        let (basis, _) = linalg::rref(&ambient.base(), vectors, ambient.degree());
        Subspace { ambient: ambient.clone(), basis }
    }

    /// Span of vectors given in raw coordinates, embedded into the base field.
    pub fn try_span(ambient: &Arc<ExtensionField>, vectors: &[Vec<Scalar>]) -> Result<Self> {
        let vs = vectors.iter().map(|v| ambient.element(v)).collect::<Result<Vec<_>>>()?;
        Ok(Subspace::span(ambient, vs))
    }

    pub fn ambient(&self) -> &Arc<ExtensionField> {
        &self.ambient
    }

    pub fn base(&self) -> BaseField {
        self.ambient.base()
    }

    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient.degree()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if same_field(&self.ambient, &other.ambient) {
            Ok(())
        } else {
            Err(AlgebraError::AmbientMismatch)
        }
    }

    pub fn contains_vector(&self, v: &Element) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.clone());
        linalg::rank(&self.base(), rows, self.ambient.degree()) == self.dim()
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        if other.dim() > self.dim() {
            return Ok(false);
        }
        Ok(self.sum(other)?.dim() == self.dim())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if other.is_zero() || self.is_full() {
            return Ok(self.clone());
        }
        if self.is_zero() || other.is_full() {
            return Ok(other.clone());
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Ok(Subspace::span(&self.ambient, rows))
    }

    /// Sum of many subspaces in one elimination.
    pub fn sum_all<'a>(ambient: &Arc<ExtensionField>, parts: impl IntoIterator<Item = &'a Subspace>) -> Result<Subspace> {
        let mut rows = Vec::new();
        for p in parts {
            if !same_field(ambient, &p.ambient) {
                return Err(AlgebraError::AmbientMismatch);
            }
            if p.is_full() {
                return Ok(Subspace::full(ambient));
            }
            rows.extend(p.basis.iter().cloned());
        }
        Ok(Subspace::span(ambient, rows))
    }

    /// Span of all products `u * w`.
    pub fn product(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(&self.ambient));
        }
        let k = &self.ambient;
        let rows = self
            .basis
            .iter()
            .flat_map(|u| other.basis.iter().map(move |w| k.mul(u, w)))
            .collect();
        Ok(Subspace::span(k, rows))
    }

    /// `x * self` for a field element `x`.
    pub fn scale(&self, x: &Element) -> Subspace {
        let k = &self.ambient;
        Subspace::span(k, self.basis.iter().map(|u| k.mul(x, u)).collect())
    }

    /// Basis of the annihilator `{y : u·y = 0 for all basis rows u}` under
    /// the coordinate dot product; a vector lies in `self` iff it is
    /// orthogonal to every annihilator vector.
    fn annihilator(&self) -> Matrix {
        linalg::nullspace(&self.base(), self.basis.clone(), self.ambient.degree())
    }

    /// `(self : other) = {x ∈ K : x * other ⊆ self}`.
    pub fn colon(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let k = &self.ambient;
        let base = k.base();
        let d = k.degree();
        if other.is_zero() || self.is_full() {
            return Ok(Subspace::full(k));
        }
        let ann = self.annihilator();
        let mut constraints: Matrix = Vec::new();
        for w in &other.basis {
            // x ↦ x * w has matrix m; need y · (m x) = 0, i.e. (yᵀ m) x = 0.
            let m = k.multiplication_matrix(w);
            for y in &ann {
                let row: Vec<Scalar> = (0..d)
                    .map(|c| (0..d).fold(base.zero(), |acc, r| base.add(&acc, &base.mul(&y[r], &m[r][c]))))
                    .collect();
                constraints.push(row);
            }
        }
        Ok(Subspace::span(k, linalg::nullspace(&base, constraints, d)))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if self.is_zero() || other.is_full() {
            return Ok(self.clone());
        }
        if other.is_zero() || self.is_full() {
            return Ok(other.clone());
        }
        let mut constraints = self.annihilator();
        constraints.extend(other.annihilator());
        Ok(Subspace::span(&self.ambient, linalg::nullspace(&self.base(), constraints, self.ambient.degree())))
    }

    pub fn contains_one(&self) -> bool {
        self.contains_vector(&self.ambient.one())
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.is_full() {
            return write!(f, "K");
        }
        let parts: Vec<String> = self.basis.iter().map(|v| self.ambient.format_element(v)).collect();
        write!(f, "span{{{}}}", parts.join(", "))
    }
}

/// Every subspace `S` with `lower ⊆ S ⊆ upper`, in a fixed order. The
/// lattice is finite when the base field is finite or `dim(upper/lower) ≤ 1`.
pub fn intermediate_subspaces(lower: &Subspace, upper: &Subspace) -> Result<Vec<Subspace>> {
    if !upper.contains(lower)? {
        return Ok(Vec::new());
    }
    let k = lower.ambient().clone();
    let base = k.base();
    // Complement of lower inside upper, taken greedily from upper's basis.
    let mut complement: Vec<Element> = Vec::new();
    let mut acc = lower.clone();
    for v in upper.basis() {
        if !acc.contains_vector(v) {
            complement.push(v.clone());
            acc = acc.sum(&Subspace::span(&k, vec![v.clone()]))?;
        }
    }
    let r = complement.len();
    if r == 0 {
        return Ok(vec![lower.clone()]);
    }
    if r == 1 {
        return Ok(vec![lower.clone(), upper.clone()]);
    }
    let elements: Vec<Scalar> = match base.elements() {
        Some(it) => it.collect(),
        None => return Err(AlgebraError::InfiniteLattice),
    };
    let mut out = Vec::new();
    for coeff_rows in rref_matrices(&elements, r) {
        let vecs: Vec<Element> = coeff_rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&complement)
                    .fold(k.zero(), |acc, (c, v)| k.add(&acc, &k.scale(c, v)))
            })
            .chain(lower.basis().iter().cloned())
            .collect();
        out.push(Subspace::span(&k, vecs));
    }
    Ok(out)
}

/// All reduced row-echelon matrices with `r` columns over the listed field
/// elements, ordered by rank, then pivot set, then free entries.
fn rref_matrices(elements: &[Scalar], r: usize) -> Vec<Matrix> {
    let zero = elements[0].clone();
    let one = elements[1].clone();
    let mut out = Vec::new();
    for rank in 0..=r {
        for pivots in combinations(r, rank) {
            // free slots: (row i, column j) with j > pivot_i and j not a pivot
            let slots: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(i, &p)| ((p + 1)..r).filter(|j| !pivots.contains(j)).map(move |j| (i, j)))
                .collect();
            let q = elements.len();
            let total = q.checked_pow(slots.len() as u32).expect("subspace lattice too large");
            for code in 0..total {
                let mut m = vec![vec![zero.clone(); r]; rank];
                for (i, &p) in pivots.iter().enumerate() {
                    m[i][p] = one.clone();
                }
                let mut c = code;
                for &(i, j) in &slots {
                    m[i][j] = elements[c % q].clone();
                    c /= q;
                }
                out.push(m);
            }
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}
