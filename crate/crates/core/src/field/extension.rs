use std::fmt;

use num::bigint::BigInt;
use num::integer::Integer;
use num::{One, Signed, ToPrimitive, Zero};

use super::base::{format_scalar, BaseField, Scalar};
use super::linalg::{self, Matrix};
use crate::error::{AlgebraError, Result};

/// An element of an [`ExtensionField`]: coordinates in the field's basis.
pub type Element = Vec<Scalar>;

/// A finite simple extension `K` of a base field, given by structure
/// constants on a basis whose first vector is `1`.
///
/// `table[i][j]` holds the coordinates of `e_i * e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionField {
    base: BaseField,
    degree: usize,
    names: Vec<String>,
    table: Vec<Vec<Element>>,
    minpoly: Option<Vec<Scalar>>,
}

const MAX_DEGREE: usize = 4;
// Bound on |constant term| for divisor search over Q.
const MAX_SEARCH: i64 = 1_000_000_000_000;

impl ExtensionField {
    /// The base field itself, viewed as a degree-1 extension.
    pub fn trivial(base: BaseField) -> Self {
        ExtensionField {
            base,
            degree: 1,
            names: vec!["1".into()],
            table: vec![vec![vec![base.one()]]],
            minpoly: None,
        }
    }

    /// `base[x]/(minpoly)` with basis `1, θ, …, θ^{d-1}`. Coefficients run
    /// from the constant term upward and the polynomial must be monic.
    pub fn from_minpoly(base: BaseField, minpoly: &[Scalar], names: Option<Vec<String>>) -> Result<Self> {
        let coeffs: Vec<Scalar> = minpoly.iter().map(|c| base.embed(c)).collect::<Result<_>>()?;
        if coeffs.len() < 2 || !coeffs.last().unwrap().is_one() {
            return Err(AlgebraError::NotMonic);
        }
        let d = coeffs.len() - 1;
        if d > MAX_DEGREE {
            return Err(AlgebraError::UnsupportedDegree(d));
        }
        if !is_irreducible(&base, &coeffs)? {
            return Err(AlgebraError::Reducible);
        }
        let names = match names {
            Some(n) if n.len() == d => n,
            Some(n) => return Err(AlgebraError::DimensionMismatch { expected: d, found: n.len() }),
            None => (0..d)
                .map(|i| match i {
                    0 => "1".to_string(),
                    1 => "θ".to_string(),
                    _ => format!("θ^{i}"),
                })
                .collect(),
        };
        // powers[k] = θ^k reduced, for k < 2d - 1
        let mut powers: Vec<Element> = Vec::with_capacity(2 * d);
        for k in 0..(2 * d - 1) {
            let v = if k < d {
                unit_vector(&base, d, k)
            } else {
                // θ^k = θ * θ^{k-1}; shift then reduce the θ^d coefficient.
                let prev = &powers[k - 1];
                let mut shifted = vec![base.zero(); d];
                shifted[1..].clone_from_slice(&prev[..d - 1]);
                let top = prev[d - 1].clone();
                for i in 0..d {
                    let t = base.mul(&top, &coeffs[i]);
                    shifted[i] = base.sub(&shifted[i], &t);
                }
                shifted
            };
            powers.push(v);
        }
        let table = (0..d).map(|i| (0..d).map(|j| powers[i + j].clone()).collect()).collect();
        Ok(ExtensionField { base, degree: d, names, table, minpoly: Some(coeffs) })
    }

    /// Builds a field from an explicit multiplication table on a basis with
    /// `e_0 = 1`. The table must be commutative and associative, and the
    /// algebra must be a field; the latter is certified by finding an
    /// element whose minimal polynomial is irreducible of full degree.
    pub fn from_table(base: BaseField, names: Vec<String>, table: Vec<Vec<Element>>) -> Result<Self> {
        let d = names.len();
        if d == 0 || d > MAX_DEGREE {
            return Err(AlgebraError::UnsupportedDegree(d));
        }
        if table.len() != d || table.iter().any(|row| row.len() != d || row.iter().any(|v| v.len() != d)) {
            return Err(AlgebraError::NotAField("table shape does not match basis".into()));
        }
        let table: Vec<Vec<Element>> = table
            .iter()
            .map(|row| row.iter().map(|v| v.iter().map(|c| base.embed(c)).collect::<Result<_>>()).collect())
            .collect::<Result<_>>()?;
        let field = ExtensionField { base, degree: d, names, table, minpoly: None };
        for j in 0..d {
            if field.table[0][j] != unit_vector(&base, d, j) {
                return Err(AlgebraError::NotAField("first basis vector is not the identity".into()));
            }
        }
        for i in 0..d {
            for j in 0..d {
                if field.table[i][j] != field.table[j][i] {
                    return Err(AlgebraError::NotAField(format!("e{i}*e{j} is not commutative")));
                }
                for k in 0..d {
                    let left = field.mul(&field.table[i][j], &field.basis(k));
                    let right = field.mul(&field.basis(i), &field.table[j][k]);
                    if left != right {
                        return Err(AlgebraError::NotAField(format!("(e{i}e{j})e{k} is not associative")));
                    }
                }
            }
        }
        if d > 1 && field.find_primitive_element().is_none() {
            return Err(AlgebraError::NotAField("no element with an irreducible minimal polynomial of full degree".into()));
        }
        Ok(field)
    }

    /// `base(√a, √b)` on the basis `1, √a, √b, √ab`.
    pub fn biquadratic(base: BaseField, a: i64, b: i64) -> Result<Self> {
        let z = || base.zero();
        let c = |x: i64| base.from_int(x);
        let vec4 = |v: [Scalar; 4]| v.to_vec();
        let e = |i: usize| unit_vector(&base, 4, i);
        let mut table = vec![vec![Vec::new(); 4]; 4];
        for j in 0..4 {
            table[0][j] = e(j);
            table[j][0] = e(j);
        }
        table[1][1] = vec4([c(a), z(), z(), z()]);
        table[2][2] = vec4([c(b), z(), z(), z()]);
        table[3][3] = vec4([c(a * b), z(), z(), z()]);
        table[1][2] = e(3);
        table[2][1] = e(3);
        table[1][3] = vec4([z(), z(), c(a), z()]);
        table[3][1] = table[1][3].clone();
        table[2][3] = vec4([z(), c(b), z(), z()]);
        table[3][2] = table[2][3].clone();
        let names = vec!["1".into(), format!("√{a}"), format!("√{b}"), format!("√{}", a * b)];
        Self::from_table(base, names, table)
    }

    fn find_primitive_element(&self) -> Option<(Element, Vec<Scalar>)> {
        let d = self.degree;
        let mut coeffs = vec![0i64; d];
        // Small integer combinations of e_1..e_{d-1}, odometer over {-1, 0, 1, 2}.
        let digits = [0i64, 1, 2, -1];
        let total = digits.len().pow((d - 1) as u32);
        for code in 1..total {
            let mut c = code;
            for slot in coeffs.iter_mut().skip(1) {
                *slot = digits[c % digits.len()];
                c /= digits.len();
            }
            let alpha: Element = coeffs.iter().map(|&x| self.base.from_int(x)).collect();
            if let Some(mp) = self.minimal_polynomial(&alpha) {
                if mp.len() == d + 1 && is_irreducible(&self.base, &mp).unwrap_or(false) {
                    return Some((alpha, mp));
                }
            }
        }
        None
    }

    /// Minimal polynomial (monic, constant term first) of `alpha` over the
    /// base field.
    pub fn minimal_polynomial(&self, alpha: &Element) -> Option<Vec<Scalar>> {
        let d = self.degree;
        let mut powers = vec![self.one()];
        for k in 1..=d {
            let next = self.mul(&powers[k - 1], alpha);
            powers.push(next);
            // columns: α^0 .. α^{k-1}; solve Σ a_i α^i = α^k
            let a: Matrix = (0..d).map(|r| (0..k).map(|c| powers[c][r].clone()).collect()).collect();
            if let Some(sol) = linalg::solve(&self.base, &a, &powers[k], k) {
                let mut poly: Vec<Scalar> = sol.iter().map(|x| self.base.neg(x)).collect();
                poly.push(self.base.one());
                return Some(poly);
            }
        }
        None
    }

    pub fn base(&self) -> BaseField {
        self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn minpoly(&self) -> Option<&[Scalar]> {
        self.minpoly.as_deref()
    }

    pub fn structure_table(&self) -> &[Vec<Element>] {
        &self.table
    }

    pub fn zero(&self) -> Element {
        vec![self.base.zero(); self.degree]
    }

    pub fn one(&self) -> Element {
        self.basis(0)
    }

    pub fn basis(&self, i: usize) -> Element {
        unit_vector(&self.base, self.degree, i)
    }

    pub fn is_zero(&self, x: &Element) -> bool {
        x.iter().all(Zero::is_zero)
    }

    pub fn element(&self, coords: &[Scalar]) -> Result<Element> {
        if coords.len() != self.degree {
            return Err(AlgebraError::DimensionMismatch { expected: self.degree, found: coords.len() });
        }
        coords.iter().map(|c| self.base.embed(c)).collect()
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        x.iter().zip(y).map(|(a, b)| self.base.add(a, b)).collect()
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        x.iter().zip(y).map(|(a, b)| self.base.sub(a, b)).collect()
    }

    pub fn scale(&self, c: &Scalar, x: &Element) -> Element {
        x.iter().map(|a| self.base.mul(c, a)).collect()
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let d = self.degree;
        let mut out = self.zero();
        for i in 0..d {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if y[j].is_zero() {
                    continue;
                }
                let c = self.base.mul(&x[i], &y[j]);
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] = self.base.add(&out[k], &self.base.mul(&c, t));
                    }
                }
            }
        }
        out
    }

    /// Matrix (acting on coordinate columns) of `y ↦ y * w`.
    pub fn multiplication_matrix(&self, w: &Element) -> Matrix {
        let d = self.degree;
        let cols: Vec<Element> = (0..d).map(|k| self.mul(&self.basis(k), w)).collect();
        (0..d).map(|r| (0..d).map(|c| cols[c][r].clone()).collect()).collect()
    }

    pub fn inv(&self, x: &Element) -> Result<Element> {
        if self.is_zero(x) {
            return Err(AlgebraError::DivisionByZero);
        }
        let m = self.multiplication_matrix(x);
        linalg::solve(&self.base, &m, &self.one(), self.degree).ok_or(AlgebraError::DivisionByZero)
    }

    pub fn format_element(&self, x: &Element) -> String {
        let terms: Vec<String> = x
            .iter()
            .zip(&self.names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, name)| {
                if name == "1" {
                    format_scalar(c)
                } else if c.is_one() {
                    name.clone()
                } else {
                    format!("{}{}", format_scalar(c), name)
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Display for ExtensionField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 1 {
            write!(f, "{}", self.base)
        } else {
            write!(f, "{}({})", self.base, self.names[1..].join(","))
        }
    }
}

fn unit_vector(base: &BaseField, d: usize, i: usize) -> Element {
    let mut v = vec![base.zero(); d];
    v[i] = base.one();
    v
}

/// Irreducibility of a monic polynomial of degree at most 4: root search
/// for all degrees, plus a search for monic quadratic factors at degree 4.
pub fn is_irreducible(base: &BaseField, monic: &[Scalar]) -> Result<bool> {
    let d = monic.len() - 1;
    if d == 0 {
        return Ok(false);
    }
    if d == 1 {
        return Ok(true);
    }
    if d > MAX_DEGREE {
        return Err(AlgebraError::UnsupportedDegree(d));
    }
    match base {
        BaseField::Prime(p) => {
            let has_root = base.elements().unwrap().any(|x| eval(base, monic, &x).is_zero());
            if has_root {
                return Ok(false);
            }
            if d == 4 {
                for a in 0..*p {
                    for b in 0..*p {
                        let q = vec![base.from_int(b as i64), base.from_int(a as i64), base.one()];
                        if divides(base, &q, monic) {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        }
        BaseField::Rationals => {
            let g = integral_monic(monic);
            let g0 = g[0].clone();
            if g0.is_zero() {
                return Ok(false);
            }
            let divs = divisors(&g0)?;
            for r in &divs {
                for s in [r.clone(), -r.clone()] {
                    if eval_int(&g, &s).is_zero() {
                        return Ok(false);
                    }
                }
            }
            if d == 4 {
                // (x^2 + a x + b)(x^2 + c x + e) with b e = g0.
                for b in divs.iter().flat_map(|r| [r.clone(), -r.clone()]) {
                    let e = &g0 / &b;
                    // a + c = g3, a c = g2 - b - e, a e + b c = g1
                    let sum = g[3].clone();
                    let prod = &g[2] - &b - &e;
                    let disc = &sum * &sum - BigInt::from(4) * &prod;
                    if disc.is_negative() {
                        continue;
                    }
                    let root = disc.sqrt();
                    if &root * &root != disc {
                        continue;
                    }
                    for sign in [BigInt::one(), -BigInt::one()] {
                        let twice_a = &sum + &sign * &root;
                        if twice_a.is_odd() {
                            continue;
                        }
                        let a = twice_a / 2;
                        let c = &sum - &a;
                        if &a * &e + &b * &c == g[1] {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        }
    }
}

fn eval(base: &BaseField, poly: &[Scalar], x: &Scalar) -> Scalar {
    poly.iter().rev().fold(base.zero(), |acc, c| base.add(&base.mul(&acc, x), c))
}

fn eval_int(poly: &[BigInt], x: &BigInt) -> BigInt {
    poly.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn divides(base: &BaseField, divisor: &[Scalar], poly: &[Scalar]) -> bool {
    // divisor is monic
    let mut rem = poly.to_vec();
    let dd = divisor.len() - 1;
    while rem.len() > dd {
        let lead = rem.pop().unwrap();
        let shift = rem.len() - dd;
        for i in 0..dd {
            let t = base.mul(&lead, &divisor[i]);
            rem[shift + i] = base.sub(&rem[shift + i], &t);
        }
    }
    rem.iter().all(Zero::is_zero)
}

/// `D^d f(x / D)` for the lcm `D` of the denominators: monic with integer
/// coefficients and the same factorization pattern.
fn integral_monic(monic: &[Scalar]) -> Vec<BigInt> {
    let d = monic.len() - 1;
    let den = monic.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    (0..=d)
        .map(|k| {
            let scaled = &monic[k] * Scalar::from_integer(num::pow(den.clone(), d - k));
            scaled.to_integer()
        })
        .collect()
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs();
    let Some(small) = n.to_i64().filter(|&v| v <= MAX_SEARCH) else {
        return Err(AlgebraError::CoefficientTooLarge(n.to_string()));
    };
    let mut out = Vec::new();
    let mut k = 1i64;
    while k * k <= small {
        if small % k == 0 {
            out.push(BigInt::from(k));
            if k * k != small {
                out.push(BigInt::from(small / k));
            }
        }
        k += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from_integer(x.into())).collect()
    }

    #[test]
    fn cube_root_of_two() {
        let k = ExtensionField::from_minpoly(BaseField::Rationals, &ints(&[-2, 0, 0, 1]), None).unwrap();
        let theta = k.basis(1);
        let cube = k.mul(&k.mul(&theta, &theta), &theta);
        assert_eq!(cube, ints(&[2, 0, 0]));
        let inv = k.inv(&theta).unwrap();
        assert_eq!(k.mul(&theta, &inv), k.one());
    }

    #[test]
    fn reducible_polynomials_rejected() {
        let q = BaseField::Rationals;
        assert_eq!(ExtensionField::from_minpoly(q, &ints(&[-4, 0, 1]), None), Err(AlgebraError::Reducible));
        // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2) has no rational root
        assert_eq!(ExtensionField::from_minpoly(q, &ints(&[4, 0, 0, 0, 1]), None), Err(AlgebraError::Reducible));
        assert!(ExtensionField::from_minpoly(q, &ints(&[1, 0, -10, 0, 1]), None).is_ok());
        let f7 = BaseField::prime(7).unwrap();
        assert!(ExtensionField::from_minpoly(f7, &ints(&[-2, 0, 0, 1]), None).is_ok());
        // 1 is a cube root of 1 mod 7
        assert_eq!(ExtensionField::from_minpoly(f7, &ints(&[-1, 0, 0, 1]), None), Err(AlgebraError::Reducible));
        // x^4 + 1 splits into quadratics over every prime field
        let f3 = BaseField::prime(3).unwrap();
        assert_eq!(ExtensionField::from_minpoly(f3, &ints(&[1, 0, 0, 0, 1]), None), Err(AlgebraError::Reducible));
    }

    #[test]
    fn rational_coefficients_are_scaled_before_search() {
        let q = BaseField::Rationals;
        // x^2 - 1/4 has roots ±1/2
        let half_sq = vec![Scalar::new((-1).into(), 4.into()), Scalar::zero(), Scalar::one()];
        assert_eq!(ExtensionField::from_minpoly(q, &half_sq, None), Err(AlgebraError::Reducible));
        let irreducible = vec![Scalar::new((-1).into(), 2.into()), Scalar::zero(), Scalar::one()];
        assert!(ExtensionField::from_minpoly(q, &irreducible, None).is_ok());
    }

    #[test]
    fn degree_five_rejected() {
        let q = BaseField::Rationals;
        assert_eq!(
            ExtensionField::from_minpoly(q, &ints(&[-2, 0, 0, 0, 0, 1]), None),
            Err(AlgebraError::UnsupportedDegree(5))
        );
    }

    #[test]
    fn non_field_table_rejected() {
        // Q[x]/(x^2): nilpotent e_1
        let q = BaseField::Rationals;
        let table = vec![vec![ints(&[1, 0]), ints(&[0, 1])], vec![ints(&[0, 1]), ints(&[0, 0])]];
        assert!(matches!(
            ExtensionField::from_table(q, vec!["1".into(), "e".into()], table),
            Err(AlgebraError::NotAField(_))
        ));
    }
}
