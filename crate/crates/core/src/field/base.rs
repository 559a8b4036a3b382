use std::fmt;

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{AlgebraError, Result};

/// Scalars of every base field are stored as exact rationals. Over a prime
/// field the canonical representative is an integer in `0..p`.
pub type Scalar = BigRational;

/// The prime field or the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseField {
    Rationals,
    Prime(u64),
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl BaseField {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(BaseField::Prime(p))
        } else {
            Err(AlgebraError::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            BaseField::Rationals => 0,
            BaseField::Prime(p) => *p,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, BaseField::Prime(_))
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.reduce(Scalar::from_integer(BigInt::from(n)))
    }

    /// Maps an arbitrary rational into the field. Over `F_p` the denominator
    /// must be a unit.
    pub fn embed(&self, q: &BigRational) -> Result<Scalar> {
        match self {
            BaseField::Rationals => Ok(q.clone()),
            BaseField::Prime(p) => {
                let p = BigInt::from(*p);
                let den = q.denom().mod_floor(&p);
                if den.is_zero() {
                    return Err(AlgebraError::DivisionByZero);
                }
                let num = q.numer().mod_floor(&p);
                let inv = mod_inverse(&den, &p);
                Ok(Scalar::from_integer((num * inv).mod_floor(&p)))
            }
        }
    }

    fn reduce(&self, q: Scalar) -> Scalar {
        match self {
            BaseField::Rationals => q,
            BaseField::Prime(p) => {
                debug_assert!(q.is_integer());
                Scalar::from_integer(q.to_integer().mod_floor(&BigInt::from(*p)))
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a - b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.reduce(-a)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a * b)
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        match self {
            BaseField::Rationals => Ok(a.recip()),
            BaseField::Prime(p) => {
                let p = BigInt::from(*p);
                Ok(Scalar::from_integer(mod_inverse(&a.to_integer(), &p)))
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// All field elements, for prime fields only.
    pub fn elements(&self) -> Option<impl Iterator<Item = Scalar>> {
        match self {
            BaseField::Rationals => None,
            BaseField::Prime(p) => Some((0..*p).map(|k| Scalar::from_integer(BigInt::from(k)))),
        }
    }
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Rationals => write!(f, "Q"),
            BaseField::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let ext = a.mod_floor(p).extended_gcd(p);
    ext.x.mod_floor(p)
}

/// Renders a scalar the way scene files write coordinates.
pub fn format_scalar(q: &Scalar) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
