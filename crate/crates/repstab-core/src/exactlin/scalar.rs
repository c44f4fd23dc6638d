//! Exact scalars: arbitrary-precision rationals, or elements of a prime field
//! when a modulus is configured. All arithmetic is exact; there is no
//! floating point anywhere in this crate.

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use super::ExactError;

/// The coefficient field for a computation: the rationals, or GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Q,
    Fp(u64),
}

impl Field {
    pub fn zero(self) -> Scalar {
        match self {
            Field::Q => Scalar::Rat(BigRational::zero()),
            Field::Fp(p) => Scalar::Fp { p, v: 0 },
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            Field::Q => Scalar::Rat(BigRational::one()),
            Field::Fp(p) => Scalar::Fp { p, v: 1 % p },
        }
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Q => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Fp(p) => {
                let v = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { p, v }
            }
        }
    }

    pub fn parse(self, s: &str) -> Result<Scalar, ExactError> {
        match self {
            Field::Q => {
                let r = BigRational::from_str(s)
                    .map_err(|_| ExactError::Parse(s.to_string()))?;
                Ok(Scalar::Rat(r))
            }
            Field::Fp(p) => {
                let v: u64 = s.parse().map_err(|_| ExactError::Parse(s.to_string()))?;
                Ok(Scalar::Fp { p, v: v % p })
            }
        }
    }
}

/// An exact field element. Rationals are kept reduced with positive
/// denominator by `BigRational`'s own normalization.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { p: u64, v: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Q,
            Scalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { p, v } => *v == 1 % p,
        }
    }

    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "division by zero");
        match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Fp { p, v } => Scalar::Fp {
                p: *p,
                v: mod_inv(*v, *p),
            },
        }
    }

    /// Absolute numerator+denominator bit size; used by pivot heuristics.
    pub fn size_hint(&self) -> u64 {
        match self {
            Scalar::Rat(r) => (r.numer().bits() + r.denom().bits()) as u64,
            Scalar::Fp { .. } => 1,
        }
    }

    fn rat(&self) -> &BigRational {
        match self {
            Scalar::Rat(r) => r,
            Scalar::Fp { .. } => panic!("expected rational scalar"),
        }
    }
}

fn mod_inv(v: u64, p: u64) -> u64 {
    // Extended Euclid; p prime, v != 0 mod p.
    let (mut a, mut b) = (v as i128, p as i128);
    let (mut x0, mut x1) = (1i128, 0i128);
    while b != 0 {
        let q = a / b;
        (a, b) = (b, a - q * b);
        (x0, x1) = (x1, x0 - q * x1);
    }
    assert!(a == 1, "non-invertible element mod p");
    x0.rem_euclid(p as i128) as u64
}

macro_rules! scalar_binop {
    ($trait:ident, $m:ident, $op:tt, $fpop:expr) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a $op b),
                    (Scalar::Fp { p, v: a }, Scalar::Fp { p: q, v: b }) => {
                        assert_eq!(p, q, "mismatched prime fields");
                        let f: fn(u128, u128, u128) -> u128 = $fpop;
                        Scalar::Fp { p: *p, v: f(*a as u128, *b as u128, *p as u128) as u64 }
                    }
                    _ => panic!("mismatched scalar fields"),
                }
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add, +, |a, b, p| (a + b) % p);
scalar_binop!(Sub, sub, -, |a, b, p| (a + p - b % p) % p);
scalar_binop!(Mul, mul, *, |a, b, p| (a * b) % p);

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Fp { p, v } => Scalar::Fp {
                p: *p,
                v: if *v == 0 { 0 } else { p - v },
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for Scalar {
    /// Rationals render as "p/q" with q > 0 (plain "p" when q = 1); prime
    /// field elements render as the canonical residue.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    /// Deserializes into the rational field; prime-field data is re-read
    /// through `Field::parse` by callers that carry a field context.
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Field::Q
            .parse(&s)
            .map_err(|e| serde::de::Error::custom(e.to_string()))
    }
}

/// Convenience: a rational scalar from an integer.
pub fn q(n: i64) -> Scalar {
    Field::Q.from_i64(n)
}

/// Convenience: the rational p/q.
pub fn qq(num: i64, den: i64) -> Scalar {
    Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

/// Sign of a rational scalar (-1, 0, 1); used only by display helpers.
pub fn rat_sign(s: &Scalar) -> i32 {
    let r = s.rat();
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
