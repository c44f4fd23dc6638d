//! Exact Laurent polynomials in one variable t over ℚ, and small dense
//! matrices over them — enough to state and verify braid-relation and
//! conjugation identities at generic t. Serialized as {exponent: "p/q"} maps.

use num::BigRational;
use num_traits::{One, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exactlin::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Laurent {
    /// exponent -> coefficient, no zero coefficients stored.
    coeffs: BTreeMap<i64, BigRational>,
}

impl Laurent {
    pub fn zero() -> Laurent {
        Laurent::default()
    }

    pub fn constant(c: BigRational) -> Laurent {
        Laurent::monomial(0, c)
    }

    pub fn one() -> Laurent {
        Laurent::constant(BigRational::one())
    }

    /// The variable t.
    pub fn t() -> Laurent {
        Laurent::monomial(1, BigRational::one())
    }

    pub fn monomial(exp: i64, c: BigRational) -> Laurent {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Laurent { coeffs }
    }

    pub fn from_i64(v: i64) -> Laurent {
        Laurent::constant(BigRational::from_integer(v.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Some(exp, coeff) when this is a single monomial (a unit of the ring).
    pub fn as_monomial(&self) -> Option<(i64, &BigRational)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    /// Exact division by a monomial unit.
    pub fn div_monomial(&self, exp: i64, c: &BigRational) -> Laurent {
        assert!(!c.is_zero());
        Laurent {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, v)| (e - exp, v / c))
                .collect(),
        }
    }

    /// Evaluate at a rational point (nonzero when negative exponents occur),
    /// in the requested scalar field.
    pub fn eval(&self, t: &BigRational, field: Field) -> Scalar {
        let mut acc = BigRational::zero();
        for (e, c) in &self.coeffs {
            let p = if *e >= 0 {
                num::pow::pow(t.clone(), *e as usize)
            } else {
                assert!(!t.is_zero(), "negative exponent at t = 0");
                num::pow::pow(t.recip(), (-e) as usize)
            };
            acc += c * p;
        }
        match field {
            Field::Q => Scalar::Rat(acc),
            Field::Fp(_) => {
                let s = format!("{}/{}", acc.numer(), acc.denom());
                field.parse(&s).expect("rational not defined in F_p")
            }
        }
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &rhs.coeffs {
            let v = coeffs.entry(*e).or_insert_with(BigRational::zero);
            *v += c;
            if v.is_zero() {
                coeffs.remove(e);
            }
        }
        Laurent { coeffs }
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        self + &(-rhs)
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut coeffs: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                let v = coeffs.entry(e1 + e2).or_insert_with(BigRational::zero);
                *v += c1 * c2;
            }
        }
        coeffs.retain(|_, v| !v.is_zero());
        Laurent { coeffs }
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Laurent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let map: BTreeMap<String, String> = self
            .coeffs
            .iter()
            .map(|(e, c)| {
                let v = if c.denom().is_one() {
                    c.numer().to_string()
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                };
                (e.to_string(), v)
            })
            .collect();
        map.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Laurent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Laurent, D::Error> {
        let map = BTreeMap::<String, String>::deserialize(d)?;
        let mut coeffs = BTreeMap::new();
        for (e, v) in map {
            let exp: i64 = e.parse().map_err(DeError::custom)?;
            let c: BigRational = v.parse().map_err(|_| DeError::custom("bad rational"))?;
            if !c.is_zero() {
                coeffs.insert(exp, c);
            }
        }
        Ok(Laurent { coeffs })
    }
}

/// Dense row-major matrix over Laurent polynomials. Sizes here are tiny
/// (braid generator matrices), so density is fine.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LaurentMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Laurent>,
}

impl LaurentMatrix {
    pub fn zero(rows: usize, cols: usize) -> LaurentMatrix {
        LaurentMatrix {
            rows,
            cols,
            data: vec![Laurent::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> LaurentMatrix {
        let mut m = LaurentMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Laurent::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Laurent) -> LaurentMatrix {
        LaurentMatrix {
            rows,
            cols,
            data: (0..rows * cols).map(|k| f(k / cols, k % cols)).collect(),
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &Laurent {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Laurent {
        &mut self.data[r * self.cols + c]
    }

    pub fn mul(&self, rhs: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.cols, rhs.rows);
        LaurentMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Laurent::zero();
            for k in 0..self.cols {
                acc = &acc + &(self.at(i, k) * rhs.at(k, j));
            }
            acc
        })
    }

    /// Determinant by Laplace expansion; fine for the small sizes used here.
    pub fn det(&self) -> Laurent {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return Laurent::one();
        }
        let mut acc = Laurent::zero();
        for j in 0..n {
            if self.at(0, j).is_zero() {
                continue;
            }
            let minor = self.minor(0, j);
            let term = self.at(0, j) * &minor.det();
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    fn minor(&self, row: usize, col: usize) -> LaurentMatrix {
        LaurentMatrix::from_fn(self.rows - 1, self.cols - 1, |i, j| {
            let ii = if i < row { i } else { i + 1 };
            let jj = if j < col { j } else { j + 1 };
            self.at(ii, jj).clone()
        })
    }

    /// Inverse by adjugate, valid exactly when the determinant is a monomial
    /// (a unit of the Laurent ring) — true for all braid generator matrices.
    pub fn inverse_unit(&self) -> Option<LaurentMatrix> {
        let d = self.det();
        let (exp, c) = d.as_monomial()?;
        let c = c.clone();
        let n = self.rows;
        Some(LaurentMatrix::from_fn(n, n, |i, j| {
            // adj(A)_{ij} = (-1)^{i+j} det(minor_{ji})
            let m = self.minor(j, i).det();
            let signed = if (i + j) % 2 == 0 { m } else { -&m };
            signed.div_monomial(exp, &c)
        }))
    }

    /// Specialize every entry at a rational value of t.
    pub fn eval(&self, t: &BigRational, field: Field) -> crate::exactlin::Matrix {
        crate::exactlin::Matrix::from_fn(self.rows, self.cols, field, |i, j| {
            self.at(i, j).eval(t, field)
        })
    }
}
