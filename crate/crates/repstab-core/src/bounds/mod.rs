//! Exact evaluators for the quantitative degree bounds: vanishing thresholds
//! for central homology and Tor, the generation/presentation recursion for
//! homology of stability kernels, its closed form for pure braid groups, and
//! the congruence-subgroup presentation bound. Pure integer arithmetic; the
//! polynomial degree -∞ is a first-class value that passes through max() as
//! the identity.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// An integer extended with -∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ExtInt {
    NegInf,
    Fin(i64),
}

impl ExtInt {
    pub fn fin(v: i64) -> ExtInt {
        ExtInt::Fin(v)
    }

    pub fn plus(self, rhs: i64) -> ExtInt {
        match self {
            ExtInt::NegInf => ExtInt::NegInf,
            ExtInt::Fin(v) => ExtInt::Fin(v + rhs),
        }
    }

    pub fn add(self, rhs: ExtInt) -> ExtInt {
        match (self, rhs) {
            (ExtInt::Fin(a), ExtInt::Fin(b)) => ExtInt::Fin(a + b),
            _ => ExtInt::NegInf,
        }
    }

    pub fn max(self, rhs: ExtInt) -> ExtInt {
        if self >= rhs {
            self
        } else {
            rhs
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => write!(f, "-inf"),
            ExtInt::Fin(v) => write!(f, "{v}"),
        }
    }
}

/// The shipped coherence-function table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Theta {
    /// g + max(g, r) + i — the symmetric-group case.
    Sym,
    /// max(g+1, r) + i — the action-free case.
    U1,
}

impl Theta {
    pub fn eval(self, g: ExtInt, r: ExtInt, i: i64) -> ExtInt {
        match self {
            Theta::Sym => g.add(g.max(r)).plus(i),
            Theta::U1 => g.plus(1).max(r).plus(i),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Central,
    Tor,
    Repstab,
    Pbr,
    Congruence,
}

/// Inputs for `evaluate`; each kind validates the subset it needs.
#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize)]
pub struct BoundInputs {
    /// Polynomial degree (may be -∞).
    pub r: Option<ExtInt>,
    /// Rank threshold past which the degree is certified.
    pub d: Option<i64>,
    /// Homological degree.
    pub i: Option<i64>,
    /// Stability parameters of the homotopy-vanishing hypothesis.
    pub k: Option<i64>,
    pub a: Option<i64>,
    /// Stable ranks for the congruence bound.
    pub s: Option<i64>,
    pub t: Option<i64>,
    pub theta: Option<Theta>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundValue {
    /// A single vanishing threshold: the quantity vanishes in ranks above it.
    Threshold(ExtInt),
    /// Generation/presentation thresholds.
    Pair { g: ExtInt, r: ExtInt },
}

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("bound kind {kind:?} requires input `{name}`")]
    Missing { kind: BoundKind, name: &'static str },
    #[error("homological degree must be nonnegative, got {0}")]
    NegativeDegree(i64),
}

fn need<T: Copy>(v: Option<T>, kind: BoundKind, name: &'static str) -> Result<T, BoundsError> {
    v.ok_or(BoundsError::Missing { kind, name })
}

/// The generation/presentation recursion:
///   g_i = max(d+i, ki-k+a+r, Θ(g_{i-1},r_{i-1},1), …, Θ(g_0,r_0,i))
///   r_i = max(d+i+1, ki+a+r, Θ(g_{i-1},r_{i-1},2), …, Θ(g_0,r_0,i+1))
pub fn repstab_recursion(
    theta: Theta,
    k: i64,
    a: i64,
    d: i64,
    r: ExtInt,
    i_max: i64,
) -> Vec<(ExtInt, ExtInt)> {
    let mut out: Vec<(ExtInt, ExtInt)> = Vec::with_capacity(i_max as usize + 1);
    for i in 0..=i_max {
        let mut g = ExtInt::Fin(d + i).max(r.plus(k * i - k + a));
        let mut rr = ExtInt::Fin(d + i + 1).max(r.plus(k * i + a));
        for (j, &(gj, rj)) in out.iter().enumerate() {
            let off = i - j as i64; // Θ(g_j, r_j, i-j) and Θ(g_j, r_j, i-j+1)
            g = g.max(theta.eval(gj, rj, off));
            rr = rr.max(theta.eval(gj, rj, off + 1));
        }
        out.push((g, rr));
    }
    out
}

/// Closed form of the recursion for Θ = Sym, k = 2, a = 2 (the pure braid
/// group case): for i ≥ 1,
///   g_i = 2^{i-1}(max(d,r) + max(d+1,r+2) + 3) - 2,  r_i = g_i + 1.
pub fn pbr_closed_form(d: i64, r: ExtInt, i: i64) -> (ExtInt, ExtInt) {
    let g0 = ExtInt::Fin(d).max(r);
    let r0 = ExtInt::Fin(d + 1).max(r.plus(2));
    if i == 0 {
        return (g0, r0);
    }
    let base = g0.add(r0).plus(3);
    match base {
        ExtInt::NegInf => (ExtInt::NegInf, ExtInt::NegInf),
        ExtInt::Fin(b) => {
            let v = (1i64 << (i - 1)) * b - 2;
            (ExtInt::Fin(v), ExtInt::Fin(v + 1))
        }
    }
}

pub fn evaluate(kind: BoundKind, inputs: &BoundInputs) -> Result<BoundValue, BoundsError> {
    match kind {
        BoundKind::Central => {
            let d = need(inputs.d, kind, "d")?;
            let r = need(inputs.r, kind, "r")?;
            let i = need(inputs.i, kind, "i")?;
            let k = need(inputs.k, kind, "k")?;
            let a = need(inputs.a, kind, "a")?;
            if i < 0 {
                return Err(BoundsError::NegativeDegree(i));
            }
            // Vanishing for n > max(d+i+1, ki+a+r).
            Ok(BoundValue::Threshold(
                ExtInt::Fin(d + i + 1).max(r.plus(k * i + a)),
            ))
        }
        BoundKind::Tor => {
            let d = need(inputs.d, kind, "d")?;
            let r = need(inputs.r, kind, "r")?;
            let i = need(inputs.i, kind, "i")?;
            if i < 0 {
                return Err(BoundsError::NegativeDegree(i));
            }
            // Vanishing for n > i + max(d, r).
            Ok(BoundValue::Threshold(ExtInt::Fin(d).max(r).plus(i)))
        }
        BoundKind::Repstab => {
            let d = need(inputs.d, kind, "d")?;
            let r = need(inputs.r, kind, "r")?;
            let i = need(inputs.i, kind, "i")?;
            let k = need(inputs.k, kind, "k")?;
            let a = need(inputs.a, kind, "a")?;
            let theta = need(inputs.theta, kind, "theta")?;
            if i < 0 {
                return Err(BoundsError::NegativeDegree(i));
            }
            let seq = repstab_recursion(theta, k, a, d, r, i);
            let (g, rr) = seq[i as usize];
            Ok(BoundValue::Pair { g, r: rr })
        }
        BoundKind::Pbr => {
            let d = need(inputs.d, kind, "d")?;
            let r = need(inputs.r, kind, "r")?;
            let i = need(inputs.i, kind, "i")?;
            if i < 0 {
                return Err(BoundsError::NegativeDegree(i));
            }
            let (g, rr) = pbr_closed_form(d, r, i);
            Ok(BoundValue::Pair { g, r: rr })
        }
        BoundKind::Congruence => {
            let i = need(inputs.i, kind, "i")?;
            let s = need(inputs.s, kind, "s")?;
            let t = need(inputs.t, kind, "t")?;
            if i < 0 {
                return Err(BoundsError::NegativeDegree(i));
            }
            // Presentation degree ≤ max(8i+4s+t+8, 4i+2s+2t-1).
            Ok(BoundValue::Threshold(ExtInt::Fin(
                (8 * i + 4 * s + t + 8).max(4 * i + 2 * s + 2 * t - 1),
            )))
        }
    }
}
