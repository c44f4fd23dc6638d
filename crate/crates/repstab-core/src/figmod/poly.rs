//! Polynomial-degree certification by the kernel/cokernel recursion.
//!
//! A module has degree -∞ at d when it vanishes in ranks > d; degree ≤ r
//! when the kernel of the canonical shift map vanishes in ranks > d and the
//! cokernel has degree ≤ r-1 in ranks > d-1. Each cokernel step consumes one
//! rank of the truncation window, so deep recursions can run out of data;
//! that outcome is reported explicitly rather than guessed.

use serde::{Deserialize, Serialize};

use super::module::{ker_coker, FIModule, U1Module};
use crate::exactlin::Matrix;

/// Anything the recursion can run on: a tower of spaces with transitions and
/// a cokernel construction (kernels come for free from the transitions).
pub trait ShiftTower: Sized {
    fn window(&self) -> usize;
    fn dim(&self, n: usize) -> usize;
    fn transition(&self, n: usize) -> &Matrix;
    /// Degreewise cokernel of the canonical map into the shift, truncated
    /// one rank lower, with whatever transition twist the category requires.
    fn coker(&self) -> Self;
}

impl ShiftTower for FIModule {
    fn window(&self) -> usize {
        self.n_max
    }
    fn dim(&self, n: usize) -> usize {
        FIModule::dim(self, n)
    }
    fn transition(&self, n: usize) -> &Matrix {
        &self.transitions[n]
    }
    fn coker(&self) -> Self {
        ker_coker(self).1
    }
}

impl ShiftTower for U1Module {
    fn window(&self) -> usize {
        self.n_max
    }
    fn dim(&self, n: usize) -> usize {
        if n <= self.n_max {
            self.dims[n]
        } else {
            0
        }
    }
    fn transition(&self, n: usize) -> &Matrix {
        &self.transitions[n]
    }
    /// With no group acting there is no twist: the shift's transition is the
    /// original transition one rank up, and it descends to cokernels as-is.
    fn coker(&self) -> Self {
        let new_max = self.n_max - 1;
        let mut sections = Vec::with_capacity(new_max + 1);
        let mut projs = Vec::with_capacity(new_max + 1);
        let mut dims = Vec::with_capacity(new_max + 1);
        for n in 0..=new_max {
            let (e, p) = super::module::quotient_basis(&self.transitions[n]);
            dims.push(e.cols);
            sections.push(e);
            projs.push(p);
        }
        let transitions = (0..new_max)
            .map(|n| projs[n + 1].mul(&self.transitions[n + 1].mul(&sections[n])))
            .collect();
        U1Module {
            n_max: new_max,
            dims,
            transitions,
        }
    }
}

/// Outcome of a polynomial-degree query at offset d.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PolyDegree {
    /// Vanishes in all checkable ranks > d.
    NegInfinity,
    /// Least certifiable degree within the truncation window.
    Degree(u32),
    /// A nonzero kernel in a checkable rank > d rules out every degree.
    NotPolynomial,
    /// The recursion consumed the window before reaching a verdict.
    ExceedsTruncation,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyReport {
    pub d: i64,
    pub degree: PolyDegree,
    /// Rank at which the kernel obstruction was seen, when NotPolynomial.
    pub kernel_witness: Option<usize>,
}

/// Certify the least polynomial degree of `a` in ranks > d, within the
/// truncation window. d = -1 means "in all ranks".
pub fn polynomial_degree<T: ShiftTower>(a: &T, d: i64) -> PolyReport {
    let (degree, kernel_witness) = degree_rec(a, d);
    PolyReport {
        d,
        degree,
        kernel_witness,
    }
}

fn degree_rec<T: ShiftTower>(a: &T, d: i64) -> (PolyDegree, Option<usize>) {
    let window = a.window() as i64;
    // Ranks are nonnegative, so any d below -1 asks the same question as -1.
    let d = d.max(-1);
    if d >= window {
        return (PolyDegree::ExceedsTruncation, None);
    }
    let lo = (d + 1) as usize;
    if (lo..=window as usize).all(|n| a.dim(n) == 0) {
        return (PolyDegree::NegInfinity, None);
    }
    // Kernel check in ranks d < n ≤ window-1 (the transition out of the top
    // rank is not part of the data).
    for n in lo..window as usize {
        let t = a.transition(n);
        if t.cols > t.rank() {
            return (PolyDegree::NotPolynomial, Some(n));
        }
    }
    if window == 0 {
        return (PolyDegree::ExceedsTruncation, None);
    }
    let c = a.coker();
    match degree_rec(&c, d - 1) {
        (PolyDegree::NegInfinity, _) => (PolyDegree::Degree(0), None),
        (PolyDegree::Degree(r), _) => (PolyDegree::Degree(r + 1), None),
        other => other,
    }
}
