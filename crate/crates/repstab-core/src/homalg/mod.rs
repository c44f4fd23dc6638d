//! Homological measurements for modules over the symmetric-group
//! combinatorial category: central stability chains, bar and Koszul
//! complexes, Tor dimensions by two independent routes, splitting-complex
//! homology, and generation/presentation degrees.

mod bar;
mod central;
mod degrees;

pub use bar::{
    bar_complex, bar_complex_swapped, bar_complex_truncated, koszul_complex, split_steinberg,
    splitting_homology, tor0_dim, tor_dims, tor_dims_checked, unit_module, SstCache, TorMethod,
};
pub use central::{central_complex, central_homology};
pub use degrees::{
    consistency_checks, degrees, induced_image, tor1_dim, CheckResult, ConsistencyReport,
    DegreeReport,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HomalgError {
    #[error("Koszul construction failed: {0}")]
    Koszul(String),
    #[error("Tor methods disagree at rank {n}: bar {bar:?} vs koszul {koszul:?}")]
    MethodDisagreement {
        n: usize,
        bar: Vec<usize>,
        koszul: Vec<usize>,
    },
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}

/// All p-element subsets of [n] as sorted vectors, in lexicographic order.
pub fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(x + 1, n, p, cur, out);
            cur.pop();
        }
    }
    if p <= n {
        rec(0, n, p, &mut cur, &mut out);
    }
    out
}
