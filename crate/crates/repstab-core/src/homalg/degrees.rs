//! Generation/presentation degrees via Tor vanishing, and the battery of
//! structural consistency checks tying the bar, Koszul, and central routes
//! together.

use serde::{Deserialize, Serialize};

use crate::exactlin::Field;
use crate::figmod::{free_module, FIModule};

use super::bar::{bar_complex_swapped, bar_complex_truncated, tor0_dim, SstCache};
use super::central::central_homology;
use super::HomalgError;

/// Degree thresholds measured inside the truncation window [0..n_max]. A
/// threshold is a lower bound only (not certified) when the relevant Tor is
/// still nonzero at the window's edge.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DegreeReport {
    /// Largest n with Tor₀ ≠ 0; None means the module is generated by nothing
    /// (it is zero).
    pub generation: Option<usize>,
    /// Largest n with Tor₀ ≠ 0 or Tor₁ ≠ 0.
    pub presentation: Option<usize>,
    pub window: usize,
    pub generation_is_lower_bound: bool,
    pub presentation_is_lower_bound: bool,
    pub tor0: Vec<usize>,
    pub tor1: Vec<usize>,
}

/// Tor₁(A)_n from the bar complex truncated at degree 2 (all that homological
/// degree 1 needs).
pub fn tor1_dim(a: &FIModule, n: usize) -> usize {
    let cx = bar_complex_truncated(a, n, 2.min(n));
    cx.homology_dim_at(1)
}

pub fn degrees(a: &FIModule) -> DegreeReport {
    let window = a.n_max;
    let tor0: Vec<usize> = (0..=window).map(|n| tor0_dim(a, n)).collect();
    let tor1: Vec<usize> = (0..=window).map(|n| tor1_dim(a, n)).collect();
    let generation = (0..=window).rev().find(|&n| tor0[n] > 0);
    let presentation = (0..=window).rev().find(|&n| tor0[n] > 0 || tor1[n] > 0);
    DegreeReport {
        generation,
        presentation,
        window,
        generation_is_lower_bound: tor0[window] > 0,
        presentation_is_lower_bound: tor0[window] > 0 || tor1[window] > 0,
        tor0,
        tor1,
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub pass: bool,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub pass: bool,
    pub checks: Vec<CheckResult>,
}

/// dim K_p(B)_m for a tower of dimensions: C(m,p) · dim B_{m-p} · dim SStₚ.
fn koszul_dim(dims: &[usize], m: usize, p: usize, sst_dims: &[usize]) -> usize {
    if p > m || m - p >= dims.len() {
        return 0;
    }
    binomial(m, p) * dims[m - p] * sst_dims[p]
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// The five structural checks at rank n:
/// (a) iterated Koszul dimension symmetry dim K_p(K_q(A))_n = dim K_q(K_p(A))_n;
/// (b) bar-sided swap: homology dims with the coefficient on the first block
///     equal those with it on the last;
/// (c) the maps induced on Tor₀ by the transitions are zero;
/// (d) coherence envelope: central homology H̃ᵢ(A)_n vanishes for
///     n > g + max(g,r,1) + i with g, r the measured degrees (the middle
///     term is clamped to 1 because free modules carry derangement classes
///     exactly at n = g + i + 1, so no envelope below g + 1 + i can hold);
/// (e) free-module vanishing H̃ᵢ(M(m))_n = 0 for n > m + i + 1, m ≤ 2.
pub fn consistency_checks(
    a: &FIModule,
    n: usize,
    cache: &SstCache,
) -> Result<ConsistencyReport, HomalgError> {
    let mut checks = Vec::new();

    // (a) Koszul dimension symmetry over all p, q.
    {
        let sst_dims: Vec<usize> = (0..=n).map(|p| cache.get(p).dim).collect();
        let adims: Vec<usize> = (0..=a.n_max).map(|m| a.dim(m)).collect();
        let mut witnesses = Vec::new();
        for p in 0..=n {
            for q in 0..=n {
                let kq: Vec<usize> = (0..=n)
                    .map(|m| koszul_dim(&adims, m, q, &sst_dims))
                    .collect();
                let kp: Vec<usize> = (0..=n)
                    .map(|m| koszul_dim(&adims, m, p, &sst_dims))
                    .collect();
                let lhs = koszul_dim(&kq, n, p, &sst_dims);
                let rhs = koszul_dim(&kp, n, q, &sst_dims);
                if lhs != rhs {
                    witnesses.push(format!("p={p} q={q}: {lhs} != {rhs}"));
                }
            }
        }
        checks.push(CheckResult {
            id: "koszul-dim-symmetry".into(),
            pass: witnesses.is_empty(),
            witnesses,
        });
    }

    // (b) Coefficient-side swap of the bar complex.
    {
        let left = super::bar::bar_complex(a, n).homology_dims();
        let right = bar_complex_swapped(a, n).homology_dims();
        let witnesses: Vec<String> = left
            .iter()
            .zip(&right)
            .filter(|((_, l), (_, r))| l != r)
            .map(|((i, l), (_, r))| format!("degree {i}: {l} != {r}"))
            .collect();
        checks.push(CheckResult {
            id: "bar-side-swap".into(),
            pass: witnesses.is_empty(),
            witnesses,
        });
    }

    // (c) Transitions act by zero on Tor₀.
    {
        let mut witnesses = Vec::new();
        for m in 0..a.n_max.min(n) {
            let span = induced_image(a, m + 1);
            let (_, proj) = crate::figmod::quotient_basis(&span);
            let induced = proj.mul(&a.transitions[m]);
            if !induced.is_zero_matrix() {
                witnesses.push(format!("rank {m} -> {}", m + 1));
            }
        }
        checks.push(CheckResult {
            id: "tor0-transitions-vanish".into(),
            pass: witnesses.is_empty(),
            witnesses,
        });
    }

    // (d) Coherence envelope from the measured degrees.
    {
        let report = degrees(a);
        let mut witnesses = Vec::new();
        if let (Some(g), Some(r)) = (report.generation, report.presentation) {
            let h = central_homology(a, n)?;
            for (i, dim) in &h {
                if *i >= 0 && (n as i64) > (g as i64) + (g.max(r).max(1) as i64) + i && *dim > 0 {
                    witnesses.push(format!("H~_{i} at rank {n} has dim {dim}"));
                }
            }
        }
        checks.push(CheckResult {
            id: "coherence-envelope".into(),
            pass: witnesses.is_empty(),
            witnesses,
        });
    }

    // (e) Free-module central homology vanishing.
    {
        let mut witnesses = Vec::new();
        for m in 0..=2usize.min(n) {
            let free = free_module(m, n, Field::Q);
            let h = central_homology(&free, n)?;
            for (i, dim) in &h {
                if *i >= 0 && (n as i64) > (m as i64) + i + 1 && *dim > 0 {
                    witnesses.push(format!("M({m}): H~_{i} at rank {n} has dim {dim}"));
                }
            }
        }
        checks.push(CheckResult {
            id: "free-module-vanishing".into(),
            pass: witnesses.is_empty(),
            witnesses,
        });
    }

    Ok(ConsistencyReport {
        pass: checks.iter().all(|c| c.pass),
        checks,
    })
}

/// The matrix whose column span is the image of Ind A_{n-1} → A_n.
pub fn induced_image(a: &FIModule, n: usize) -> crate::exactlin::Matrix {
    let field = a.field();
    let mut span = crate::exactlin::Matrix::zero(a.dim(n), 0, field);
    for skip in 0..n {
        let f: Vec<usize> = (0..n).filter(|&x| x != skip).collect();
        span = span.hstack(&a.fi_morphism(&f, n));
    }
    span
}
