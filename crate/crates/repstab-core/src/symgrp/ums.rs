//! Uniform multiplicity stability detection: does a sequence of
//! 𝔖ₙ-representations eventually decompose as ⊕ c_λ V(λ)ₙ with
//! multiplicities independent of n, where V(λ)ₙ is the irreducible of the
//! padded shape (n − |λ|, λ)?

use std::collections::HashMap;

use super::characters::character_tools;
use super::partition::Partition;
use super::rep::SymRep;
use super::SymError;
use serde::{Deserialize, Serialize};

/// How an irreducible of 𝔖ₙ is matched against a stable label λ.
/// `FirstRow` is the padding of the underlying theory: the label is the
/// shape with its first row removed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PadRule {
    FirstRow,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct UmsReport {
    pub stable: bool,
    /// Least N within the window such that all n ≥ N share the multiplicity
    /// map and every label is realizable at N; meaningful only when stable.
    pub onset: usize,
    pub c: Vec<(Partition, u64)>,
    /// Per-n label multiplicits for diagnostics, indexed from `start_n`.
    pub per_n: Vec<Vec<(Partition, u64)>>,
    pub start_n: usize,
    pub window_end: usize,
}

fn labels_of(rep: &SymRep, _rule: PadRule) -> Result<HashMap<Partition, u64>, SymError> {
    let (_, mults) = character_tools(rep)?;
    let mut out = HashMap::new();
    for (shape, m) in mults {
        out.insert(shape.unpad(), m);
    }
    Ok(out)
}

fn sorted(map: &HashMap<Partition, u64>) -> Vec<(Partition, u64)> {
    let mut v: Vec<(Partition, u64)> = map.iter().map(|(k, m)| (k.clone(), *m)).collect();
    v.sort();
    v
}

/// Detect uniform multiplicity stability of `seq`, where `seq[i]` is the
/// representation at rank `start_n + i`.
pub fn ums_detect(seq: &[SymRep], start_n: usize, rule: PadRule) -> Result<UmsReport, SymError> {
    let mut per_n_maps = Vec::with_capacity(seq.len());
    for (i, rep) in seq.iter().enumerate() {
        assert_eq!(rep.n, start_n + i, "sequence ranks must be consecutive");
        per_n_maps.push(labels_of(rep, rule)?);
    }
    let window_end = start_n + seq.len().saturating_sub(1);
    let per_n = per_n_maps.iter().map(sorted).collect();

    // Least N from which the label map is constant and realizable:
    // realizable means V(λ)_N exists (pad_to succeeds) for every c_λ ≠ 0.
    // A single trailing rank is no evidence; the constant tail must contain
    // at least two ranks to be reported as stable within the window.
    let mut onset = None;
    'outer: for i in 0..per_n_maps.len().saturating_sub(1) {
        let n0 = start_n + i;
        let target = &per_n_maps[i];
        for later in &per_n_maps[i..] {
            if later != target {
                continue 'outer;
            }
        }
        if target.keys().all(|l| l.pad_to(n0).is_some()) {
            onset = Some(i);
            break;
        }
    }
    match onset {
        Some(i) => Ok(UmsReport {
            stable: true,
            onset: start_n + i,
            c: sorted(&per_n_maps[i]),
            per_n,
            start_n,
            window_end,
        }),
        None => Ok(UmsReport {
            stable: false,
            onset: 0,
            c: Vec::new(),
            per_n,
            start_n,
            window_end,
        }),
    }
}
