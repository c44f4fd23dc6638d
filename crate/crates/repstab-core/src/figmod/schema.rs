//! JSON shape for truncated FI-modules:
//! { n_max, ranks: [d_0..d_{n_max}], generators: { "n": [matrices] },
//!   transitions: [matrices] }
//! where each matrix is { rows, cols, entries: [[r, c, "p/q"], ...] }.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use super::module::FIModule;
use super::FigError;
use crate::exactlin::Matrix;
use crate::symgrp::SymRep;

#[derive(Serialize, Deserialize)]
pub struct FIModuleRepr {
    pub n_max: usize,
    pub ranks: Vec<usize>,
    pub generators: BTreeMap<String, Vec<Matrix>>,
    pub transitions: Vec<Matrix>,
}

impl From<&FIModule> for FIModuleRepr {
    fn from(m: &FIModule) -> FIModuleRepr {
        FIModuleRepr {
            n_max: m.n_max,
            ranks: m.dims(),
            generators: m
                .reps
                .iter()
                .map(|r| (r.n.to_string(), r.gens.clone()))
                .collect(),
            transitions: m.transitions.clone(),
        }
    }
}

impl FIModuleRepr {
    /// Rebuild and fully validate.
    pub fn into_module(self) -> Result<FIModule, FigError> {
        let m = self.into_module_unvalidated()?;
        FIModule::new(m.reps, m.transitions)
    }

    /// Rebuild with shape checks only (matrix sizes, generator and transition
    /// counts). Semantic checks — defining relations, equivariance — are left
    /// to `FIModule::validate`, so callers can report violations instead of
    /// refusing to parse.
    pub fn into_module_unvalidated(self) -> Result<FIModule, FigError> {
        if self.ranks.len() != self.n_max + 1 {
            return Err(FigError::Malformed(format!(
                "n_max {} with {} ranks",
                self.n_max,
                self.ranks.len()
            )));
        }
        let mut reps = Vec::with_capacity(self.n_max + 1);
        for n in 0..=self.n_max {
            let gens = self
                .generators
                .get(&n.to_string())
                .cloned()
                .unwrap_or_default();
            if gens.len() != n.saturating_sub(1) {
                return Err(FigError::Malformed(format!(
                    "rank {} needs {} generator matrices, got {}",
                    n,
                    n.saturating_sub(1),
                    gens.len()
                )));
            }
            for g in &gens {
                if g.rows != self.ranks[n] || g.cols != self.ranks[n] {
                    return Err(FigError::Malformed(format!(
                        "rank {} generator is {}x{}, expected {}x{}",
                        n, g.rows, g.cols, self.ranks[n], self.ranks[n]
                    )));
                }
            }
            reps.push(SymRep {
                n,
                dim: self.ranks[n],
                gens,
            });
        }
        if self.transitions.len() != self.n_max {
            return Err(FigError::Malformed(format!(
                "{} ranks need {} transitions, got {}",
                self.n_max + 1,
                self.n_max,
                self.transitions.len()
            )));
        }
        Ok(FIModule::new_unchecked(reps, self.transitions))
    }
}

impl Serialize for FIModule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FIModuleRepr::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FIModule {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<FIModule, D::Error> {
        let repr = FIModuleRepr::deserialize(d)?;
        repr.into_module().map_err(serde::de::Error::custom)
    }
}
