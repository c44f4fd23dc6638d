//! Assembling the twisted homology of the pure braid groups, with its
//! symmetric-group action and stabilization maps, into an FI-module.
//!
//! The transposition (k, k+1) acts on H_i(PBrₙ; Aₙ) through the lift σₖ:
//! by conjugation on the group (the word table of `conjugation_table`) and by
//! ρ(σₖ) on the coefficients. Stabilization is the prepend inclusion
//! PBrₙ ↪ PBrₙ₊₁, A_{ij} ↦ A_{i+1,j+1}, paired with the coefficient
//! transition of the braid module.

use crate::braid::{restrict_to_pure, UBrModule};
use crate::exactlin::{Field, Matrix};
use crate::figmod::FIModule;
use crate::symgrp::SymRep;

use super::complex::{block_triples, FoxComplex, TwistedHomology};
use super::pbr::{
    conjugation_table, pbr_presentation, pure_gens, validate_conjugation_table,
};
use super::words::fox_derivative;
use super::GroupError;

/// The chain map C₁(PBrₙ; A) → C₁(PBrₙ; A) induced by conjugation with σₖ.
/// On e_s ⊗ a it is Σ_{s'} e_{s'} ⊗ (∂(σₖ s σₖ⁻¹)/∂s' evaluated through the
/// right action) ρ(σₖ) a.
pub fn sigma_chain_map(fox: &FoxComplex, n: usize, k: usize, coeff_sigma: &Matrix) -> Matrix {
    let s_count = fox.presentation.generators.len();
    let d = fox.dim_a;
    let table = conjugation_table(k, n);
    let mut triples = Vec::new();
    for (s, w) in table.iter().enumerate() {
        for sp in 0..s_count {
            let dv = fox_derivative(w, sp + 1);
            if dv.is_zero() {
                continue;
            }
            let blk = fox.ring_eval_inv(&dv).mul(coeff_sigma);
            block_triples(&mut triples, &blk, sp * d, s * d);
        }
    }
    Matrix::from_triples(s_count * d, s_count * d, fox.field, &triples)
}

/// The chain map C₁(PBrₙ; Aₙ) → C₁(PBrₙ₊₁; Aₙ₊₁) of the stabilization:
/// e_{A_{ij}} ⊗ a ↦ e_{A_{i+1,j+1}} ⊗ T a.
fn transition_chain_map(n: usize, t: &Matrix, field: Field) -> Matrix {
    let src = pure_gens(n);
    let tgt_index: std::collections::BTreeMap<(usize, usize), usize> = pure_gens(n + 1)
        .into_iter()
        .enumerate()
        .map(|(p, g)| (g, p))
        .collect();
    let (da, db) = (t.cols, t.rows);
    let mut triples = Vec::new();
    for (s, &(i, j)) in src.iter().enumerate() {
        let sp = tgt_index[&(i + 1, j + 1)];
        block_triples(&mut triples, t, sp * db, s * da);
    }
    Matrix::from_triples(tgt_index.len() * db, src.len() * da, field, &triples)
}

struct RankData {
    fox: FoxComplex,
    th: TwistedHomology,
}

fn homology_action(
    data: &RankData,
    n: usize,
    k: usize,
    coeff_sigma: &Matrix,
    degree: usize,
) -> Result<Matrix, GroupError> {
    let th = &data.th;
    let fox = &data.fox;
    let phi = sigma_chain_map(fox, n, k, coeff_sigma);
    // Chain-map property d₁ ∘ φ₁ = ρ(σₖ) ∘ d₁; this certifies the word table
    // against the actual coefficient matrices and makes both homology actions
    // well defined.
    if fox.d1.mul(&phi) != coeff_sigma.mul(&fox.d1) {
        return Err(GroupError::ChainMap(format!(
            "sigma_{k} does not induce a chain map at rank {n}"
        )));
    }
    if degree == 0 {
        Ok(th.h0_proj.mul(coeff_sigma).mul(&th.h0_section))
    } else {
        th.h1_coords(&phi.mul(&th.h1_chain_reps()))
            .ok_or_else(|| GroupError::ChainMap(format!(
                "sigma_{k} image of a cycle is not a cycle at rank {n}"
            )))
    }
}

/// H_i(PBrₙ; Aₙ) for i ∈ {0, 1}, assembled over n ≤ n_max into an FI-module
/// with the transposition action and stabilization transitions above.
pub fn sn_action_and_assemble(m: &UBrModule, degree: usize) -> Result<FIModule, GroupError> {
    assert!(degree <= 1, "only H0 and H1 are computed");
    let field = m.field();
    for n in 2..=m.n_max.min(5) {
        validate_conjugation_table(n)?;
    }

    let mut data = Vec::with_capacity(m.n_max + 1);
    for n in 0..=m.n_max {
        let pure = restrict_to_pure(&m.gens[n], n)
            .map_err(|e| GroupError::Relator(format!("rank {n}: {e:?}")))?;
        let rho: Vec<Matrix> = pure_gens(n).iter().map(|g| pure[g].clone()).collect();
        let fox = FoxComplex::new(pbr_presentation(n), rho, m.dim(n), field)?;
        let th = fox.twisted_h0_h1()?;
        data.push(RankData { fox, th });
    }

    let mut reps = Vec::with_capacity(m.n_max + 1);
    for n in 0..=m.n_max {
        let th = &data[n].th;
        let hdim = if degree == 0 { th.h0 } else { th.h1 };
        let mut hom_gens = Vec::with_capacity(n.saturating_sub(1));
        for k in 1..n {
            hom_gens.push(homology_action(&data[n], n, k, &m.gens[n][k - 1], degree)?);
        }
        let rep = SymRep::new(n, hdim, hom_gens).map_err(|e| {
            GroupError::Coxeter(format!(
                "transposition relations fail on homology at rank {n}: {e:?}"
            ))
        })?;
        reps.push(rep);
    }

    let mut transitions = Vec::with_capacity(m.n_max);
    for n in 0..m.n_max {
        let t = &m.transitions[n];
        let (cur, next) = (&data[n], &data[n + 1]);
        let tr = if degree == 0 {
            next.th.h0_proj.mul(t).mul(&cur.th.h0_section)
        } else {
            let phi = transition_chain_map(n, t, field);
            if next.fox.d1.mul(&phi) != t.mul(&cur.fox.d1) {
                return Err(GroupError::ChainMap(format!(
                    "stabilization is not a chain map at rank {n}"
                )));
            }
            next.th
                .h1_coords(&phi.mul(&cur.th.h1_chain_reps()))
                .ok_or_else(|| GroupError::ChainMap(format!(
                    "stabilization image of a cycle is not a cycle at rank {n}"
                )))?
        };
        transitions.push(tr);
    }

    FIModule::new(reps, transitions).map_err(|e| {
        GroupError::Coxeter(format!(
            "assembled module fails equivariance validation: {e:?}"
        ))
    })
}
