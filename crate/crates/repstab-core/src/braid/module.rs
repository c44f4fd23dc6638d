//! Braid words, truncated braid-category modules (per-rank braid
//! representations with intertwining stabilization maps), polynomial degree
//! through the action-free recursion with the braided twist, orbit-span
//! generation degree, and restriction to the pure braid subgroup.

use num::BigRational;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::exactlin::{Field, Matrix};
use crate::figmod::{quotient_basis, ShiftTower, U1Module};

use super::burau::{reduced_burau, unreduced_burau_generic};
use super::BraidError;

/// A braid word: signed generator indices, 1-based (−i means σᵢ⁻¹).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidWord {
    pub n: usize,
    pub letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i64>) -> BraidWord {
        for &l in &letters {
            assert!(l != 0 && (l.unsigned_abs() as usize) < n, "letter out of range");
        }
        BraidWord { n, letters }.reduced()
    }

    /// Free reduction: cancel adjacent σᵢσᵢ⁻¹ pairs.
    pub fn reduced(&self) -> BraidWord {
        let mut out: Vec<i64> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            n: self.n,
            letters: out,
        }
    }

    /// Evaluate in a representation given generator matrices (index i-1 for
    /// σᵢ) and their inverses.
    pub fn evaluate(&self, gens: &[Matrix], invs: &[Matrix]) -> Matrix {
        let dim = gens.first().map(|g| g.rows).unwrap_or(0);
        let field = gens.first().map(|g| g.field).unwrap_or(Field::Q);
        let mut acc = Matrix::identity(dim, field);
        for &l in &self.letters {
            let m = if l > 0 {
                &gens[(l - 1) as usize]
            } else {
                &invs[(-l - 1) as usize]
            };
            acc = acc.mul(m);
        }
        acc
    }
}

/// A truncated module over the braid stability category: per-rank braid
/// generator matrices with stabilization maps that prepend a strand.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct UBrModule {
    pub n_max: usize,
    /// gens[n] holds ρₙ(σ₁..σ_{n−1}); index 0 has no generators.
    pub gens: Vec<Vec<Matrix>>,
    /// transitions[n]: A_n → A_{n+1}.
    pub transitions: Vec<Matrix>,
}

impl UBrModule {
    pub fn dim(&self, n: usize) -> usize {
        if n > self.n_max {
            return 0;
        }
        self.gens[n]
            .first()
            .map(|g| g.rows)
            .unwrap_or_else(|| self.transitions.get(n).map(|t| t.cols).unwrap_or(0))
    }

    pub fn field(&self) -> Field {
        self.gens
            .iter()
            .find_map(|g| g.first().map(|m| m.field))
            .unwrap_or(Field::Q)
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.n_max).map(|n| self.dim(n)).collect()
    }

    /// Braid relations per rank and the stabilization intertwining
    /// T∘ρₙ(σᵢ) = ρₙ₊₁(σᵢ₊₁)∘T.
    pub fn validate(&self) -> Result<(), BraidError> {
        for (n, gens) in self.gens.iter().enumerate() {
            for i in 0..gens.len() {
                for j in i + 1..gens.len() {
                    let ok = if j == i + 1 {
                        gens[i].mul(&gens[j]).mul(&gens[i])
                            == gens[j].mul(&gens[i]).mul(&gens[j])
                    } else {
                        gens[i].mul(&gens[j]) == gens[j].mul(&gens[i])
                    };
                    if !ok {
                        return Err(BraidError::Relation(format!(
                            "rank {n}: relation fails for generators {} and {}",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        for n in 0..self.n_max {
            let t = &self.transitions[n];
            for (i, g) in self.gens[n].iter().enumerate() {
                if t.mul(g) != self.gens[n + 1][i + 1].mul(t) {
                    return Err(BraidError::Intertwining { rank: n, gen: i + 1 });
                }
            }
        }
        Ok(())
    }

    pub fn underlying_u1(&self) -> U1Module {
        U1Module {
            n_max: self.n_max,
            dims: self.dims(),
            transitions: self.transitions.clone(),
        }
    }
}

/// The polynomial-degree recursion for braid-category modules: like the
/// symmetric-group case, the shift's transition carries the braided twist
/// ρ(σ₁)∘T, which descends to cokernels.
impl ShiftTower for UBrModule {
    fn window(&self) -> usize {
        self.n_max
    }
    fn dim(&self, n: usize) -> usize {
        UBrModule::dim(self, n)
    }
    fn transition(&self, n: usize) -> &Matrix {
        &self.transitions[n]
    }
    fn coker(&self) -> Self {
        let field = self.field();
        let new_max = self.n_max - 1;
        let mut sections = Vec::with_capacity(new_max + 1);
        let mut projs = Vec::with_capacity(new_max + 1);
        let mut gens = Vec::with_capacity(new_max + 1);
        for n in 0..=new_max {
            let (e, p) = quotient_basis(&self.transitions[n]);
            // 𝔖ₙ-side of the braid action on the cokernel comes from
            // σ₂..σₙ of rank n+1 (the last-n embedding).
            let g = self.gens[n + 1]
                .iter()
                .skip(1)
                .map(|m| p.mul(&m.mul(&e)))
                .collect();
            gens.push(g);
            sections.push(e);
            projs.push(p);
        }
        let transitions = (0..new_max)
            .map(|n| {
                let u = if self.gens[n + 2].is_empty() {
                    self.transitions[n + 1].clone()
                } else {
                    self.gens[n + 2][0].mul(&self.transitions[n + 1])
                };
                projs[n + 1].mul(&u.mul(&sections[n]))
            })
            .collect();
        let _ = field;
        UBrModule {
            n_max: new_max,
            gens,
            transitions,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BurauVariant {
    /// Dimension n-1 per rank.
    Reduced,
    /// Dimension n per rank.
    Unreduced,
}

/// The Burau family at a rational value of t, packaged as a truncated
/// braid-category module with the prepend stabilization.
pub fn burau_ubr_module(
    n_max: usize,
    t: &BigRational,
    variant: BurauVariant,
    field: Field,
) -> Result<UBrModule, BraidError> {
    assert!(n_max >= 2);
    let mut gens = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let generic = match variant {
            BurauVariant::Reduced => {
                if n < 2 {
                    Vec::new()
                } else {
                    reduced_burau(n)?
                }
            }
            BurauVariant::Unreduced => unreduced_burau_generic(n),
        };
        gens.push(generic.iter().map(|m| m.eval(t, field)).collect::<Vec<_>>());
    }
    let dims: Vec<usize> = (0..=n_max)
        .map(|n| match variant {
            BurauVariant::Reduced => n.saturating_sub(1),
            BurauVariant::Unreduced => n,
        })
        .collect();
    // Stabilization: coordinate shift by one (w_j ↦ w_{j+1} in the reduced
    // basis, e_j ↦ e_{j+1} unreduced).
    let transitions = (0..n_max)
        .map(|n| {
            Matrix::from_fn(dims[n + 1], dims[n], field, |r, c| {
                if r == c + (dims[n + 1] - dims[n]) {
                    field.one()
                } else {
                    field.zero()
                }
            })
        })
        .collect();
    let m = UBrModule {
        n_max,
        gens,
        transitions,
    };
    m.validate()?;
    Ok(m)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GenerationReport {
    /// Largest rank whose orbit-span closure misses part of the space; None
    /// when every rank is reached (including rank 0 being zero).
    pub generation: Option<usize>,
    pub window: usize,
    /// Codimension of the closure of the stabilization image, per rank.
    pub codims: Vec<usize>,
    pub is_lower_bound: bool,
}

/// Braid-orbit generation degree: at each rank, close the image of the
/// stabilization under multiplication by all ρ(σᵢ)^{±1} and measure the
/// codimension. Exact arithmetic makes the fixpoint terminate within
/// dim A_n steps, and the result is independent of processing order.
pub fn br_generation_degree(m: &UBrModule) -> Result<GenerationReport, BraidError> {
    let field = m.field();
    let mut codims = Vec::with_capacity(m.n_max + 1);
    for n in 0..=m.n_max {
        let dim = m.dim(n);
        let seed = if n == 0 {
            Matrix::zero(dim, 0, field)
        } else {
            m.transitions[n - 1].clone()
        };
        let mut actors: Vec<Matrix> = Vec::new();
        for g in &m.gens[n] {
            actors.push(g.clone());
            actors.push(g.inverse().map_err(|_| BraidError::Relation(
                format!("rank {n}: generator not invertible"),
            ))?);
        }
        let mut span = seed;
        let mut rank = span.rank();
        loop {
            let mut grew = false;
            for a in &actors {
                let cand = span.hstack(&a.mul(&span));
                let r = cand.rank_and_bases();
                if r.rank > rank {
                    span = r.image;
                    rank = r.rank;
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        codims.push(dim - rank);
    }
    let generation = (0..=m.n_max).rev().find(|&n| codims[n] > 0);
    Ok(GenerationReport {
        generation,
        window: m.n_max,
        codims: codims.clone(),
        is_lower_bound: codims[m.n_max] > 0,
    })
}

/// The one-dimensional module on which every braid generator acts as the
/// identity, with identity transitions.
pub fn trivial_ubr_module(n_max: usize, field: Field) -> UBrModule {
    UBrModule {
        n_max,
        gens: (0..=n_max)
            .map(|n| vec![Matrix::identity(1, field); n.saturating_sub(1)])
            .collect(),
        transitions: vec![Matrix::identity(1, field); n_max],
    }
}

/// Matrices of the standard pure-braid generators
/// A_{ij} = (σ_{j−1}⋯σ_{i+1}) σᵢ² (σ_{i+1}⁻¹⋯σ_{j−1}⁻¹), 1 ≤ i < j ≤ n,
/// in a braid representation given by its generator matrices.
pub fn restrict_to_pure(
    gens: &[Matrix],
    n: usize,
) -> Result<BTreeMap<(usize, usize), Matrix>, BraidError> {
    assert_eq!(gens.len() + 1, n.max(1), "need n-1 generator matrices");
    let invs: Vec<Matrix> = gens
        .iter()
        .map(|g| {
            g.inverse()
                .map_err(|_| BraidError::Relation("generator not invertible".into()))
        })
        .collect::<Result<_, _>>()?;
    let mut out = BTreeMap::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let word = pure_generator_word(n, i, j);
            out.insert((i, j), word.evaluate(gens, &invs));
        }
    }
    Ok(out)
}

/// The braid word for A_{ij}.
pub fn pure_generator_word(n: usize, i: usize, j: usize) -> BraidWord {
    assert!(1 <= i && i < j && j <= n);
    let mut letters: Vec<i64> = (i + 1..j).rev().map(|k| k as i64).collect();
    letters.push(i as i64);
    letters.push(i as i64);
    letters.extend((i + 1..j).map(|k| -(k as i64)));
    BraidWord { n, letters }
}
