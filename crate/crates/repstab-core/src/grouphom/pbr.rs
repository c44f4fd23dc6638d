//! The standard presentation of the pure braid group PBrₙ on the generators
//! A_{ij} = (σ_{j−1}⋯σ_{i+1}) σᵢ² (σ_{i+1}⁻¹⋯σ_{j−1}⁻¹), 1 ≤ i < j ≤ n,
//! together with the conjugation action of the braid generators σₖ.
//!
//! Relators are produced from the semidirect decomposition
//! PBrₙ = PBrₙ₋₁ ⋉ Fₙ₋₁ (the free group on A_{1n}, …, A_{n−1,n}): each
//! conjugate A_{rs} A_{im} A_{rs}⁻¹ with s < m rewrites as a word in the
//! A_{*m} via the Artin action of the σ-word behind A_{rs}.

use std::collections::BTreeMap;

use crate::braid::{pure_generator_word, reduced_burau_generic, LaurentMatrix};

use super::words::{concat_words, invert_word, reduce_word, GroupPresentation, Word};
use super::GroupError;

/// The pairs (i, j), 1 ≤ i < j ≤ n, in the order fixed for generator indexing.
pub fn pure_gens(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push((i, j));
        }
    }
    out
}

fn gen_index(n: usize) -> BTreeMap<(usize, usize), i64> {
    pure_gens(n)
        .into_iter()
        .enumerate()
        .map(|(k, g)| (g, k as i64 + 1))
        .collect()
}

/// Action of σₖ^{±1} on a word in the free letters x_i (signed ints i):
/// σₖ: xₖ ↦ xₖ₊₁, xₖ₊₁ ↦ xₖ₊₁⁻¹ xₖ xₖ₊₁, others fixed.
fn sigma_on_x(k: i64, sign: i64, w: &[i64]) -> Word {
    let mut out: Word = Vec::new();
    for &l in w {
        let i = l.abs();
        let im: Word = if sign > 0 {
            if i == k {
                vec![k + 1]
            } else if i == k + 1 {
                vec![-(k + 1), k, k + 1]
            } else {
                vec![i]
            }
        } else if i == k {
            vec![k, k + 1, -k]
        } else if i == k + 1 {
            vec![k]
        } else {
            vec![i]
        };
        let piece = if l > 0 { im } else { invert_word(&im) };
        out = concat_words(&out, &piece);
    }
    out
}

/// Conjugate a free-letter word by a σ-word: w ↦ (σ-word) w (σ-word)⁻¹.
fn conj_word_on_x(sigma_word: &[i64], w: &[i64]) -> Word {
    let mut w = w.to_vec();
    for &l in sigma_word.iter().rev() {
        w = sigma_on_x(l.abs(), l.signum(), &w);
    }
    w
}

/// The standard presentation of PBrₙ. For n ≤ 2 there are no relators.
pub fn pbr_presentation(n: usize) -> GroupPresentation {
    let gens = pure_gens(n);
    let gi = gen_index(n);
    let names = gens.iter().map(|(i, j)| format!("A{i}_{j}")).collect();
    let mut relators = Vec::new();
    for m in 3..=n {
        for r in 1..m {
            for s in r + 1..m {
                let sw = pure_generator_word(n, r, s).letters;
                for i in 1..m {
                    let image = conj_word_on_x(&sw, &[i as i64]);
                    let lhs = vec![gi[&(r, s)], gi[&(i, m)], -gi[&(r, s)]];
                    let rhs: Word = image
                        .iter()
                        .map(|&l| l.signum() * gi[&(l.unsigned_abs() as usize, m)])
                        .collect();
                    let rel = reduce_word(&concat_words(&lhs, &invert_word(&rhs)));
                    if !rel.is_empty() {
                        relators.push(rel);
                    }
                }
            }
        }
    }
    GroupPresentation::new(names, relators)
}

/// Words for σₖ A_{ij} σₖ⁻¹ over the A-generators, indexed like `pure_gens(n)`.
pub fn conjugation_table(k: usize, n: usize) -> Vec<Word> {
    assert!(1 <= k && k < n);
    let gi = gen_index(n);
    pure_gens(n)
        .into_iter()
        .map(|(i, j)| {
            if i != k && i != k + 1 && j != k && j != k + 1 {
                vec![gi[&(i, j)]]
            } else if (i, j) == (k, k + 1) {
                vec![gi[&(i, j)]]
            } else if j == k && i < k {
                vec![gi[&(i, k + 1)]]
            } else if j == k + 1 && i < k {
                vec![-gi[&(i, k + 1)], gi[&(i, k)], gi[&(i, k + 1)]]
            } else if i == k && j > k + 1 {
                vec![gi[&(k + 1, j)]]
            } else {
                // i == k + 1, j > k + 1
                vec![gi[&(k, k + 1)], gi[&(k, j)], -gi[&(k, k + 1)]]
            }
        })
        .collect()
}

/// Check the conjugation word table against explicit matrices: in the
/// rank-(n−1) Burau representation at a formal parameter t, every table entry
/// must satisfy ρ(σₖ) ρ(A_{ij}) ρ(σₖ)⁻¹ = ρ(word).
pub fn validate_conjugation_table(n: usize) -> Result<(), GroupError> {
    if n < 2 {
        return Ok(());
    }
    let gens = reduced_burau_generic(n);
    let invs: Vec<LaurentMatrix> = gens
        .iter()
        .map(|g| g.inverse_unit().expect("braid generator is invertible"))
        .collect();
    let eval_sigma = |w: &[i64]| {
        let mut m = LaurentMatrix::identity(n - 1);
        for &l in w {
            let g = l.unsigned_abs() as usize - 1;
            m = m.mul(if l > 0 { &gens[g] } else { &invs[g] });
        }
        m
    };
    let pure: Vec<LaurentMatrix> = pure_gens(n)
        .iter()
        .map(|&(i, j)| eval_sigma(&pure_generator_word(n, i, j).letters))
        .collect();
    let pure_inv: Vec<LaurentMatrix> = pure
        .iter()
        .map(|m| m.inverse_unit().expect("pure generator is invertible"))
        .collect();
    let eval_pure = |w: &[i64]| {
        let mut m = LaurentMatrix::identity(n - 1);
        for &l in w {
            let g = l.unsigned_abs() as usize - 1;
            m = m.mul(if l > 0 { &pure[g] } else { &pure_inv[g] });
        }
        m
    };
    for k in 1..n {
        let table = conjugation_table(k, n);
        for (g, word) in table.iter().enumerate() {
            let lhs = gens[k - 1].mul(&pure[g]).mul(&invs[k - 1]);
            if lhs != eval_pure(word) {
                return Err(GroupError::Table(format!(
                    "conjugation word for generator {g} under sigma_{k} at n={n} \
                     disagrees with the matrix computation"
                )));
            }
        }
    }
    Ok(())
}
