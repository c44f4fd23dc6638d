//! Induction from Young subgroups, via explicit minimal-length coset
//! transversals.
//!
//! A composition μ = (μ₀, …, μ_k) of n places the Young subgroup
//! 𝔖_{μ₀} × ⋯ × 𝔖_{μ_k} on consecutive blocks of letters, left to right.
//! Minimal-length coset representatives of 𝔖ₙ / 𝔖_μ are exactly the
//! permutations that are increasing on each block; they are enumerated and
//! then sorted lexicographically on one-line notation, which fixes the block
//! indexing of every induced module.

use itertools::Itertools;

use super::partition::multinomial;
use super::perm::Permutation;
use super::rep::SymRep;
use super::SymError;
use crate::exactlin::{Field, Matrix, Scalar, SparseCol};

/// Minimal-length left-coset representatives of 𝔖ₙ / 𝔖_μ, sorted
/// lexicographically on one-line notation.
pub fn young_transversal(n: usize, mu: &[usize]) -> Result<Vec<Permutation>, SymError> {
    if mu.iter().sum::<usize>() != n {
        return Err(SymError::Malformed(format!(
            "composition {mu:?} does not sum to {n}"
        )));
    }
    // Choose, block by block, the increasing image sets.
    let mut reps: Vec<Vec<usize>> = vec![Vec::new()];
    let mut remaining: Vec<Vec<usize>> = vec![(0..n).collect()];
    for &size in mu {
        let mut next_reps = Vec::new();
        let mut next_remaining = Vec::new();
        for (prefix, avail) in reps.iter().zip(&remaining) {
            for combo in avail.iter().copied().combinations(size) {
                let mut p = prefix.clone();
                p.extend(&combo); // combinations are emitted in increasing order
                let rest: Vec<usize> = avail.iter().copied().filter(|x| !combo.contains(x)).collect();
                next_reps.push(p);
                next_remaining.push(rest);
            }
        }
        reps = next_reps;
        remaining = next_remaining;
    }
    let mut out: Vec<Permutation> = reps.into_iter().map(Permutation::from_images).collect();
    out.sort();
    debug_assert_eq!(out.len() as u64, multinomial(mu));
    Ok(out)
}

/// Decompose g·σ = σ' · h with σ' in the transversal and h in the Young
/// subgroup; returns (index of σ', h).
fn coset_decompose(
    g_sigma: &Permutation,
    mu: &[usize],
    transversal: &[Permutation],
) -> (usize, Permutation) {
    // σ' is the unique transversal element with the same image SETS per
    // block: sort the one-line images within each block.
    let mut sorted = g_sigma.one_line().to_vec();
    let mut offset = 0;
    for &size in mu {
        sorted[offset..offset + size].sort_unstable();
        offset += size;
    }
    let sigma_p = Permutation::from_images(sorted);
    let idx = transversal
        .binary_search(&sigma_p)
        .expect("coset representative not in transversal");
    // h = σ'⁻¹ ∘ g·σ lies in the Young subgroup.
    let h = sigma_p.inverse().compose(g_sigma);
    (idx, h)
}

/// Split an element of the Young subgroup into its per-block permutations.
fn block_components(h: &Permutation, mu: &[usize]) -> Vec<Permutation> {
    let mut out = Vec::with_capacity(mu.len());
    let mut offset = 0;
    for &size in mu {
        let images: Vec<usize> = (0..size).map(|j| h.apply(offset + j) - offset).collect();
        out.push(Permutation::from_images(images));
        offset += size;
    }
    out
}

fn kronecker(mats: &[Matrix], field: Field) -> Matrix {
    let mut acc = Matrix::identity(1, field);
    for m in mats {
        let rows = acc.rows * m.rows;
        let cols = acc.cols * m.cols;
        let mut triples: Vec<(usize, usize, Scalar)> = Vec::new();
        for j in 0..acc.cols {
            for (i, v) in acc.col(j) {
                for jj in 0..m.cols {
                    for (ii, w) in m.col(jj) {
                        triples.push((i * m.rows + ii, j * m.cols + jj, v * w));
                    }
                }
            }
        }
        acc = Matrix::from_triples(rows, cols, field, &triples);
    }
    acc
}

/// Ind_{𝔖_{μ₀}×⋯×𝔖_{μ_k}}^{𝔖ₙ} (V₀ ⊠ ⋯ ⊠ V_k). Basis: transversal index
/// (outer, slowest) × tensor basis of the factors (row-major).
pub fn induce(n: usize, mu: &[usize], factors: &[SymRep]) -> Result<SymRep, SymError> {
    if mu.len() != factors.len() {
        return Err(SymError::Malformed(
            "composition and factor list lengths differ".into(),
        ));
    }
    for (i, (&m, f)) in mu.iter().zip(factors).enumerate() {
        if f.n != m {
            return Err(SymError::Malformed(format!(
                "factor {i} is a representation of S_{} but the composition part is {m}",
                f.n
            )));
        }
    }
    let field = factors.iter().map(|f| f.field()).next().unwrap_or(Field::Q);
    let transversal = young_transversal(n, mu)?;
    let inner_dim: usize = factors.iter().map(|f| f.dim).product();
    let dim = transversal.len() * inner_dim;

    let mut gens = Vec::with_capacity(n.saturating_sub(1));
    for gi in 0..n.saturating_sub(1) {
        let g = Permutation::adjacent(n, gi);
        let mut cols: Vec<SparseCol> = vec![Vec::new(); dim];
        for (t, sigma) in transversal.iter().enumerate() {
            let (tp, h) = coset_decompose(&g.compose(sigma), mu, &transversal);
            let blocks = block_components(&h, mu);
            let mats: Vec<Matrix> = blocks
                .iter()
                .zip(factors)
                .map(|(b, f)| f.apply_perm(b))
                .collect();
            let block = kronecker(&mats, field);
            for j in 0..inner_dim {
                let mut col: SparseCol = block
                    .col(j)
                    .iter()
                    .map(|(i, v)| (tp * inner_dim + i, v.clone()))
                    .collect();
                col.sort_by_key(|(r, _)| *r);
                cols[t * inner_dim + j] = col;
            }
        }
        gens.push(Matrix::from_cols(dim, field, cols));
    }
    SymRep::new(n, dim, gens)
}
