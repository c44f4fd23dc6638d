//! Matrix representations of symmetric groups, given by images of the
//! adjacent transpositions.

use serde::{Deserialize, Serialize};

use super::perm::Permutation;
use super::SymError;
use crate::exactlin::{Field, Matrix};

/// A representation of 𝔖ₙ: one matrix per adjacent transposition
/// s₁, …, sₙ₋₁ (indexed 0..n-1 internally). For n ≤ 1 there are no
/// generators and the representation is just a dimension.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymRep {
    pub n: usize,
    pub dim: usize,
    pub gens: Vec<Matrix>,
}

impl SymRep {
    pub fn new(n: usize, dim: usize, gens: Vec<Matrix>) -> Result<SymRep, SymError> {
        let rep = SymRep { n, dim, gens };
        rep.check_coxeter()?;
        Ok(rep)
    }

    /// Coxeter presentation check: involutions, braid relation for
    /// neighbours, commutation for distant generators.
    pub fn check_coxeter(&self) -> Result<(), SymError> {
        let expected = self.n.saturating_sub(1);
        if self.gens.len() != expected {
            return Err(SymError::Malformed(format!(
                "S_{} representation needs {} generators, got {}",
                self.n,
                expected,
                self.gens.len()
            )));
        }
        for (i, g) in self.gens.iter().enumerate() {
            if g.rows != self.dim || g.cols != self.dim {
                return Err(SymError::Malformed(format!(
                    "generator {} has shape {}x{}, expected {}x{}",
                    i + 1,
                    g.rows,
                    g.cols,
                    self.dim,
                    self.dim
                )));
            }
        }
        let id = Matrix::identity(self.dim, self.field());
        for (i, g) in self.gens.iter().enumerate() {
            if g.mul(g) != id {
                return Err(SymError::Coxeter(format!("s_{}^2 != 1", i + 1)));
            }
        }
        for i in 0..self.gens.len().saturating_sub(1) {
            let (a, b) = (&self.gens[i], &self.gens[i + 1]);
            if a.mul(&b.mul(a)) != b.mul(&a.mul(b)) {
                return Err(SymError::Coxeter(format!(
                    "braid relation fails at s_{}, s_{}",
                    i + 1,
                    i + 2
                )));
            }
        }
        for i in 0..self.gens.len() {
            for j in i + 2..self.gens.len() {
                let (a, b) = (&self.gens[i], &self.gens[j]);
                if a.mul(b) != b.mul(a) {
                    return Err(SymError::Coxeter(format!(
                        "s_{} and s_{} do not commute",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.gens
            .first()
            .map(|g| g.field)
            .unwrap_or(Field::Q)
    }

    /// The matrix of an arbitrary permutation, via a factorization into
    /// adjacent transpositions.
    pub fn apply_perm(&self, p: &Permutation) -> Matrix {
        assert_eq!(p.n(), self.n, "permutation rank mismatch");
        let mut m = Matrix::identity(self.dim, self.field());
        for i in p.adjacent_word() {
            m = self.gens[i].mul(&m);
        }
        m
    }

    pub fn trace(m: &Matrix) -> crate::exactlin::Scalar {
        let mut t = m.field.zero();
        for j in 0..m.cols {
            t += &m.get(j, j);
        }
        t
    }

    /// Restriction to 𝔖ₙ₋₁ acting on the last n-1 letters (the global
    /// stabilization convention): drop the first generator.
    pub fn restrict(&self) -> SymRep {
        assert!(self.n >= 1, "cannot restrict S_0");
        SymRep {
            n: self.n - 1,
            dim: self.dim,
            gens: self.gens.iter().skip(1).cloned().collect(),
        }
    }

    pub fn direct_sum(&self, other: &SymRep) -> SymRep {
        assert_eq!(self.n, other.n);
        let dim = self.dim + other.dim;
        let field = self.field();
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(a, b)| {
                Matrix::from_fn(dim, dim, field, |r, c| {
                    if r < a.rows && c < a.cols {
                        a.get(r, c)
                    } else if r >= a.rows && c >= a.cols {
                        b.get(r - a.rows, c - a.cols)
                    } else {
                        field.zero()
                    }
                })
            })
            .collect();
        SymRep { n: self.n, dim, gens }
    }
}

pub fn trivial_rep(n: usize, field: Field) -> SymRep {
    SymRep {
        n,
        dim: 1,
        gens: vec![Matrix::identity(1, field); n.saturating_sub(1)],
    }
}

pub fn sign_rep(n: usize, field: Field) -> SymRep {
    let m = Matrix::identity(1, field).neg();
    SymRep {
        n,
        dim: 1,
        gens: vec![m; n.saturating_sub(1)],
    }
}

/// The n-dimensional permutation representation on basis vectors e₁..eₙ.
pub fn permutation_rep(n: usize, field: Field) -> SymRep {
    let gens = (0..n.saturating_sub(1))
        .map(|i| {
            Matrix::from_fn(n, n, field, |r, c| {
                let image = if c == i {
                    i + 1
                } else if c == i + 1 {
                    i
                } else {
                    c
                };
                if r == image { field.one() } else { field.zero() }
            })
        })
        .collect();
    SymRep { n, dim: n, gens }
}

/// The regular representation: basis indexed by all of 𝔖ₙ (lexicographic
/// one-line order), generators acting by left multiplication.
pub fn regular_rep(n: usize, field: Field) -> SymRep {
    let elements = all_permutations(n);
    let index = |p: &Permutation| elements.binary_search(p).expect("missing group element");
    let dim = elements.len();
    let gens = (0..n.saturating_sub(1))
        .map(|i| {
            let s = Permutation::adjacent(n, i);
            Matrix::from_fn(dim, dim, field, |r, c| {
                if index(&s.compose(&elements[c])) == r {
                    field.one()
                } else {
                    field.zero()
                }
            })
        })
        .collect();
    SymRep { n, dim, gens }
}

/// All permutations of n letters in lexicographic one-line order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if cur.len() == n {
            out.push(Permutation::from_images(cur.clone()));
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(n, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}
