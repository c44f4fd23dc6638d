//! Truncated FI-modules (U𝔖-modules): per-rank symmetric-group
//! representations with equivariant transition maps, plus the structural
//! operations (free modules, arbitrary-injection functoriality, shift,
//! kernel/cokernel).
//!
//! Conventions, used consistently across the crate:
//! - transitions realize the injection [n] ↪ [n+1] that PREPENDS a letter
//!   (i ↦ i+1), so 𝔖ₙ sits inside 𝔖ₙ₊₁ on the last n letters;
//! - the shift slot of ΣᵖA is therefore the first p letters, and the
//!   transition of ΣA is ρ(s₁)∘T, not T itself.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use super::FigError;
use crate::exactlin::{Field, Matrix, SparseCol};
use crate::symgrp::{Permutation, SymRep};

#[derive(Clone, Debug, PartialEq)]
pub struct FIModule {
    pub n_max: usize,
    /// reps[n] for n = 0..=n_max; zero ranks carry explicit 0-dimensional
    /// representations so edge degrees need no special-casing.
    pub reps: Vec<SymRep>,
    /// transitions[n]: A_n → A_{n+1}, the canonical map A → ΣA, for
    /// n = 0..n_max-1... (length n_max).
    pub transitions: Vec<Matrix>,
}

/// A U1-module: dimensions and transitions only, no group action.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct U1Module {
    pub n_max: usize,
    pub dims: Vec<usize>,
    pub transitions: Vec<Matrix>,
}

/// One problem found by `validate`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Violation {
    pub rank: usize,
    pub what: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl FIModule {
    pub fn new(reps: Vec<SymRep>, transitions: Vec<Matrix>) -> Result<FIModule, FigError> {
        assert!(!reps.is_empty(), "need at least rank 0");
        let n_max = reps.len() - 1;
        if transitions.len() != n_max {
            return Err(FigError::Malformed(format!(
                "{} ranks need {} transitions, got {}",
                reps.len(),
                n_max,
                transitions.len()
            )));
        }
        let m = FIModule {
            n_max,
            reps,
            transitions,
        };
        let report = m.validate();
        if !report.valid {
            let v = &report.violations[0];
            return Err(FigError::Invalid(format!(
                "rank {}: {} ({} violations total)",
                v.rank,
                v.what,
                report.violations.len()
            )));
        }
        Ok(m)
    }

    /// Construct without validating; for internal constructions that are
    /// correct by design and validated in tests.
    pub fn new_unchecked(reps: Vec<SymRep>, transitions: Vec<Matrix>) -> FIModule {
        let n_max = reps.len() - 1;
        FIModule {
            n_max,
            reps,
            transitions,
        }
    }

    pub fn field(&self) -> Field {
        self.reps
            .iter()
            .find_map(|r| r.gens.first().map(|g| g.field))
            .unwrap_or(Field::Q)
    }

    pub fn dim(&self, n: usize) -> usize {
        if n <= self.n_max {
            self.reps[n].dim
        } else {
            0
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.reps.iter().map(|r| r.dim).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.reps.iter().all(|r| r.dim == 0)
    }

    /// Full structural validation: Coxeter relations per rank, transition
    /// equivariance (T∘ρₙ(sᵢ) = ρₙ₊₁(sᵢ₊₁)∘T), and the double-transition
    /// coherence ρₙ₊₂(s₁)∘T∘T = T∘T that makes the two-step transition an
    /// honest FI morphism (single-step equivariance alone does not imply it).
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (n, rep) in self.reps.iter().enumerate() {
            if rep.n != n {
                violations.push(Violation {
                    rank: n,
                    what: format!("representation claims rank {}", rep.n),
                });
                continue;
            }
            if let Err(e) = rep.check_coxeter() {
                violations.push(Violation {
                    rank: n,
                    what: e.to_string(),
                });
            }
        }
        for (n, t) in self.transitions.iter().enumerate() {
            if t.rows != self.dim(n + 1) || t.cols != self.dim(n) {
                violations.push(Violation {
                    rank: n,
                    what: format!(
                        "transition is {}x{}, expected {}x{}",
                        t.rows,
                        t.cols,
                        self.dim(n + 1),
                        self.dim(n)
                    ),
                });
                continue;
            }
            for (i, g) in self.reps[n].gens.iter().enumerate() {
                let lhs = t.mul(g);
                let rhs = self.reps[n + 1].gens[i + 1].mul(t);
                if lhs != rhs {
                    violations.push(Violation {
                        rank: n,
                        what: format!("transition not equivariant for s_{}", i + 2),
                    });
                }
            }
        }
        for n in 0..self.transitions.len().saturating_sub(1) {
            let (t0, t1) = (&self.transitions[n], &self.transitions[n + 1]);
            if t1.cols != t0.rows || t0.cols != self.dim(n) || t1.rows != self.dim(n + 2) {
                continue; // shape problems already reported above
            }
            let tt = t1.mul(t0);
            if self.reps[n + 2].dim > 0 && self.reps[n + 2].gens.first().is_some() {
                let s1 = &self.reps[n + 2].gens[0];
                if s1.mul(&tt) != tt {
                    violations.push(Violation {
                        rank: n,
                        what: "double transition not invariant under s_1".into(),
                    });
                }
            }
        }
        ValidationReport {
            valid: violations.is_empty(),
            violations,
        }
    }

    /// Matrix of A(f) for an arbitrary injection f: [m] → [n], given by its
    /// 0-based image list. Decomposes f = σ_f ∘ (prepend)^{n-m} with σ_f the
    /// permutation matching images and order-preserving on new letters.
    pub fn fi_morphism(&self, f: &[usize], n: usize) -> Matrix {
        let m = f.len();
        assert!(n <= self.n_max && m <= n, "injection out of window");
        let mut mat = Matrix::identity(self.dim(m), self.field());
        for k in m..n {
            mat = self.transitions[k].mul(&mat);
        }
        // After (n-m) prepends, original letter i sits at position i + (n-m).
        let mut images = vec![usize::MAX; n];
        let mut used = vec![false; n];
        for (i, &fi) in f.iter().enumerate() {
            images[i + (n - m)] = fi;
            used[fi] = true;
        }
        let mut rest = (0..n).filter(|&x| !used[x]);
        for slot in images.iter_mut() {
            if *slot == usize::MAX {
                *slot = rest.next().expect("injection image mismatch");
            }
        }
        let sigma = Permutation::from_images(images);
        self.reps[n].apply_perm(&sigma).mul(&mat)
    }

    /// Forget the group action.
    pub fn underlying_u1(&self) -> U1Module {
        U1Module {
            n_max: self.n_max,
            dims: self.dims(),
            transitions: self.transitions.clone(),
        }
    }

    /// Direct sum, rankwise.
    pub fn direct_sum(&self, other: &FIModule) -> FIModule {
        assert_eq!(self.n_max, other.n_max);
        let reps: Vec<SymRep> = self
            .reps
            .iter()
            .zip(&other.reps)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        let field = self.field();
        let transitions = (0..self.n_max)
            .map(|n| {
                let (a, b) = (&self.transitions[n], &other.transitions[n]);
                Matrix::from_fn(a.rows + b.rows, a.cols + b.cols, field, |r, c| {
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
        FIModule::new_unchecked(reps, transitions)
    }
}

/// The free FI-module M(m) on one generator in rank m, truncated at n_max.
/// Basis at rank n: injective words of length m over [n] (ordered m-tuples
/// of distinct letters), lexicographic. 𝔖ₙ acts entrywise; the transition
/// prepends a letter, shifting every entry up by one.
pub fn free_module(m: usize, n_max: usize, field: Field) -> FIModule {
    assert!(m <= n_max, "generator rank beyond truncation");
    let bases: Vec<Vec<Vec<usize>>> = (0..=n_max).map(|n| injective_words(m, n)).collect();
    let reps: Vec<SymRep> = (0..=n_max)
        .map(|n| {
            let basis = &bases[n];
            let index: BTreeMap<&Vec<usize>, usize> =
                basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
            let dim = basis.len();
            let gens = (0..n.saturating_sub(1))
                .map(|i| {
                    let mut cols: Vec<SparseCol> = Vec::with_capacity(dim);
                    for w in basis {
                        let img: Vec<usize> = w
                            .iter()
                            .map(|&x| {
                                if x == i {
                                    i + 1
                                } else if x == i + 1 {
                                    i
                                } else {
                                    x
                                }
                            })
                            .collect();
                        cols.push(vec![(index[&img], field.one())]);
                    }
                    Matrix::from_cols(dim, field, cols)
                })
                .collect();
            SymRep { n, dim, gens }
        })
        .collect();
    let transitions = (0..n_max)
        .map(|n| {
            let tgt_index: BTreeMap<&Vec<usize>, usize> = bases[n + 1]
                .iter()
                .enumerate()
                .map(|(i, w)| (w, i))
                .collect();
            let cols: Vec<SparseCol> = bases[n]
                .iter()
                .map(|w| {
                    let img: Vec<usize> = w.iter().map(|&x| x + 1).collect();
                    vec![(tgt_index[&img], field.one())]
                })
                .collect();
            Matrix::from_cols(bases[n + 1].len(), field, cols)
        })
        .collect();
    FIModule::new_unchecked(reps, transitions)
}

/// All injective words of length m over [n], lexicographic.
pub fn injective_words(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut used = vec![false; n];
    fn rec(m: usize, n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(m, n, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    rec(m, n, &mut cur, &mut used, &mut out);
    out
}

/// The constant module: 1-dimensional in every rank, identity everything.
pub fn constant_module(n_max: usize, field: Field) -> FIModule {
    free_module(0, n_max, field)
}

/// The zero module.
pub fn zero_module(n_max: usize, field: Field) -> FIModule {
    let reps = (0..=n_max)
        .map(|n| SymRep {
            n,
            dim: 0,
            gens: vec![Matrix::zero(0, 0, field); n.saturating_sub(1)],
        })
        .collect();
    let transitions = (0..n_max).map(|_| Matrix::zero(0, 0, field)).collect();
    FIModule::new_unchecked(reps, transitions)
}

/// The p-shift ΣᵖA: rank n holds A_{n+p} with 𝔖ₙ acting through the last-n
/// embedding; truncation shrinks to n_max - p.
pub fn shift(a: &FIModule, p: usize) -> FIModule {
    assert!(p <= a.n_max, "shift beyond truncation");
    let new_max = a.n_max - p;
    let reps: Vec<SymRep> = (0..=new_max)
        .map(|n| SymRep {
            n,
            dim: a.dim(n + p),
            gens: a.reps[n + p].gens.iter().skip(p).cloned().collect(),
        })
        .collect();
    // Transition of ΣᵖA at rank n realizes the injection fixing the p shift
    // slots (letters 0..p) and prepending the new letter just after them.
    let transitions: Vec<Matrix> = (0..new_max)
        .map(|n| {
            let f: Vec<usize> = (0..p).chain(p + 1..n + p + 1).collect();
            debug_assert_eq!(f.len(), n + p);
            a.fi_morphism(&f, n + p + 1)
        })
        .collect();
    FIModule::new_unchecked(reps, transitions)
}

/// A chosen complement of a subspace: returns (section E, projection π) where
/// E's columns are standard basis vectors completing `image` to a basis,
/// chosen greedily in index order, and π maps onto those coordinates in the
/// quotient. π∘E = id, π∘image = 0.
pub fn quotient_basis(image: &Matrix) -> (Matrix, Matrix) {
    let dim = image.rows;
    let field = image.field;
    let mut chosen = Vec::new();
    let mut span = image.clone();
    for e in 0..dim {
        let cand = span.hstack(&Matrix::from_triples(
            dim,
            1,
            field,
            &[(e, 0, field.one())],
        ));
        if cand.rank() > span.rank() {
            chosen.push(e);
            span = cand;
        }
    }
    let e_mat = Matrix::from_fn(dim, chosen.len(), field, |r, c| {
        if chosen[c] == r {
            field.one()
        } else {
            field.zero()
        }
    });
    // Full basis B = [image_basis | E]; π = bottom rows of B⁻¹.
    let rd = image.rank_and_bases();
    let basis = rd.image.hstack(&e_mat);
    let inv = basis.inverse().expect("quotient basis construction failed");
    let proj = Matrix::from_fn(chosen.len(), dim, field, |r, c| {
        inv.get(rd.rank + r, c)
    });
    (e_mat, proj)
}

/// Degreewise kernel and cokernel of the canonical map A → ΣA. Both are
/// FI-modules truncated at n_max - 1. The kernel's transitions are zero by
/// definition (kernel elements die under the transition); the cokernel's
/// transitions are induced by ΣA's transition ρ(s₁)∘T.
pub fn ker_coker(a: &FIModule) -> (FIModule, FIModule) {
    assert!(a.n_max >= 1, "need at least two ranks");
    let field = a.field();
    let new_max = a.n_max - 1;

    let mut ker_reps = Vec::with_capacity(new_max + 1);
    let mut ker_bases = Vec::with_capacity(new_max + 1);
    let mut coker_reps = Vec::with_capacity(new_max + 1);
    let mut coker_sections = Vec::with_capacity(new_max + 1);
    let mut coker_projs = Vec::with_capacity(new_max + 1);

    for n in 0..=new_max {
        let t = &a.transitions[n];
        let rd = t.rank_and_bases();
        // Kernel representation: restrict ρ_n to ker basis K: solve K X = ρ K.
        let k = rd.kernel;
        let kdim = k.cols;
        let kgens: Vec<Matrix> = a.reps[n]
            .gens
            .iter()
            .map(|g| {
                if kdim == 0 {
                    Matrix::zero(0, 0, field)
                } else {
                    k.solve(&g.mul(&k))
                        .expect("kernel not invariant under the group action")
                }
            })
            .collect();
        ker_reps.push(SymRep {
            n,
            dim: kdim,
            gens: kgens,
        });
        ker_bases.push(k);

        // Cokernel representation at rank n lives in A_{n+1}/im(T_n); the
        // 𝔖ₙ-action comes from generators s₂.. of 𝔖ₙ₊₁ (last-n embedding).
        let (section, proj) = quotient_basis(t);
        let cgens: Vec<Matrix> = a.reps[n + 1]
            .gens
            .iter()
            .skip(1)
            .map(|g| proj.mul(&g.mul(&section)))
            .collect();
        coker_reps.push(SymRep {
            n,
            dim: section.cols,
            gens: cgens,
        });
        coker_sections.push(section);
        coker_projs.push(proj);
    }

    let ker_transitions: Vec<Matrix> = (0..new_max)
        .map(|n| Matrix::zero(ker_reps[n + 1].dim, ker_reps[n].dim, field))
        .collect();

    let coker_transitions: Vec<Matrix> = (0..new_max)
        .map(|n| {
            // ΣA transition at rank n: ρ_{n+2}(s₁) ∘ T_{n+1}.
            let u = if a.reps[n + 2].gens.is_empty() {
                a.transitions[n + 1].clone()
            } else {
                a.reps[n + 2].gens[0].mul(&a.transitions[n + 1])
            };
            coker_projs[n + 1].mul(&u.mul(&coker_sections[n]))
        })
        .collect();

    let ker = FIModule::new_unchecked(ker_reps, ker_transitions);
    let coker = FIModule::new_unchecked(coker_reps, coker_transitions);
    (ker, coker)
}
