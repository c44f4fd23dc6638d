//! The reduced bar complex over the symmetric-group combinatorial category,
//! Tor of a module against the trivial module (two routes: bar and Koszul),
//! the splitting complex, and the split Steinberg modules that feed the
//! Koszul construction.
//!
//! Degree-p chains at rank n are indexed by ordered set decompositions
//! [n] = B₀ ⊔ B₁ ⊔ … ⊔ B_p with B₀ allowed empty and Bᵢ ≠ ∅ for i ≥ 1;
//! the B₀ slot carries a coefficient in A_{|B₀|} (identified along the order
//! isomorphism B₀ ≅ [|B₀|]). The differential is the alternating sum of
//! adjacent merges; merging B₀ with B₁ pushes the coefficient forward along
//! the order embedding B₀ ↪ B₀ ∪ B₁, and the face beyond B_p is zero because
//! the right coefficient is the trivial module concentrated in rank 0.

use std::collections::BTreeMap;
use std::sync::Mutex;

use crate::exactlin::{ChainComplex, Field, Matrix, Scalar, SparseCol};
use crate::figmod::FIModule;
use crate::symgrp::SymRep;

use super::HomalgError;

/// The trivial module concentrated in rank 0: the unit for the induction
/// product. Feeding it to the bar complex computes Tor(ℤ, ℤ).
pub fn unit_module(n_max: usize, field: Field) -> FIModule {
    let reps = (0..=n_max)
        .map(|n| SymRep {
            n,
            dim: usize::from(n == 0),
            gens: vec![Matrix::zero(0, 0, field); n.saturating_sub(1)],
        })
        .collect();
    let transitions = (0..n_max)
        .map(|n| Matrix::zero(0, usize::from(n == 0), field))
        .collect();
    FIModule::new_unchecked(reps, transitions)
}

/// Block assignments for degree p at rank n: vectors in {0..p}^n, letter ↦
/// block, with blocks 1..p nonempty. Lexicographic in the assignment vector.
fn assignments(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn rec(i: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            let mut seen = vec![false; p + 1];
            for &b in cur.iter() {
                seen[b] = true;
            }
            if seen[1..].iter().all(|&s| s) {
                out.push(cur.clone());
            }
            return;
        }
        for b in 0..=p {
            cur[i] = b;
            rec(i + 1, n, p, cur, out);
        }
    }
    if p <= n {
        rec(0, n, p, &mut cur, &mut out);
    }
    out
}

struct BarDegree {
    assignments: Vec<Vec<usize>>,
    /// Starting column of each assignment's coefficient block.
    offsets: Vec<usize>,
    index: BTreeMap<Vec<usize>, usize>,
    dim: usize,
}

fn bar_degree(a: &FIModule, n: usize, p: usize) -> BarDegree {
    let assignments = assignments(n, p);
    let mut offsets = Vec::with_capacity(assignments.len());
    let mut dim = 0;
    for v in &assignments {
        offsets.push(dim);
        let b0 = v.iter().filter(|&&b| b == 0).count();
        dim += a.dim(b0);
    }
    let index = assignments
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();
    BarDegree {
        assignments,
        offsets,
        index,
        dim,
    }
}

/// Merge blocks i and i+1 of an assignment (blocks above shift down).
fn merge_blocks(v: &[usize], i: usize) -> Vec<usize> {
    v.iter()
        .map(|&b| if b > i { b - 1 } else { b })
        .collect()
}

/// Order embedding of the coefficient slot under the 0-1 merge: where each
/// element of B₀ lands inside B₀ ∪ B₁, both read in increasing order.
fn merge_embedding(v: &[usize]) -> Vec<usize> {
    let merged: Vec<usize> = (0..v.len()).filter(|&l| v[l] <= 1).collect();
    merged
        .iter()
        .enumerate()
        .filter(|&(_, &l)| v[l] == 0)
        .map(|(pos, _)| pos)
        .collect()
}

/// The bar complex of A at rank n, built through homological degree `pmax`
/// (inclusive). Homology dims are valid in degrees < pmax; with pmax = n the
/// whole complex is present.
pub fn bar_complex_truncated(a: &FIModule, n: usize, pmax: usize) -> ChainComplex {
    assert!(n <= a.n_max, "rank beyond module truncation");
    let field = a.field();
    let top = pmax.min(n);
    let degrees: Vec<BarDegree> = (0..=top).map(|p| bar_degree(a, n, p)).collect();
    let mut coeff_cache: BTreeMap<(Vec<usize>, usize), Matrix> = BTreeMap::new();
    let mut boundaries = Vec::with_capacity(top);
    for p in 1..=top {
        let (src, tgt) = (&degrees[p], &degrees[p - 1]);
        let mut triples: Vec<(usize, usize, Scalar)> = Vec::new();
        for (j, v) in src.assignments.iter().enumerate() {
            let b0 = v.iter().filter(|&&b| b == 0).count();
            let cdim = a.dim(b0);
            if cdim == 0 {
                continue;
            }
            // Face 0: merge the coefficient slot with B₁.
            {
                let nv = merge_blocks(v, 0);
                let f = merge_embedding(v);
                let t = tgt.index[&nv];
                let target = f.len() + v.iter().filter(|&&b| b == 1).count();
                let m = coeff_cache
                    .entry((f.clone(), target))
                    .or_insert_with(|| a.fi_morphism(&f, target))
                    .clone();
                for k in 0..cdim {
                    for (r, val) in m.col(k) {
                        triples.push((tgt.offsets[t] + r, src.offsets[j] + k, val.clone()));
                    }
                }
            }
            // Inner faces: merge Bᵢ and Bᵢ₊₁, coefficient untouched.
            for i in 1..p {
                let nv = merge_blocks(v, i);
                let t = tgt.index[&nv];
                let sign = if i % 2 == 0 { field.one() } else { -field.one() };
                for k in 0..cdim {
                    triples.push((tgt.offsets[t] + k, src.offsets[j] + k, sign.clone()));
                }
            }
            // The face beyond B_p multiplies into the trivial right
            // coefficient concentrated in rank 0 and vanishes.
        }
        boundaries.push(Matrix::from_triples(tgt.dim, src.dim, field, &triples));
    }
    let dims = degrees.iter().map(|d| d.dim).collect();
    ChainComplex::new(0, dims, boundaries).expect("bar complex differential broken")
}

pub fn bar_complex(a: &FIModule, n: usize) -> ChainComplex {
    bar_complex_truncated(a, n, n)
}

/// The mirror-sided bar complex with the coefficient slot on the LAST block:
/// decompositions [n] = B₁ ⊔ … ⊔ B_p ⊔ C with Bᵢ ≠ ∅ and C allowed empty,
/// faces merging adjacent blocks rightward, the last face pushing B_p into
/// the coefficient. Its homology must agree with `bar_complex` degreewise.
pub fn bar_complex_swapped(a: &FIModule, n: usize) -> ChainComplex {
    assert!(n <= a.n_max);
    let field = a.field();
    // Reuse the assignment machinery with block p+1 relabeled: we encode the
    // coefficient block as 0 again but treat it as sitting last.
    let degrees: Vec<BarDegree> = (0..=n).map(|p| bar_degree(a, n, p)).collect();
    let mut boundaries = Vec::with_capacity(n);
    for p in 1..=n {
        let (src, tgt) = (&degrees[p], &degrees[p - 1]);
        let mut triples: Vec<(usize, usize, Scalar)> = Vec::new();
        for (j, v) in src.assignments.iter().enumerate() {
            let b0 = v.iter().filter(|&&b| b == 0).count();
            let cdim = a.dim(b0);
            if cdim == 0 {
                continue;
            }
            // Inner faces d_i merge B_i, B_{i+1} for i = 1..p-1.
            for i in 1..p {
                let nv = merge_blocks(v, i);
                let t = tgt.index[&nv];
                let sign = if i % 2 == 0 { field.one() } else { -field.one() };
                for k in 0..cdim {
                    triples.push((tgt.offsets[t] + k, src.offsets[j] + k, sign.clone()));
                }
            }
            // Last face d_p: push B_p into the coefficient slot.
            {
                let nv: Vec<usize> = v.iter().map(|&b| if b == p { 0 } else { b }).collect();
                let t = tgt.index[&nv];
                // Order embedding C ↪ C ∪ B_p.
                let merged: Vec<usize> = (0..v.len()).filter(|&l| v[l] == 0 || v[l] == p).collect();
                let f: Vec<usize> = merged
                    .iter()
                    .enumerate()
                    .filter(|&(_, &l)| v[l] == 0)
                    .map(|(pos, _)| pos)
                    .collect();
                let m = a.fi_morphism(&f, merged.len());
                let sign = if p % 2 == 0 { field.one() } else { -field.one() };
                for k in 0..cdim {
                    for (r, val) in m.col(k) {
                        triples.push((
                            tgt.offsets[t] + r,
                            src.offsets[j] + k,
                            sign.clone() * val.clone(),
                        ));
                    }
                }
            }
            // The face before B₁ multiplies into the trivial left coefficient
            // and vanishes.
        }
        boundaries.push(Matrix::from_triples(tgt.dim, src.dim, field, &triples));
    }
    let dims = degrees.iter().map(|d| d.dim).collect();
    ChainComplex::new(0, dims, boundaries).expect("swapped bar complex differential broken")
}

/// Compute-once cache of split Steinberg modules, shared across Koszul
/// constructions.
pub struct SstCache {
    field: Field,
    slots: Mutex<BTreeMap<usize, (Matrix, SymRep)>>,
}

impl SstCache {
    pub fn new(field: Field) -> SstCache {
        SstCache {
            field,
            slots: Mutex::new(BTreeMap::new()),
        }
    }

    fn entry(&self, p: usize) -> (Matrix, SymRep) {
        if let Some(e) = self.slots.lock().unwrap().get(&p) {
            return e.clone();
        }
        let (_, kernel) = sst_kernel(p, self.field);
        let rep = split_steinberg_from_kernel(p, self.field, &kernel);
        self.slots
            .lock()
            .unwrap()
            .entry(p)
            .or_insert((kernel, rep))
            .clone()
    }

    /// SStₚ: the top homology of the bar complex of the unit module at rank
    /// p, i.e. the kernel of the lowest bar differential in degree p, carried
    /// as a 𝔖ₚ-representation via letter relabeling.
    pub fn get(&self, p: usize) -> SymRep {
        self.entry(p).1
    }

    /// The same space as explicit kernel vectors in the degree-p bar basis.
    pub fn kernel(&self, p: usize) -> Matrix {
        self.entry(p).0
    }
}

/// The kernel basis of the top bar differential for the unit module at rank
/// p, in the basis of assignments of [p] into p singleton blocks.
fn sst_kernel(p: usize, field: Field) -> (Vec<Vec<usize>>, Matrix) {
    let unit = unit_module(p, field);
    let cx = bar_complex(&unit, p);
    let basis = assignments(p, p);
    let kernel = if p == 0 {
        Matrix::identity(1, field)
    } else {
        cx.boundaries[p - 1].rank_and_bases().kernel
    };
    (basis, kernel)
}

pub fn split_steinberg(p: usize, field: Field) -> SymRep {
    let (_, kernel) = sst_kernel(p, field);
    split_steinberg_from_kernel(p, field, &kernel)
}

fn split_steinberg_from_kernel(p: usize, field: Field, kernel: &Matrix) -> SymRep {
    let basis = assignments(p, p);
    let index: BTreeMap<&Vec<usize>, usize> =
        basis.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let dim = kernel.cols;
    let gens = (0..p.saturating_sub(1))
        .map(|i| {
            // Letter relabeling by the adjacent transposition (i, i+1).
            let cols: Vec<SparseCol> = basis
                .iter()
                .map(|v| {
                    let mut w = v.clone();
                    w.swap(i, i + 1);
                    vec![(index[&w], field.one())]
                })
                .collect();
            let perm = Matrix::from_cols(basis.len(), field, cols);
            kernel
                .solve(&perm.mul(&kernel))
                .expect("split Steinberg space not invariant under relabeling")
        })
        .collect();
    SymRep { n: p, dim, gens }
}

/// The Koszul complex of A at rank n: K_p = Ind(A_{n-p} ⊠ SStₚ), realized
/// inside the bar complex and carrying the restricted differential. The
/// commuting-square identity is enforced by construction: the bar
/// differential of an embedded chain is re-expressed in the embedded basis
/// of the next degree down, and failure to lie in that span is a hard error.
pub fn koszul_complex(a: &FIModule, n: usize, cache: &SstCache) -> Result<ChainComplex, HomalgError> {
    assert!(n <= a.n_max);
    let field = a.field();
    let bar = bar_complex(a, n);
    let degrees: Vec<BarDegree> = (0..=n).map(|p| bar_degree(a, n, p)).collect();

    // Embedding matrices E_p: K_p ↪ bar degree p.
    let mut embeddings: Vec<Matrix> = Vec::with_capacity(n + 1);
    let mut kdims: Vec<usize> = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let sst_basis = assignments(p, p);
        let sst_kernel = cache.kernel(p);
        let adim = a.dim(n - p);
        let sdim = sst_kernel.cols;
        let subsets = crate::homalg::subsets(n, p);
        let mut cols: Vec<SparseCol> = Vec::with_capacity(subsets.len() * sdim * adim);
        for s in &subsets {
            for t in 0..sdim {
                for k in 0..adim {
                    let mut col: SparseCol = Vec::new();
                    // Spread the SSt kernel vector over orderings of S.
                    for (w, coeff) in sst_kernel.col(t) {
                        let local = &sst_basis[*w];
                        // letter S[j] goes to block local[j]; others to B₀.
                        let mut v = vec![0usize; n];
                        for (j, &letter) in s.iter().enumerate() {
                            v[letter] = local[j];
                        }
                        let idx = degrees[p].index[&v];
                        col.push((degrees[p].offsets[idx] + k, coeff.clone()));
                    }
                    col.sort_by_key(|(r, _)| *r);
                    cols.push(col);
                }
            }
        }
        kdims.push(subsets.len() * sdim * adim);
        embeddings.push(Matrix::from_cols(degrees[p].dim, field, cols));
    }

    let mut boundaries = Vec::with_capacity(n);
    for p in 1..=n {
        let pushed = bar.boundaries[p - 1].mul(&embeddings[p]);
        let d = embeddings[p - 1].solve(&pushed).ok_or_else(|| {
            HomalgError::Koszul(format!(
                "differential leaves the embedded Koszul subspace at rank {n}, degree {p}"
            ))
        })?;
        boundaries.push(d);
    }
    ChainComplex::new(0, kdims, boundaries)
        .map_err(|e| HomalgError::Koszul(format!("Koszul complex at rank {n}: {e}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorMethod {
    Bar,
    Koszul,
}

/// Tor_i(A, ℤ)_n for i = 0..=n by the requested route.
pub fn tor_dims(
    a: &FIModule,
    n: usize,
    method: TorMethod,
    cache: &SstCache,
) -> Result<Vec<usize>, HomalgError> {
    let cx = match method {
        TorMethod::Bar => bar_complex(a, n),
        TorMethod::Koszul => koszul_complex(a, n, cache)?,
    };
    Ok(cx.homology_dims().into_iter().map(|(_, h)| h).collect())
}

/// Both routes, with agreement enforced; disagreement signals a differential
/// convention bug and is a hard failure.
pub fn tor_dims_checked(a: &FIModule, n: usize, cache: &SstCache) -> Result<Vec<usize>, HomalgError> {
    let bar = tor_dims(a, n, TorMethod::Bar, cache)?;
    let koszul = tor_dims(a, n, TorMethod::Koszul, cache)?;
    if bar != koszul {
        return Err(HomalgError::MethodDisagreement {
            n,
            bar,
            koszul,
        });
    }
    Ok(bar)
}

/// Tor₀(A)_n directly as coker(Ind A_{n-1} → A_n): the span of the images of
/// all injections from rank n-1. Independent of the bar route.
pub fn tor0_dim(a: &FIModule, n: usize) -> usize {
    if n == 0 {
        return a.dim(0);
    }
    let field = a.field();
    let mut span = Matrix::zero(a.dim(n), 0, field);
    for skip in 0..n {
        let f: Vec<usize> = (0..n).filter(|&x| x != skip).collect();
        span = span.hstack(&a.fi_morphism(&f, n));
    }
    a.dim(n) - span.rank()
}

/// Reduced homology of the splitting complex at rank n (i = 0..=n-2, via the
/// identification with bar degrees i+2 of the unit module) and the split
/// Steinberg representation SStₙ.
pub fn splitting_homology(
    n: usize,
    cache: &SstCache,
) -> Result<(Vec<usize>, SymRep), HomalgError> {
    assert!(n >= 1);
    let sst = cache.get(n);
    if n == 1 {
        // The complex is empty; SSt₁ is carried by Tor₁ of the unit module.
        return Ok((Vec::new(), sst));
    }
    let unit = unit_module(n, cache.field);
    let cx = bar_complex(&unit, n);
    let h = cx.homology_dims();
    let dims = (0..=n - 2).map(|i| h[i + 2].1).collect();
    Ok((dims, sst))
}
