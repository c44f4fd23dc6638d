//! The central stability chain complex: degree-p chains at rank n are
//! injective words of length p+1 over [n] with a coefficient in the module
//! evaluated on the complement, running from degree -1 (the empty word,
//! coefficient A_n) up to degree n-1.

use std::collections::BTreeMap;

use crate::exactlin::{ChainComplex, Matrix, Scalar};
use crate::figmod::{injective_words, FIModule};

use super::{bar::tor0_dim, HomalgError};

struct CentralDegree {
    words: Vec<Vec<usize>>,
    offsets: Vec<usize>,
    index: BTreeMap<Vec<usize>, usize>,
    dim: usize,
    coeff_dim: usize,
}

fn central_degree(a: &FIModule, n: usize, len: usize) -> CentralDegree {
    let words = injective_words(len, n);
    let coeff_dim = a.dim(n - len);
    let offsets = (0..words.len()).map(|i| i * coeff_dim).collect();
    let index = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();
    CentralDegree {
        dim: words.len() * coeff_dim,
        words,
        offsets,
        index,
        coeff_dim,
    }
}

/// Build the complex; degrees -1..=n-1, where the degree-p space holds words
/// of length p+1.
pub fn central_complex(a: &FIModule, n: usize) -> ChainComplex {
    assert!(n <= a.n_max, "rank beyond module truncation");
    let field = a.field();
    let degrees: Vec<CentralDegree> = (0..=n).map(|len| central_degree(a, n, len)).collect();
    let mut boundaries = Vec::with_capacity(n);
    for len in 1..=n {
        let (src, tgt) = (&degrees[len], &degrees[len - 1]);
        let mut triples: Vec<(usize, usize, Scalar)> = Vec::new();
        for (j, w) in src.words.iter().enumerate() {
            if src.coeff_dim == 0 {
                continue;
            }
            let complement: Vec<usize> = (0..n).filter(|x| !w.contains(x)).collect();
            for i in 0..len {
                // Delete letter i; the complement gains w[i], and the
                // coefficient is pushed along the order embedding.
                let mut nw = w.clone();
                let letter = nw.remove(i);
                let t = tgt.index[&nw];
                let mut bigger = complement.clone();
                let pos = bigger.partition_point(|&x| x < letter);
                bigger.insert(pos, letter);
                let f: Vec<usize> = complement
                    .iter()
                    .map(|&x| bigger.partition_point(|&y| y < x))
                    .collect();
                let m = a.fi_morphism(&f, bigger.len());
                let sign = if i % 2 == 0 { field.one() } else { -field.one() };
                for k in 0..src.coeff_dim {
                    for (r, val) in m.col(k) {
                        triples.push((
                            tgt.offsets[t] + r,
                            src.offsets[j] + k,
                            sign.clone() * val.clone(),
                        ));
                    }
                }
            }
        }
        boundaries.push(Matrix::from_triples(tgt.dim, src.dim, field, &triples));
    }
    let dims = degrees.iter().map(|d| d.dim).collect();
    ChainComplex::new(-1, dims, boundaries).expect("central complex differential broken")
}

/// Reduced central homology dims for i = -1..=n-1, cross-checked at the
/// bottom: H̃₋₁ must equal Tor₀ (both are the cokernel of the induced maps
/// from rank n-1).
pub fn central_homology(a: &FIModule, n: usize) -> Result<Vec<(i64, usize)>, HomalgError> {
    let cx = central_complex(a, n);
    let h = cx.homology_dims();
    let t0 = tor0_dim(a, n);
    if h[0].1 != t0 {
        return Err(HomalgError::CrossCheck(format!(
            "rank {n}: bottom central homology {} != Tor0 {}",
            h[0].1, t0
        )));
    }
    Ok(h)
}
