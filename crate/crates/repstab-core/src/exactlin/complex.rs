//! Chain complexes of exact vector spaces, with homology by rank counting.

use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::ExactError;

/// A bounded chain complex. Degrees run over a contiguous integer range
/// starting at `min_degree` (which may be negative, e.g. -1 for augmented
/// complexes). `boundaries[k]` is the differential from degree
/// `min_degree + k + 1` down to `min_degree + k`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChainComplex {
    pub min_degree: i64,
    pub dims: Vec<usize>,
    pub boundaries: Vec<Matrix>,
}

impl ChainComplex {
    /// Validates shapes and asserts boundary∘boundary = 0; a failure here
    /// always signals a construction bug upstream.
    pub fn new(
        min_degree: i64,
        dims: Vec<usize>,
        boundaries: Vec<Matrix>,
    ) -> Result<ChainComplex, ExactError> {
        if !dims.is_empty() && boundaries.len() + 1 != dims.len() {
            return Err(ExactError::Shape(format!(
                "{} spaces need {} boundary maps, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                boundaries.len()
            )));
        }
        for (k, b) in boundaries.iter().enumerate() {
            if b.rows != dims[k] || b.cols != dims[k + 1] {
                return Err(ExactError::Shape(format!(
                    "boundary into degree {} is {}x{}, expected {}x{}",
                    min_degree + k as i64,
                    b.rows,
                    b.cols,
                    dims[k],
                    dims[k + 1]
                )));
            }
        }
        for k in 0..boundaries.len().saturating_sub(1) {
            let square = boundaries[k].mul(&boundaries[k + 1]);
            if !square.is_zero_matrix() {
                return Err(ExactError::BoundarySquare(min_degree + k as i64));
            }
        }
        Ok(ChainComplex {
            min_degree,
            dims,
            boundaries,
        })
    }

    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.dims.len() as i64 - 1
    }

    pub fn dim_at(&self, degree: i64) -> usize {
        let idx = degree - self.min_degree;
        if idx < 0 || idx as usize >= self.dims.len() {
            0
        } else {
            self.dims[idx as usize]
        }
    }

    /// Homology dimensions per degree: dim ker ∂_out - rank ∂_in.
    pub fn homology_dims(&self) -> Vec<(i64, usize)> {
        let n = self.dims.len();
        let ranks: Vec<usize> = self.boundaries.iter().map(|b| b.rank()).collect();
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            // ∂ out of degree k is boundaries[k-1]; bottom degree has none.
            let rank_out = if k == 0 { 0 } else { ranks[k - 1] };
            let ker = self.dims[k] - rank_out;
            let rank_in = if k < ranks.len() { ranks[k] } else { 0 };
            out.push((self.min_degree + k as i64, ker - rank_in));
        }
        out
    }

    pub fn homology_dim_at(&self, degree: i64) -> usize {
        self.homology_dims()
            .into_iter()
            .find(|(d, _)| *d == degree)
            .map(|(_, h)| h)
            .unwrap_or(0)
    }
}
