//! Sparse exact matrices with deterministic Gaussian elimination.
//!
//! Storage is column-major: each column is a sorted list of (row, value)
//! pairs with no explicit zeros. Elimination processes columns left to
//! right and picks the lowest-index available pivot row, so kernel and
//! image bases are reproducible across runs and platforms.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

use super::scalar::{Field, Scalar};
use super::ExactError;

pub type SparseCol = Vec<(usize, Scalar)>;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub field: Field,
    /// `data[j]` is column j, sorted by row index, zero-free.
    data: Vec<SparseCol>,
}

/// Result of `rank_and_bases`.
pub struct RankData {
    pub rank: usize,
    /// Columns form a basis of the kernel (dimension = cols - rank).
    pub kernel: Matrix,
    /// Columns form a basis of the column space: the pivot columns of the
    /// original matrix, in order.
    pub image: Matrix,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, field: Field) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize, field: Field) -> Matrix {
        let mut m = Matrix::zero(n, n, field);
        for j in 0..n {
            m.data[j].push((j, field.one()));
        }
        m
    }

    pub fn from_cols(rows: usize, field: Field, cols: Vec<SparseCol>) -> Matrix {
        let m = Matrix {
            rows,
            cols: cols.len(),
            field,
            data: cols,
        };
        m.debug_check();
        m
    }

    pub fn from_triples(
        rows: usize,
        cols: usize,
        field: Field,
        triples: &[(usize, usize, Scalar)],
    ) -> Matrix {
        let mut m = Matrix::zero(rows, cols, field);
        for (r, c, v) in triples {
            assert!(*r < rows && *c < cols, "entry out of bounds");
            if !v.is_zero() {
                m.data[*c].push((*r, v.clone()));
            }
        }
        for col in &mut m.data {
            col.sort_by_key(|(r, _)| *r);
            // Merge duplicates.
            let mut merged: SparseCol = Vec::with_capacity(col.len());
            for (r, v) in col.drain(..) {
                match merged.last_mut() {
                    Some((lr, lv)) if *lr == r => *lv += &v,
                    _ => merged.push((r, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            *col = merged;
        }
        m
    }

    pub fn from_dense(rows: &[Vec<Scalar>], field: Field) -> Matrix {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut triples = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged dense matrix");
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    triples.push((i, j, v.clone()));
                }
            }
        }
        Matrix::from_triples(rows.len(), ncols, field, &triples)
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: Field,
        f: impl Fn(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut triples = Vec::new();
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                if !v.is_zero() {
                    triples.push((i, j, v));
                }
            }
        }
        Matrix::from_triples(rows, cols, field, &triples)
    }

    fn debug_check(&self) {
        debug_assert!(self.data.len() == self.cols);
        debug_assert!(self.data.iter().all(|c| {
            c.windows(2).all(|w| w[0].0 < w[1].0)
                && c.iter().all(|(r, v)| *r < self.rows && !v.is_zero())
        }));
    }

    pub fn col(&self, j: usize) -> &SparseCol {
        &self.data[j]
    }

    pub fn set_col(&mut self, j: usize, col: SparseCol) {
        self.data[j] = col;
        self.debug_check();
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.data[c]
            .iter()
            .find(|(i, _)| *i == r)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|c| c.is_empty())
    }

    pub fn transpose(&self) -> Matrix {
        let mut cols: Vec<SparseCol> = vec![Vec::new(); self.rows];
        for (j, col) in self.data.iter().enumerate() {
            for (i, v) in col {
                cols[*i].push((j, v.clone()));
            }
        }
        // Row indices arrive in increasing column order already sorted.
        Matrix {
            rows: self.cols,
            cols: self.rows,
            field: self.field,
            data: cols,
        }
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        assert_eq!(self.field, rhs.field, "matrix product field mismatch");
        let mut data = Vec::with_capacity(rhs.cols);
        for j in 0..rhs.cols {
            data.push(self.apply_sparse(&rhs.data[j]));
        }
        Matrix {
            rows: self.rows,
            cols: rhs.cols,
            field: self.field,
            data,
        }
    }

    /// self * v for a sparse column vector v.
    pub fn apply_sparse(&self, v: &SparseCol) -> SparseCol {
        let mut acc: HashMap<usize, Scalar> = HashMap::new();
        for (k, c) in v {
            for (i, a) in &self.data[*k] {
                let e = acc.entry(*i).or_insert_with(|| self.field.zero());
                *e += &(a * c);
            }
        }
        let mut out: SparseCol = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        out.sort_by_key(|(r, _)| *r);
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut data = Vec::with_capacity(self.cols);
        for j in 0..self.cols {
            data.push(add_cols(&self.data[j], &rhs.data[j], false));
        }
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data,
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut data = Vec::with_capacity(self.cols);
        for j in 0..self.cols {
            data.push(add_cols(&self.data[j], &rhs.data[j], true));
        }
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data,
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        if s.is_zero() {
            return Matrix::zero(self.rows, self.cols, self.field);
        }
        let data = self
            .data
            .iter()
            .map(|c| c.iter().map(|(r, v)| (*r, v * s)).collect())
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data,
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-self.field.one())
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows);
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Matrix {
            rows: self.rows,
            cols: self.cols + rhs.cols,
            field: self.field,
            data,
        }
    }

    /// Keep the listed columns, in order.
    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let data = idx.iter().map(|j| self.data[*j].clone()).collect();
        Matrix {
            rows: self.rows,
            cols: idx.len(),
            field: self.field,
            data,
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<Matrix, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::Shape("inverse of non-square matrix".into()));
        }
        let id = Matrix::identity(self.rows, self.field);
        self.solve(&id)
            .ok_or_else(|| ExactError::Singular)
    }

    /// Deterministic rank: column reduction with leftmost-column order and
    /// lowest-available pivot row.
    pub fn rank(&self) -> usize {
        Eliminator::new(self).run_rank_only()
    }

    /// Deterministic rank plus kernel and image bases.
    pub fn rank_and_bases(&self) -> RankData {
        Eliminator::new(self).run_with_bases()
    }

    pub fn kernel_basis(&self) -> Matrix {
        self.rank_and_bases().kernel
    }

    /// Solve self * X = B columnwise; None if some column of B is outside
    /// the column span.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows, "solve shape mismatch");
        let mut elim = Eliminator::new(self);
        elim.track_coeffs = true;
        elim.eliminate_all();
        let mut sol_cols = Vec::with_capacity(b.cols);
        for j in 0..b.cols {
            let x = elim.express(&b.data[j])?;
            sol_cols.push(x);
        }
        Some(Matrix::from_cols(self.cols, self.field, sol_cols))
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![self.field.zero(); self.cols]; self.rows];
        for (j, col) in self.data.iter().enumerate() {
            for (i, v) in col {
                out[*i][j] = v.clone();
            }
        }
        out
    }
}

fn add_cols(a: &SparseCol, b: &SparseCol, subtract: bool) -> SparseCol {
    let mut out = SparseCol::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some((ra, va)), Some((rb, vb))) => {
                if ra < rb {
                    i += 1;
                    (*ra, va.clone())
                } else if rb < ra {
                    j += 1;
                    let v = if subtract { -vb } else { vb.clone() };
                    (*rb, v)
                } else {
                    i += 1;
                    j += 1;
                    let v = if subtract { va - vb } else { va + vb };
                    (*ra, v)
                }
            }
            (Some((ra, va)), None) => {
                i += 1;
                (*ra, va.clone())
            }
            (None, Some((rb, vb))) => {
                j += 1;
                let v = if subtract { -vb } else { vb.clone() };
                (*rb, v)
            }
            (None, None) => unreachable!(),
        };
        if !next.1.is_zero() {
            out.push(next);
        }
    }
    out
}

/// axpy on sparse columns: a + s*b.
pub fn col_axpy(a: &SparseCol, s: &Scalar, b: &SparseCol) -> SparseCol {
    if s.is_zero() {
        return a.clone();
    }
    let sb: SparseCol = b.iter().map(|(r, v)| (*r, v * s)).collect();
    add_cols(a, &sb, false)
}

fn col_leading(c: &SparseCol) -> Option<usize> {
    c.first().map(|(r, _)| *r)
}

/// Column-based Gaussian elimination with a deterministic pivot rule.
struct Eliminator<'a> {
    m: &'a Matrix,
    field: Field,
    /// Pivots: (pivot_row, column normalized to 1 at pivot_row, expression
    /// of that column as a combination of original columns).
    pivots: Vec<(usize, SparseCol, SparseCol)>,
    /// pivot_row -> index into `pivots`.
    by_row: HashMap<usize, usize>,
    track_coeffs: bool,
    /// For each original column: None if it became a pivot, otherwise the
    /// kernel combination it produced (only when track_coeffs).
    kernel_cols: Vec<SparseCol>,
    pivot_col_indices: Vec<usize>,
    done: bool,
}

impl<'a> Eliminator<'a> {
    fn new(m: &'a Matrix) -> Self {
        Eliminator {
            m,
            field: m.field,
            pivots: Vec::new(),
            by_row: HashMap::new(),
            track_coeffs: false,
            kernel_cols: Vec::new(),
            pivot_col_indices: Vec::new(),
            done: false,
        }
    }

    /// Reduce v against the current pivots. Returns the reduced column and,
    /// when tracking, the expression of the reduction in original columns.
    fn reduce(&self, v: &SparseCol) -> (SparseCol, SparseCol) {
        let mut v = v.clone();
        let mut expr: SparseCol = Vec::new();
        // Invariant: (current v) = (input v) + M * expr, where expr is a
        // combination of original column indices. Each step cancels the
        // leading entry against the pivot normalized to 1 there, so the
        // leading row strictly increases and the loop terminates.
        while let Some(lead) = col_leading(&v) {
            let Some(pi) = self.by_row.get(&lead) else {
                break;
            };
            let (_, pcol, pexpr) = &self.pivots[*pi];
            let negc = -&v[0].1;
            if self.track_coeffs {
                expr = col_axpy(&expr, &negc, pexpr);
            }
            v = col_axpy(&v, &negc, pcol);
        }
        (v, expr)
    }

    fn absorb_column(&mut self, j: usize) {
        let (v, expr) = self.reduce(&self.m.data[j]);
        let one = self.field.one();
        if let Some(lead) = col_leading(&v) {
            let inv = v[0].1.inv();
            let norm: SparseCol = v.iter().map(|(r, x)| (*r, x * &inv)).collect();
            let nexpr = if self.track_coeffs {
                // expression of norm: (e_j + expr) * inv
                let mut e = col_axpy(&expr, &one, &vec![(j, one.clone())]);
                e = e.iter().map(|(r, x)| (*r, x * &inv)).collect();
                e
            } else {
                Vec::new()
            };
            self.by_row.insert(lead, self.pivots.len());
            self.pivots.push((lead, norm, nexpr));
            self.pivot_col_indices.push(j);
        } else if self.track_coeffs {
            // col_j + combination of earlier pivot columns = 0.
            let k = col_axpy(&expr, &one, &vec![(j, one.clone())]);
            self.kernel_cols.push(k);
        }
    }

    fn eliminate_all(&mut self) {
        if self.done {
            return;
        }
        for j in 0..self.m.cols {
            self.absorb_column(j);
        }
        self.done = true;
    }

    fn run_rank_only(mut self) -> usize {
        self.eliminate_all();
        self.pivots.len()
    }

    fn run_with_bases(mut self) -> RankData {
        self.track_coeffs = true;
        self.eliminate_all();
        let rank = self.pivots.len();
        let kernel = Matrix::from_cols(self.m.cols, self.field, self.kernel_cols);
        let image = self.m.select_cols(&self.pivot_col_indices);
        RankData {
            rank,
            kernel,
            image,
        }
    }

    /// Express b in terms of original columns, if in the span.
    fn express(&self, b: &SparseCol) -> Option<SparseCol> {
        let (v, expr) = self.reduce(b);
        if v.is_empty() {
            // b + expr-combination = 0, so b = -expr.
            Some(expr.iter().map(|(r, x)| (*r, -x)).collect())
        } else {
            None
        }
    }
}

/// Independent dense-matrix rank, used as an oracle in tests. Plain
/// row-reduction over a dense grid; shares no code with the sparse path.
pub fn rank_dense(m: &Matrix) -> usize {
    let mut a = m.to_dense();
    let (rows, cols) = (m.rows, m.cols);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][c].inv();
        for x in a[rank].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != rank && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = &a[rank][j] * &f;
                    a[i][j] -= &t;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        if self.rows <= 16 && self.cols <= 16 {
            for row in self.to_dense() {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                writeln!(f, "  [{}]", cells.join(", "))?;
            }
        } else {
            writeln!(f, "  ({} nonzero entries)", self.nnz())?;
        }
        Ok(())
    }
}

/// Serialization: coordinate triples (row, col, scalar string).
#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, String)>,
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut entries = Vec::with_capacity(self.nnz());
        for (j, col) in self.data.iter().enumerate() {
            for (i, v) in col {
                entries.push((*i, j, v.to_string()));
            }
        }
        MatrixRepr {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(d)?;
        let mut triples = Vec::with_capacity(repr.entries.len());
        for (r, c, s) in &repr.entries {
            if *r >= repr.rows || *c >= repr.cols {
                return Err(serde::de::Error::custom("matrix entry out of bounds"));
            }
            let v = Field::Q
                .parse(s)
                .map_err(|e| serde::de::Error::custom(e.to_string()))?;
            triples.push((*r, *c, v));
        }
        Ok(Matrix::from_triples(repr.rows, repr.cols, Field::Q, &triples))
    }
}
