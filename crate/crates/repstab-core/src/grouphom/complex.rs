//! The two-step free resolution attached to a presentation, and the twisted
//! homology H₀, H₁ it computes.
//!
//! Conventions (fixed once, used everywhere):
//! - Coefficients form a *right* module via a ◁ w = ρ(w⁻¹) a.
//! - C₂ = A^{|R|} → C₁ = A^{|S|} → C₀ = A with
//!   d₁(e_s ⊗ a) = a ◁ s − a = ρ(s⁻¹)a − a and
//!   d₂(e_r ⊗ a) = Σ_s e_s ⊗ (a ◁ ∂r/∂s), the free differential evaluated
//!   through the same right action.

use crate::exactlin::{Field, Matrix, Scalar};

use super::words::{fox_derivative, invert_word, GroupPresentation, GroupRingElement};
use super::GroupError;

pub struct FoxComplex {
    pub presentation: GroupPresentation,
    /// ρ(g) for each generator, square of size `dim_a`.
    pub rho: Vec<Matrix>,
    pub rho_inv: Vec<Matrix>,
    pub dim_a: usize,
    pub field: Field,
    /// dim_a × (|S|·dim_a)
    pub d1: Matrix,
    /// (|S|·dim_a) × (|R|·dim_a)
    pub d2: Matrix,
}

pub(super) fn block_triples(
    triples: &mut Vec<(usize, usize, Scalar)>,
    block: &Matrix,
    row0: usize,
    col0: usize,
) {
    for r in 0..block.rows {
        for c in 0..block.cols {
            let v = block.get(r, c);
            if !v.is_zero() {
                triples.push((row0 + r, col0 + c, v));
            }
        }
    }
}

impl FoxComplex {
    pub fn new(
        presentation: GroupPresentation,
        rho: Vec<Matrix>,
        dim_a: usize,
        field: Field,
    ) -> Result<FoxComplex, GroupError> {
        presentation.validate();
        assert_eq!(rho.len(), presentation.generators.len());
        for m in &rho {
            assert_eq!((m.rows, m.cols), (dim_a, dim_a), "coefficient matrix shape");
        }
        let rho_inv: Vec<Matrix> = rho
            .iter()
            .map(|m| {
                m.inverse()
                    .map_err(|_| GroupError::Relator("coefficient matrix not invertible".into()))
            })
            .collect::<Result<_, _>>()?;
        let mut fx = FoxComplex {
            presentation,
            rho,
            rho_inv,
            dim_a,
            field,
            d1: Matrix::zero(0, 0, field),
            d2: Matrix::zero(0, 0, field),
        };
        // The coefficient map must kill every relator.
        let id = Matrix::identity(dim_a, field);
        for r in &fx.presentation.relators {
            if fx.eval(r) != id {
                return Err(GroupError::Relator(format!(
                    "relator {r:?} does not act trivially on the coefficients"
                )));
            }
        }
        let s_count = fx.presentation.generators.len();
        let r_count = fx.presentation.relators.len();

        let mut t1 = Vec::new();
        for s in 0..s_count {
            let block = fx.rho_inv[s].sub(&id);
            block_triples(&mut t1, &block, 0, s * dim_a);
        }
        fx.d1 = Matrix::from_triples(dim_a, s_count * dim_a, field, &t1);

        let mut t2 = Vec::new();
        for (ri, rel) in fx.presentation.relators.iter().enumerate() {
            for s in 0..s_count {
                let dv = fox_derivative(rel, s + 1);
                if dv.is_zero() {
                    continue;
                }
                let block = fx.ring_eval_inv(&dv);
                block_triples(&mut t2, &block, s * dim_a, ri * dim_a);
            }
        }
        fx.d2 = Matrix::from_triples(s_count * dim_a, r_count * dim_a, field, &t2);

        if !fx.d1.mul(&fx.d2).is_zero_matrix() {
            return Err(GroupError::ChainMap(
                "composite of the two differentials is nonzero".into(),
            ));
        }
        Ok(fx)
    }

    /// ρ(w) for a word over the presentation's generators.
    pub fn eval(&self, w: &[i64]) -> Matrix {
        let mut m = Matrix::identity(self.dim_a, self.field);
        for &l in w {
            let g = l.unsigned_abs() as usize - 1;
            m = m.mul(if l > 0 { &self.rho[g] } else { &self.rho_inv[g] });
        }
        m
    }

    /// ρ(w⁻¹), the matrix of a ↦ a ◁ w.
    pub fn eval_inv(&self, w: &[i64]) -> Matrix {
        self.eval(&invert_word(w))
    }

    /// Σ c_w ρ(w⁻¹) over the terms of a group-ring element.
    pub fn ring_eval_inv(&self, e: &GroupRingElement) -> Matrix {
        let mut out = Matrix::zero(self.dim_a, self.dim_a, self.field);
        for (w, &c) in &e.terms {
            let m = self.eval_inv(w);
            let factor = self.field.from_i64(c);
            let scaled = Matrix::from_fn(self.dim_a, self.dim_a, self.field, |r, col| {
                let mut v = m.get(r, col);
                v *= &factor;
                v
            });
            out = out.add(&scaled);
        }
        out
    }

    /// Homology in degrees 0 and 1, with deterministic bases.
    pub fn twisted_h0_h1(&self) -> Result<TwistedHomology, GroupError> {
        let (h0_section, h0_proj) = crate::figmod::quotient_basis(&self.d1);

        // Cross-check H₀ against the coinvariants A / Σ (ρ(g) − 1)A computed
        // from the forward action rather than the inverse one.
        let id = Matrix::identity(self.dim_a, self.field);
        let mut span = Matrix::zero(self.dim_a, 0, self.field);
        for m in &self.rho {
            span = span.hstack(&m.sub(&id));
        }
        if self.dim_a - span.rank() != h0_section.cols {
            return Err(GroupError::CrossCheck(format!(
                "coinvariants dimension {} disagrees with H0 dimension {}",
                self.dim_a - span.rank(),
                h0_section.cols
            )));
        }

        let cycles = self.d1.kernel_basis();
        let boundaries_in_cycles = cycles
            .solve(&self.d2)
            .ok_or_else(|| GroupError::ChainMap("boundaries are not cycles".into()))?;
        let (h1_section, h1_proj) = crate::figmod::quotient_basis(&boundaries_in_cycles);
        Ok(TwistedHomology {
            h0: h0_section.cols,
            h1: h1_section.cols,
            h0_section,
            h0_proj,
            cycles,
            h1_section,
            h1_proj,
        })
    }
}

/// Bases for H₀ and H₁ of a Fox complex.
///
/// H₀ lives in A: `h0_section` embeds chosen coordinates, `h0_proj` is the
/// projection with h0_proj ∘ h0_section = id and h0_proj ∘ d1 = 0.
/// H₁ lives in kernel coordinates: `cycles` is a basis K of ker d₁ in chain
/// coordinates, and `h1_section`/`h1_proj` split the quotient of the kernel by
/// the image of d₂ expressed in K-coordinates. Chain-level representatives of
/// the homology basis are K · h1_section.
pub struct TwistedHomology {
    pub h0: usize,
    pub h1: usize,
    pub h0_section: Matrix,
    pub h0_proj: Matrix,
    pub cycles: Matrix,
    pub h1_section: Matrix,
    pub h1_proj: Matrix,
}

impl TwistedHomology {
    /// Chain-coordinate representatives of the H₁ basis (columns).
    pub fn h1_chain_reps(&self) -> Matrix {
        self.cycles.mul(&self.h1_section)
    }

    /// Homology coordinates of cycle columns; None if a column is not a cycle.
    pub fn h1_coords(&self, chains: &Matrix) -> Option<Matrix> {
        let y = self.cycles.solve(chains)?;
        Some(self.h1_proj.mul(&y))
    }
}
