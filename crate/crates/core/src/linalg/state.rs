//! Quantum state types: density matrices and pure-state vectors.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use super::ComplexMatrix;
use crate::error::{Error, Result};

/// Validation slack for the trace-one and Hermiticity checks.
const STATE_TOL: f64 = 1e-12;
/// Eigenvalues may dip this far below zero before a state is rejected.
const POSITIVITY_SLACK: f64 = 1e-10;

/// Positive semidefinite, trace-one matrix ρ.
///
/// Construction validates Hermiticity (within `1e-12`), unit trace (within
/// `1e-12`), and positivity (eigenvalues ≥ `-1e-10`); the wrapped matrix is
/// immutable afterwards.
#[derive(Clone, Debug, Serialize)]
#[serde(transparent)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::shape(
                "density matrix",
                format!("{}x{} is not square", matrix.rows(), matrix.cols()),
            ));
        }
        let dev = matrix.hermitian_deviation();
        if dev > STATE_TOL {
            return Err(Error::NotHermitian { deviation: dev, tolerance: STATE_TOL });
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > STATE_TOL || trace.im.abs() > STATE_TOL {
            return Err(Error::invalid("density matrix", format!("trace = {trace}, expected 1")));
        }
        let eigs = matrix.hermitian_eigenvalues()?;
        if let Some(l) = eigs.iter().find(|&&l| l < -POSITIVITY_SLACK) {
            return Err(Error::invalid("density matrix", format!("negative eigenvalue {l:.3e}")));
        }
        Ok(DensityMatrix { matrix })
    }

    /// The maximally mixed state 𝟙/d.
    pub fn maximally_mixed(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be positive");
        DensityMatrix { matrix: ComplexMatrix::identity(dim).scale(C64::new(1.0 / dim as f64, 0.0)) }
    }

    /// Projector onto the computational basis state |k⟩.
    pub fn basis_state(dim: usize, k: usize) -> Result<Self> {
        if k >= dim {
            return Err(Error::invalid("basis state", format!("index {k} out of range for d = {dim}")));
        }
        let mut diag = vec![0.0; dim];
        diag[k] = 1.0;
        Ok(DensityMatrix { matrix: ComplexMatrix::diagonal(&diag) })
    }

    /// Diagonal state from a probability vector.
    pub fn from_probabilities(probs: &[f64]) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::shape("diagonal state", "empty probability vector"));
        }
        if probs.iter().any(|&p| p < 0.0) {
            return Err(Error::invalid("diagonal state", "negative probability"));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > STATE_TOL {
            return Err(Error::invalid("diagonal state", format!("probabilities sum to {sum}")));
        }
        Ok(DensityMatrix { matrix: ComplexMatrix::diagonal(probs) })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Trace distance `½‖ρ - σ‖₁`.
    pub fn trace_distance(&self, other: &DensityMatrix) -> Result<f64> {
        let diff = self.matrix.sub(&other.matrix)?;
        Ok(0.5 * diff.schatten_norm(1.0)?)
    }
}

/// Normalized complex amplitude vector.
#[derive(Clone, Debug, Serialize)]
pub struct PureState {
    amplitudes: Vec<C64>,
}

impl PureState {
    /// Validates `Σ |a_j|² = 1` within `1e-12`.
    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::shape("pure state", "empty amplitude vector"));
        }
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > STATE_TOL {
            return Err(Error::invalid("pure state", format!("squared norm = {norm_sq}")));
        }
        Ok(PureState { amplitudes })
    }

    /// Computational basis state |k⟩.
    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        if k >= dim {
            return Err(Error::invalid("basis state", format!("index {k} out of range for d = {dim}")));
        }
        let mut amplitudes = vec![C64::new(0.0, 0.0); dim];
        amplitudes[k] = C64::new(1.0, 0.0);
        Ok(PureState { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    /// Rank-one projector |ψ⟩⟨ψ|.
    pub fn projector(&self) -> DensityMatrix {
        let d = self.dim();
        let matrix =
            ComplexMatrix::from_fn(d, d, |r, c| self.amplitudes[r] * self.amplitudes[c].conj());
        DensityMatrix { matrix }
    }
}

// Internal constructor for channel outputs whose invariants hold by
// construction; still debug-checked.
pub(crate) fn density_unchecked(matrix: ComplexMatrix) -> DensityMatrix {
    debug_assert!(matrix.hermitian_deviation() <= 1e-9, "output lost Hermiticity");
    debug_assert!((matrix.trace().re - 1.0).abs() <= 1e-9, "output lost unit trace");
    DensityMatrix { matrix }
}
