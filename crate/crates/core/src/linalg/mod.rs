//! Dense complex linear algebra for small matrices.
//!
//! Everything here is sized for key-set simulation: matrices up to d = 16,
//! state vectors up to a few thousand amplitudes. Values are immutable after
//! construction, all randomness flows through explicit seeds, and every
//! operation is a pure function of its arguments, so the whole module is
//! safely shareable across threads.
//!
//! Hermitian spectra come from a cyclic Jacobi iteration ([`ComplexMatrix::
//! hermitian_eigenvalues`]), which converges unconditionally at these sizes;
//! Schatten norms and the von Neumann entropy are derived from it.

mod eigen;
mod random;
mod state;

pub use random::{random_density, random_haar_unitary};
pub use state::{DensityMatrix, PureState};

pub(crate) use state::density_unchecked;

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Complex scalar used throughout: a pair of `f64` real components.
pub type C64 = Complex64;

/// Hermiticity tolerance baked into [`DensityMatrix`] and the eigensolver
/// precondition (`1e-10` for the solver, `1e-12` for state validation).
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Dense row-major complex matrix.
///
/// Equality between matrices is tolerance-based: use [`ComplexMatrix::approx_eq`]
/// with an explicit tolerance rather than `==` (which is deliberately not
/// implemented).
#[derive(Clone, Debug)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<C64>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<C64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::shape("matrix construction", "rows and cols must be positive"));
        }
        if entries.len() != rows * cols {
            return Err(Error::shape(
                "matrix construction",
                format!("{rows}x{cols} matrix needs {} entries, got {}", rows * cols, entries.len()),
            ));
        }
        Ok(ComplexMatrix { rows, cols, entries })
    }

    /// Builds a matrix by evaluating `f(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        ComplexMatrix { rows, cols, entries }
    }

    /// Builds a square matrix from real row-major entries.
    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Result<Self> {
        Self::new(rows, cols, entries.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix { rows, cols, entries: vec![C64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, dim, |r, c| {
            if r == c { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) }
        })
    }

    /// Diagonal matrix from real diagonal entries.
    pub fn diagonal(diag: &[f64]) -> Self {
        let d = diag.len();
        Self::from_fn(d, d, |r, c| {
            if r == c { C64::new(diag[r], 0.0) } else { C64::new(0.0, 0.0) }
        })
    }

    /// Matrix unit E_jk: 1 at (j, k), 0 elsewhere.
    pub fn matrix_unit(dim: usize, j: usize, k: usize) -> Self {
        Self::from_fn(dim, dim, |r, c| {
            if (r, c) == (j, k) { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.entries[row * self.cols + col]
    }

    /// Row-major entry slice.
    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    /// Standard matrix product.
    pub fn matmul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != other.rows {
            return Err(Error::shape(
                "matmul",
                format!("{}x{} · {}x{}", self.rows, self.cols, other.rows, other.cols),
            ));
        }
        let mut out = ComplexMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entries[r * self.cols + k];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..other.cols {
                    out.entries[r * other.cols + c] += a * other.entries[k * other.cols + c];
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> ComplexMatrix {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    pub fn add(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.zip_with(other, "add", |a, b| a + b)
    }

    pub fn sub(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.zip_with(other, "sub", |a, b| a - b)
    }

    pub fn scale(&self, factor: C64) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&e| e * factor).collect(),
        }
    }

    fn zip_with(
        &self,
        other: &ComplexMatrix,
        op: &'static str,
        f: impl Fn(C64, C64) -> C64,
    ) -> Result<ComplexMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::shape(
                op,
                format!("{}x{} vs {}x{}", self.rows, self.cols, other.rows, other.cols),
            ));
        }
        Ok(ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn trace(&self) -> C64 {
        debug_assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|e| e.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise modulus, `max_ij |m_ij|`.
    pub fn max_abs_entry(&self) -> f64 {
        self.entries.iter().map(|e| e.norm()).fold(0.0, f64::max)
    }

    /// Entrywise comparison within `tol` (largest modulus of the difference).
    pub fn approx_eq(&self, other: &ComplexMatrix, tol: f64) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(&a, &b)| (a - b).norm() <= tol)
    }

    /// Max entrywise deviation from the own adjoint, `max |m - m†|`.
    pub fn hermitian_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut worst = 0.0_f64;
        for r in 0..self.rows {
            for c in r..self.cols {
                worst = worst.max((self.get(r, c) - self.get(c, r).conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol
    }

    /// Max entrywise deviation from unitarity, `max |m·m† - I|`.
    pub fn unitary_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let gram = self.matmul(&self.adjoint()).expect("square product");
        gram.sub(&ComplexMatrix::identity(self.rows))
            .expect("same shape")
            .max_abs_entry()
    }

    /// Full real spectrum of a Hermitian matrix, ascending.
    ///
    /// Runs cyclic Jacobi sweeps until the off-diagonal Frobenius mass drops
    /// below `1e-14 · ‖m‖_F`, erroring out after 100 sweeps. The input must be
    /// Hermitian within `1e-10`.
    pub fn hermitian_eigenvalues(&self) -> Result<Vec<f64>> {
        let dev = self.hermitian_deviation();
        if dev > 1e-10 {
            return Err(Error::NotHermitian { deviation: dev, tolerance: 1e-10 });
        }
        eigen::jacobi_eigenvalues(self)
    }

    /// Schatten p-norm of a Hermitian matrix: `(Σ_j |λ_j|^p)^{1/p}`.
    ///
    /// `p` must be ≥ 1; `f64::INFINITY` selects the operator norm `max |λ_j|`.
    /// Restricted to Hermitian arguments, where the singular values are the
    /// eigenvalue moduli.
    pub fn schatten_norm(&self, p: f64) -> Result<f64> {
        if !(p >= 1.0) {
            return Err(Error::invalid("Schatten exponent", format!("p = {p}, need p >= 1")));
        }
        let eigs = self.hermitian_eigenvalues()?;
        if p.is_infinite() {
            return Ok(eigs.iter().fold(0.0, |m, &l| m.max(l.abs())));
        }
        Ok(eigs.iter().map(|&l| l.abs().powf(p)).sum::<f64>().powf(1.0 / p))
    }
}

/// Serializes as an array of rows, each entry a two-element `[re, im]` array.
impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<[f64; 2]>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| [self.get(r, c).re, self.get(r, c).im]).collect())
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<[f64; 2]>>::deserialize(deserializer)?;
        if rows.is_empty() {
            return Err(D::Error::custom("matrix needs at least one row"));
        }
        let cols = rows[0].len();
        if cols == 0 || rows.iter().any(|r| r.len() != cols) {
            return Err(D::Error::custom("matrix rows must be non-empty and rectangular"));
        }
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|&[re, im]| C64::new(re, im)))
            .collect();
        ComplexMatrix::new(rows.len(), cols, entries).map_err(D::Error::custom)
    }
}

/// Von Neumann entropy in natural-log units: `-Σ λ ln λ`, with `0·ln 0 = 0`.
///
/// Eigenvalues below the positivity slack of [`DensityMatrix`] contribute
/// nothing.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    let eigs = rho
        .matrix()
        .hermitian_eigenvalues()
        .expect("density matrices are Hermitian by construction");
    eigs.iter().filter(|&&l| l > 0.0).map(|&l| -l * l.ln()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn pauli_x() -> ComplexMatrix {
        ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap()
    }

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn matmul_identity_and_involution() {
        let x = pauli_x();
        let i2 = ComplexMatrix::identity(2);
        assert!(i2.matmul(&x).unwrap().approx_eq(&x, 0.0));
        assert!(x.matmul(&x).unwrap().approx_eq(&i2, 0.0));
    }

    #[test]
    fn matmul_shape_mismatch() {
        let a = ComplexMatrix::zeros(2, 3);
        let b = ComplexMatrix::zeros(2, 2);
        assert!(matches!(a.matmul(&b), Err(Error::Shape { .. })));
    }

    #[test]
    fn adjoint_conjugates_diagonal() {
        let m = ComplexMatrix::new(2, 2, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 1.0)])
            .unwrap();
        let expect =
            ComplexMatrix::new(2, 2, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, -1.0)])
                .unwrap();
        assert!(m.adjoint().approx_eq(&expect, 0.0));
        assert!(pauli_x().adjoint().approx_eq(&pauli_x(), 0.0));
    }

    #[test]
    fn schatten_norms_on_diagonals() {
        let m = ComplexMatrix::diagonal(&[1.0, -1.0]);
        assert!((m.schatten_norm(1.0).unwrap() - 2.0).abs() < 1e-12);
        assert!((m.schatten_norm(f64::INFINITY).unwrap() - 1.0).abs() < 1e-12);

        // diag(1/2, 1/2, 0) - I/3 has spectrum {1/6, 1/6, -1/3}.
        let diff = ComplexMatrix::diagonal(&[0.5, 0.5, 0.0])
            .sub(&ComplexMatrix::identity(3).scale(c(1.0 / 3.0, 0.0)))
            .unwrap();
        assert!((diff.schatten_norm(1.0).unwrap() - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn schatten_rejects_bad_exponent_and_non_hermitian() {
        let m = ComplexMatrix::diagonal(&[1.0, 2.0]);
        assert!(matches!(m.schatten_norm(0.5), Err(Error::Invalid { .. })));
        let nh = ComplexMatrix::new(2, 2, vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)])
            .unwrap();
        assert!(matches!(nh.schatten_norm(2.0), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn entropy_of_reference_states() {
        let mm2 = DensityMatrix::maximally_mixed(2);
        assert!((von_neumann_entropy(&mm2) - f64::ln(2.0)).abs() < 1e-12);
        let mm3 = DensityMatrix::maximally_mixed(3);
        assert!((von_neumann_entropy(&mm3) - f64::ln(3.0)).abs() < 1e-12);
        let pure = DensityMatrix::basis_state(3, 1).unwrap();
        assert!(von_neumann_entropy(&pure).abs() < 1e-12);
    }

    #[test]
    fn json_round_trip_preserves_entries() {
        let m = ComplexMatrix::new(
            2,
            3,
            vec![c(1.0, -2.0), c(0.25, 0.0), c(0.0, 1e-7), c(-3.5, 4.5), c(1e100, 0.0), c(0.0, 0.0)],
        )
        .unwrap();
        let json = serde_json::to_string(&m).unwrap();
        let back: ComplexMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back.rows(), 2);
        assert_eq!(back.cols(), 3);
        for (a, b) in m.entries().iter().zip(back.entries()) {
            let rel = (a - b).norm() / a.norm().max(1.0);
            assert!(rel <= 1e-15, "relative fidelity violated: {a} vs {b}");
        }
    }

    #[test]
    fn json_rejects_ragged_rows() {
        let err = serde_json::from_str::<ComplexMatrix>("[[[1,0],[0,0]],[[0,0]]]");
        assert!(err.is_err());
    }
}
