//! Cyclic Jacobi eigensolver for Hermitian matrices.
//!
//! Each rotation zeroes one off-diagonal pair (p, q): the entry is first
//! rephased onto the real axis, then annihilated with a real plane rotation,
//! which together form a complex Givens rotation. Sweeping all pairs in
//! cyclic order drives the off-diagonal Frobenius mass to zero; convergence
//! is unconditional for Hermitian inputs.

use num_complex::Complex64 as C64;

use super::ComplexMatrix;
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Off-diagonal mass must fall below this multiple of `‖m‖_F`.
const OFF_DIAGONAL_FACTOR: f64 = 1e-14;

pub(crate) fn jacobi_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    debug_assert!(m.is_square());
    let d = m.rows();
    let mut a: Vec<C64> = m.entries().to_vec();
    let threshold = OFF_DIAGONAL_FACTOR * m.frobenius_norm();

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_mass(&a, d) <= threshold {
            return Ok(sorted_diagonal(&a, d));
        }
        for p in 0..d - 1 {
            for q in p + 1..d {
                rotate_pair(&mut a, d, p, q);
            }
        }
    }
    if off_diagonal_mass(&a, d) <= threshold {
        return Ok(sorted_diagonal(&a, d));
    }
    Err(Error::NoConvergence { sweeps: MAX_SWEEPS })
}

fn off_diagonal_mass(a: &[C64], d: usize) -> f64 {
    let mut sum = 0.0;
    for r in 0..d {
        for c in 0..d {
            if r != c {
                sum += a[r * d + c].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

fn sorted_diagonal(a: &[C64], d: usize) -> Vec<f64> {
    let mut eigs: Vec<f64> = (0..d).map(|i| a[i * d + i].re).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    eigs
}

/// Applies the complex Givens rotation annihilating `a[p][q]` (in place,
/// a ← J† a J).
fn rotate_pair(a: &mut [C64], d: usize, p: usize, q: usize) {
    let w = a[p * d + q];
    let r = w.norm();
    if r == 0.0 {
        return;
    }
    let phase = w / r;
    let app = a[p * d + p].re;
    let aqq = a[q * d + q].re;
    let tau = (aqq - app) / (2.0 * r);
    // Smaller-magnitude root of t² - 2τt - 1 = 0; stable for large |τ|.
    let t = -tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // J block on coordinates (p, q): [[c, -s], [s·conj(phase), c·conj(phase)]].
    let jpp = C64::new(c, 0.0);
    let jpq = C64::new(-s, 0.0);
    let jqp = phase.conj() * s;
    let jqq = phase.conj() * c;

    // Columns: b = a · J.
    for row in 0..d {
        let ap = a[row * d + p];
        let aq = a[row * d + q];
        a[row * d + p] = ap * jpp + aq * jqp;
        a[row * d + q] = ap * jpq + aq * jqq;
    }
    // Rows: a = J† · b.
    for col in 0..d {
        let bp = a[p * d + col];
        let bq = a[q * d + col];
        a[p * d + col] = jpp.conj() * bp + jqp.conj() * bq;
        a[q * d + col] = jpq.conj() * bp + jqq.conj() * bq;
    }
    // Exact by construction; pin down rounding residue.
    a[p * d + q] = C64::new(0.0, 0.0);
    a[q * d + p] = C64::new(0.0, 0.0);
    a[p * d + p] = C64::new(a[p * d + p].re, 0.0);
    a[q * d + q] = C64::new(a[q * d + q].re, 0.0);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::random_density;

    #[test]
    fn diagonal_matrix_sorted() {
        let m = ComplexMatrix::diagonal(&[3.0, 1.0, 2.0]);
        assert_eq!(m.hermitian_eigenvalues().unwrap(), vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn pauli_x_spectrum() {
        let x = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let eigs = x.hermitian_eigenvalues().unwrap();
        assert!((eigs[0] + 1.0).abs() < 1e-14);
        assert!((eigs[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn zero_matrix_is_fine() {
        let z = ComplexMatrix::zeros(3, 3);
        assert_eq!(z.hermitian_eigenvalues().unwrap(), vec![0.0, 0.0, 0.0]);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(m.hermitian_eigenvalues(), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn trace_and_frobenius_identities_hold() {
        // Σλ = tr(m) and Σλ² = ‖m‖_F² on random Hermitian inputs.
        for d in [2, 3, 4] {
            for seed in 0..100u64 {
                let rho = random_density(d, seed).unwrap();
                let m = rho.matrix();
                let eigs = m.hermitian_eigenvalues().unwrap();
                let sum: f64 = eigs.iter().sum();
                let sum_sq: f64 = eigs.iter().map(|l| l * l).sum();
                assert!((sum - m.trace().re).abs() < 1e-10);
                assert!((sum_sq - m.frobenius_norm().powi(2)).abs() < 1e-9);
            }
        }
    }
}
