//! Seeded random states and Haar-distributed unitaries.
//!
//! Both generators are pure functions of `(dim, seed)`: the stream cipher RNG
//! is re-created per call, so repeated calls and concurrent callers see
//! identical output.

use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::state::density_unchecked;
use super::{ComplexMatrix, DensityMatrix};
use crate::error::{Error, Result};

fn gaussian_matrix(d: usize, seed: u64) -> ComplexMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ComplexMatrix::from_fn(d, d, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        C64::new(re, im)
    })
}

/// Hilbert–Schmidt-style random state: `G·G† / tr(G·G†)` with `G` a d×d
/// matrix of independent standard complex Gaussians.
pub fn random_density(d: usize, seed: u64) -> Result<DensityMatrix> {
    if d < 2 {
        return Err(Error::invalid("random density dimension", format!("d = {d}, need d >= 2")));
    }
    let g = gaussian_matrix(d, seed);
    let gram = g.matmul(&g.adjoint()).expect("square product");
    let trace = gram.trace().re;
    Ok(density_unchecked(gram.scale(C64::new(1.0 / trace, 0.0))))
}

/// Haar-distributed random unitary.
///
/// Orthonormalizes a seeded complex Gaussian matrix column by column
/// (Gram–Schmidt QR), then multiplies each column by the unit-modulus
/// normalization of the corresponding triangular-factor diagonal element,
/// which makes the distribution exactly Haar rather than merely unitary.
pub fn random_haar_unitary(d: usize, seed: u64) -> Result<ComplexMatrix> {
    if d < 2 {
        return Err(Error::invalid("Haar unitary dimension", format!("d = {d}, need d >= 2")));
    }
    let g = gaussian_matrix(d, seed);
    // Column-major scratch for the orthonormalization.
    let mut cols: Vec<Vec<C64>> = (0..d).map(|j| (0..d).map(|i| g.get(i, j)).collect()).collect();
    let mut r_diag = vec![C64::new(0.0, 0.0); d];

    for j in 0..d {
        // Two projection passes keep orthogonality at the 1e-15 level.
        for _ in 0..2 {
            for k in 0..j {
                let proj: C64 = (0..d).map(|i| cols[k][i].conj() * cols[j][i]).sum();
                for i in 0..d {
                    let sub = proj * cols[k][i];
                    cols[j][i] -= sub;
                }
            }
        }
        let norm: f64 = cols[j].iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        r_diag[j] = C64::new(norm, 0.0);
        for entry in cols[j].iter_mut() {
            *entry /= norm;
        }
        // Phase fix from the triangular factor's diagonal (real-positive for
        // Gram-Schmidt, so this is the identity here; kept for the contract).
        let phase = r_diag[j] / r_diag[j].norm();
        for entry in cols[j].iter_mut() {
            *entry *= phase;
        }
    }

    Ok(ComplexMatrix::from_fn(d, d, |i, j| cols[j][i]))
}
