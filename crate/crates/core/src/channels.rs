//! Key-set channels Λ_K, completeness certification, and the
//! encrypt/decrypt protocol.
//!
//! A channel is *complete* when it sends every state to 𝟙/d. Rather than
//! sampling states, [`is_complete`] checks the d² matrix units E_jk: by
//! linearity, Λ(E_jk) = δ_jk·𝟙/d for all j, k certifies Λ(ρ) = 𝟙/d for
//! every ρ. The sampled ε of [`epsilon_of`] stays available as an
//! independent cross-check.

use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::ensembles::UnitaryEnsemble;
use crate::error::{Error, Result};
use crate::linalg::density_unchecked;
use crate::linalg::{random_density, random_haar_unitary, von_neumann_entropy, ComplexMatrix, DensityMatrix};

/// Raw ensemble average (1/|K|) Σ U m U† on an arbitrary matrix.
fn conjugation_average(e: &UnitaryEnsemble, m: &ComplexMatrix) -> ComplexMatrix {
    let mut sum = ComplexMatrix::zeros(e.dim(), e.dim());
    for u in e.members() {
        let term = u.matmul(m).expect("dims checked").matmul(&u.adjoint()).expect("dims checked");
        sum = sum.add(&term).expect("same shape");
    }
    sum.scale(C64::new(e.weight(), 0.0))
}

/// Applies the key-set channel: Λ_K(ρ) = (1/|K|) Σ_j U_j ρ U_j†.
pub fn apply(e: &UnitaryEnsemble, rho: &DensityMatrix) -> Result<DensityMatrix> {
    if e.dim() != rho.dim() {
        return Err(Error::shape(
            "channel application",
            format!("ensemble dim {} vs state dim {}", e.dim(), rho.dim()),
        ));
    }
    Ok(density_unchecked(conjugation_average(e, rho.matrix())))
}

/// The ε of the approximate-PQC bound, solved as an equality:
/// `ε = ‖Λ(ρ) − 𝟙/d‖_p · d^{(p−1)/p}` (exponent 1 at p = ∞).
///
/// A channel is an ε₀-PQC at Schatten index p exactly when this value stays
/// ≤ ε₀ over all inputs; a complete PQC reports 0 for every ρ and p.
pub fn epsilon_of(e: &UnitaryEnsemble, rho: &DensityMatrix, p: f64) -> Result<f64> {
    let out = apply(e, rho)?;
    let d = e.dim() as f64;
    let mixed = ComplexMatrix::identity(e.dim()).scale(C64::new(1.0 / d, 0.0));
    let diff = out.matrix().sub(&mixed)?;
    let norm = diff.schatten_norm(p)?;
    let exponent = if p.is_infinite() { 1.0 } else { (p - 1.0) / p };
    Ok(norm * d.powf(exponent))
}

/// Deterministic completeness check over all d² matrix units.
pub fn is_complete(e: &UnitaryEnsemble, tol: f64) -> bool {
    completeness_deviation(e) <= tol
}

/// Worst entrywise deviation `max_jk ‖Λ(E_jk) − δ_jk·𝟙/d‖_∞` over the
/// matrix units; 0 exactly for a complete PQC.
pub fn completeness_deviation(e: &UnitaryEnsemble) -> f64 {
    let d = e.dim();
    let mixed = ComplexMatrix::identity(d).scale(C64::new(1.0 / d as f64, 0.0));
    let zero = ComplexMatrix::zeros(d, d);
    let mut worst = 0.0_f64;
    for j in 0..d {
        for k in 0..d {
            let unit = ComplexMatrix::matrix_unit(d, j, k);
            let out = conjugation_average(e, &unit);
            let target = if j == k { &mixed } else { &zero };
            worst = worst.max(out.sub(target).expect("same shape").max_abs_entry());
        }
    }
    worst
}

/// Alice's side of the protocol: conjugate by the key's unitary.
pub fn encrypt(rho: &DensityMatrix, e: &UnitaryEnsemble, key_index: usize) -> Result<DensityMatrix> {
    if e.dim() != rho.dim() {
        return Err(Error::shape(
            "encrypt",
            format!("ensemble dim {} vs state dim {}", e.dim(), rho.dim()),
        ));
    }
    let u = e.member(key_index)?;
    let out = u.matmul(rho.matrix())?.matmul(&u.adjoint())?;
    Ok(density_unchecked(out))
}

/// Bob's side: undo the key's unitary. With the right key this inverts
/// [`encrypt`] exactly; with a wrong key it still returns a valid state
/// (the eavesdropper's situation), interpretation is the caller's business.
pub fn decrypt(sigma: &DensityMatrix, e: &UnitaryEnsemble, key_index: usize) -> Result<DensityMatrix> {
    if e.dim() != sigma.dim() {
        return Err(Error::shape(
            "decrypt",
            format!("ensemble dim {} vs state dim {}", e.dim(), sigma.dim()),
        ));
    }
    let u = e.member(key_index)?;
    let out = u.adjoint().matmul(sigma.matrix())?.matmul(u)?;
    Ok(density_unchecked(out))
}

/// Empirical mean of n Haar conjugations of ρ, the sampled stand-in for the
/// continuous isotropic average ∫ U ρ U† dμ = 𝟙/d.
///
/// Per-sample seeds derive as `seed + j` and the sum reduces in index
/// order, so the estimate is a pure function of `(ρ, n, seed)`.
pub fn haar_average_estimate(rho: &DensityMatrix, n: usize, seed: u64) -> DensityMatrix {
    assert!(n >= 1, "need at least one sample");
    let d = rho.dim();
    let mut sum = ComplexMatrix::zeros(d, d);
    for j in 0..n {
        let u = random_haar_unitary(d, seed.wrapping_add(j as u64)).expect("d >= 2");
        let term = u.matmul(rho.matrix()).expect("dims match").matmul(&u.adjoint()).expect("dims match");
        sum = sum.add(&term).expect("same shape");
    }
    density_unchecked(sum.scale(C64::new(1.0 / n as f64, 0.0)))
}

/// Per-index ε values of a verification run, keyed by Schatten index.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct EpsilonByP {
    #[serde(rename = "1")]
    pub p1: f64,
    #[serde(rename = "2")]
    pub p2: f64,
    #[serde(rename = "inf")]
    pub p_inf: f64,
}

/// Verification summary for one ensemble.
///
/// `complete` comes from the algebraic matrix-unit check at `tolerance`;
/// the ε values are worst cases over a deterministic set of seeded probe
/// states, and `entropy_nats` is the lowest output entropy seen over the
/// same probes (ln d for a complete channel).
#[derive(Clone, Debug, Serialize)]
pub struct PqcReport {
    pub dim: usize,
    pub cardinality: usize,
    pub epsilon_by_p: EpsilonByP,
    pub entropy_nats: f64,
    pub complete: bool,
    pub tolerance: f64,
}

/// Builds a [`PqcReport`] from `probes` seeded random states
/// (seeds `seed, seed+1, ...`).
pub fn pqc_report(e: &UnitaryEnsemble, tol: f64, seed: u64, probes: usize) -> Result<PqcReport> {
    assert!(probes >= 1, "need at least one probe state");
    let mut eps = EpsilonByP { p1: 0.0, p2: 0.0, p_inf: 0.0 };
    let mut entropy = f64::INFINITY;
    for j in 0..probes {
        let rho = random_density(e.dim(), seed.wrapping_add(j as u64))?;
        eps.p1 = eps.p1.max(epsilon_of(e, &rho, 1.0)?);
        eps.p2 = eps.p2.max(epsilon_of(e, &rho, 2.0)?);
        eps.p_inf = eps.p_inf.max(epsilon_of(e, &rho, f64::INFINITY)?);
        entropy = entropy.min(von_neumann_entropy(&apply(e, &rho)?));
    }
    Ok(PqcReport {
        dim: e.dim(),
        cardinality: e.cardinality(),
        epsilon_by_p: eps,
        entropy_nats: entropy,
        complete: is_complete(e, tol),
        tolerance: tol,
    })
}
