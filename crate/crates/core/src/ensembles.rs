//! Unitary key sets: the raw material of private quantum channels.
//!
//! Each constructor returns a [`UnitaryEnsemble`], a uniformly weighted list
//! of d×d unitaries labeled by its key set. The built-in families:
//!
//! * [`pauli_ensemble`] — {𝟙, X, Y, Z} on a qubit, the optimal |K| = 4 set.
//! * [`polyhedral_ensemble`] — one unitary per vertex of a Platonic solid,
//!   realized as 2π/3 rotations about the vertex axes; cardinalities
//!   {4, 6, 8, 12, 20} under the dual pairing K_P..K_I.
//! * [`gell_mann_ensemble`] — the nine unitary, Hermitian 3×3 generalized
//!   Gell-Mann matrices L₁..L₉.
//! * [`weyl_ensemble`] — the d² clock/shift products XᵃZᵇ, the standard
//!   optimal qudit key set.
//! * [`random_subensemble`] — n seeded Haar unitaries, for ε-approximate
//!   channels with |K| ≪ d².

use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{random_haar_unitary, ComplexMatrix};
use crate::polytopes::{platonic, PlatonicSolid};

/// Unitarity tolerance enforced on every member.
pub const UNITARY_TOL: f64 = 1e-12;

/// A labeled key set K: a uniform-weight list of d×d unitaries.
#[derive(Clone, Debug, Serialize)]
pub struct UnitaryEnsemble {
    dim: usize,
    label: String,
    members: Vec<ComplexMatrix>,
}

impl UnitaryEnsemble {
    /// Validates that the list is non-empty and every member is a d×d
    /// unitary within [`UNITARY_TOL`].
    pub fn new(dim: usize, label: impl Into<String>, members: Vec<ComplexMatrix>) -> Result<Self> {
        let label = label.into();
        if members.is_empty() {
            return Err(Error::shape("ensemble construction", "empty member list"));
        }
        for (k, m) in members.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::shape(
                    "ensemble construction",
                    format!("member {k} is {}x{}, expected {dim}x{dim}", m.rows(), m.cols()),
                ));
            }
            let dev = m.unitary_deviation();
            if dev > UNITARY_TOL {
                return Err(Error::invalid(
                    "ensemble member",
                    format!("member {k} of {label:?} deviates from unitarity by {dev:.3e}"),
                ));
            }
        }
        Ok(UnitaryEnsemble { dim, label, members })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Cardinality |K|.
    pub fn cardinality(&self) -> usize {
        self.members.len()
    }

    /// Uniform weight 1/|K|.
    pub fn weight(&self) -> f64 {
        1.0 / self.members.len() as f64
    }

    pub fn members(&self) -> &[ComplexMatrix] {
        &self.members
    }

    pub fn member(&self, key_index: usize) -> Result<&ComplexMatrix> {
        self.members
            .get(key_index)
            .ok_or(Error::KeyOutOfRange { index: key_index, size: self.members.len() })
    }
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).expect("static entries")
}

pub fn pauli_y() -> ComplexMatrix {
    ComplexMatrix::new(2, 2, vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)])
        .expect("static entries")
}

pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, -1.0]).expect("static entries")
}

/// The qubit key set K = {𝟙, X, Y, Z}.
pub fn pauli_ensemble() -> UnitaryEnsemble {
    UnitaryEnsemble::new(2, "pauli", vec![ComplexMatrix::identity(2), pauli_x(), pauli_y(), pauli_z()])
        .expect("Pauli matrices are unitary")
}

/// The complex rotation matrix R_c(θ) = [[cos θ, −i sin θ], [i sin θ, cos θ]].
///
/// Reproduced exactly as defined. The matrix is Hermitian, and
/// `R_c·R_c† = 𝟙 + sin(2θ)·Y`, so it is unitary only where sin 2θ = 0 — at
/// θ = π/2 it degenerates to the Pauli Y. Callers embedding it in an
/// ensemble must pick θ accordingly.
pub fn complex_rotation(theta: f64) -> ComplexMatrix {
    let (s, cos) = theta.sin_cos();
    ComplexMatrix::new(2, 2, vec![c(cos, 0.0), c(0.0, -s), c(0.0, s), c(cos, 0.0)])
        .expect("static shape")
}

/// Key-set name paired with each solid: the dual pairing keeps the
/// cardinalities at the published {4, 6, 8, 12, 20}.
pub fn key_set_name(solid: PlatonicSolid) -> &'static str {
    match solid {
        PlatonicSolid::Tetrahedron => "K_P",
        PlatonicSolid::Octahedron => "K_H",
        PlatonicSolid::Hexahedron => "K_O",
        PlatonicSolid::Icosahedron => "K_D",
        PlatonicSolid::Dodecahedron => "K_I",
    }
}

/// One unitary per vertex of the solid: U_j = exp(−i(π/3)·n_j·σ), a Bloch
/// rotation by 2π/3 about the vertex axis n_j.
///
/// Over any vertex set with vanishing centroid and tight frame operator the
/// induced SO(3) rotations sum to zero, which makes the resulting channel
/// complete; that cancellation is machine-checked rather than assumed.
pub fn polyhedral_ensemble(solid: PlatonicSolid) -> UnitaryEnsemble {
    let polytope = platonic(solid);
    let half_angle = std::f64::consts::FRAC_PI_3;
    let (sin, cos) = half_angle.sin_cos();
    let members: Vec<ComplexMatrix> = polytope
        .vertices()
        .iter()
        .map(|n| {
            // cos(π/3)·𝟙 − i sin(π/3)·(n_x X + n_y Y + n_z Z)
            ComplexMatrix::new(
                2,
                2,
                vec![
                    c(cos, -sin * n[2]),
                    c(sin * n[1], -sin * n[0]),
                    c(-sin * n[1], -sin * n[0]),
                    c(cos, sin * n[2]),
                ],
            )
            .expect("static shape")
        })
        .collect();
    let label = format!("{}({})", key_set_name(solid), solid.name());
    UnitaryEnsemble::new(2, label, members).expect("axis rotations are unitary")
}

/// The nine generalized Gell-Mann matrices L₁..L₉, all unitary and
/// Hermitian.
pub fn gell_mann_ensemble() -> UnitaryEnsemble {
    let rows: [[C64; 9]; 9] = [
        // L1..L3: swaps on the (0,1) block, identity on level 2.
        [c(0., 0.), c(1., 0.), c(0., 0.), c(1., 0.), c(0., 0.), c(0., 0.), c(0., 0.), c(0., 0.), c(1., 0.)],
        [c(0., 0.), c(0., -1.), c(0., 0.), c(0., 1.), c(0., 0.), c(0., 0.), c(0., 0.), c(0., 0.), c(1., 0.)],
        [c(0., 0.), c(0., 1.), c(0., 0.), c(0., -1.), c(0., 0.), c(0., 0.), c(0., 0.), c(0., 0.), c(1., 0.)],
        // L4..L6: swaps on the (1,2) block.
        [c(1., 0.), c(0., 0.), c(0., 0.), c(0., 0.), c(0., 0.), c(1., 0.), c(0., 0.), c(1., 0.), c(0., 0.)],
        [c(1., 0.), c(0., 0.), c(0., 0.), c(0., 0.), c(0., 0.), c(0., 1.), c(0., 0.), c(0., -1.), c(0., 0.)],
        [c(1., 0.), c(0., 0.), c(0., 0.), c(0., 0.), c(0., 0.), c(0., -1.), c(0., 0.), c(0., 1.), c(0., 0.)],
        // L7..L9: swaps on the (0,2) block.
        [c(0., 0.), c(0., 0.), c(1., 0.), c(0., 0.), c(1., 0.), c(0., 0.), c(1., 0.), c(0., 0.), c(0., 0.)],
        [c(0., 0.), c(0., 0.), c(0., 1.), c(0., 0.), c(1., 0.), c(0., 0.), c(0., -1.), c(0., 0.), c(0., 0.)],
        [c(0., 0.), c(0., 0.), c(0., -1.), c(0., 0.), c(1., 0.), c(0., 0.), c(0., 1.), c(0., 0.), c(0., 0.)],
    ];
    let members = rows
        .into_iter()
        .map(|entries| ComplexMatrix::new(3, 3, entries.to_vec()).expect("static shape"))
        .collect();
    UnitaryEnsemble::new(3, "gell-mann", members).expect("Gell-Mann matrices are unitary")
}

/// Generalized Weyl (clock/shift) key set: the d² products XᵃZᵇ with
/// X|k⟩ = |k+1 mod d⟩ and Z|k⟩ = ω^k|k⟩, ω = e^{2πi/d}.
pub fn weyl_ensemble(d: usize) -> Result<UnitaryEnsemble> {
    if d < 2 {
        return Err(Error::invalid("Weyl dimension", format!("d = {d}, need d >= 2")));
    }
    let shift = shift_operator(d);
    let clock = clock_operator(d);
    // Powers in a-major order: (a, b) = (0,0), (0,1), ..., (d-1,d-1).
    let mut members = Vec::with_capacity(d * d);
    let mut x_power = ComplexMatrix::identity(d);
    for _a in 0..d {
        let mut member = x_power.clone();
        for _b in 0..d {
            members.push(member.clone());
            member = member.matmul(&clock).expect("square product");
        }
        x_power = x_power.matmul(&shift).expect("square product");
    }
    UnitaryEnsemble::new(d, format!("weyl(d={d})"), members)
}

/// Shift operator X|k⟩ = |k+1 mod d⟩.
pub fn shift_operator(d: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(d, d, |r, col| {
        if r == (col + 1) % d {
            c(1.0, 0.0)
        } else {
            c(0.0, 0.0)
        }
    })
}

/// Clock operator Z = diag(1, ω, ω², ...), ω = e^{2πi/d}.
pub fn clock_operator(d: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(d, d, |r, col| {
        if r == col {
            C64::from_polar(1.0, 2.0 * std::f64::consts::PI * r as f64 / d as f64)
        } else {
            c(0.0, 0.0)
        }
    })
}

/// n independent Haar unitaries with derived per-member seeds `seed + j`.
pub fn random_subensemble(d: usize, n: usize, seed: u64) -> Result<UnitaryEnsemble> {
    if n == 0 {
        return Err(Error::invalid("subensemble size", "n must be at least 1"));
    }
    let members = (0..n)
        .map(|j| random_haar_unitary(d, seed.wrapping_add(j as u64)))
        .collect::<Result<Vec<_>>>()?;
    UnitaryEnsemble::new(d, format!("random-haar(d={d},n={n},seed={seed})"), members)
}

/// The trivial one-member key set {𝟙_d}; never a PQC, useful as a negative
/// control.
pub fn singleton_identity(d: usize) -> Result<UnitaryEnsemble> {
    if d < 2 {
        return Err(Error::invalid("ensemble dimension", format!("d = {d}, need d >= 2")));
    }
    UnitaryEnsemble::new(d, format!("singleton-identity(d={d})"), vec![ComplexMatrix::identity(d)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::C64;

    #[test]
    fn pauli_members_hermitian_and_unitary() {
        let e = pauli_ensemble();
        assert_eq!(e.cardinality(), 4);
        assert_eq!(e.dim(), 2);
        for m in e.members() {
            assert!(m.hermitian_deviation() <= 1e-15);
            assert!(m.unitary_deviation() <= 1e-15);
        }
    }

    #[test]
    fn complex_rotation_limits() {
        assert!(complex_rotation(0.0).approx_eq(&ComplexMatrix::identity(2), 1e-15));
        // Direct substitution at θ = π/2 gives the Pauli Y.
        assert!(complex_rotation(std::f64::consts::FRAC_PI_2).approx_eq(&pauli_y(), 1e-15));
    }

    #[test]
    fn complex_rotation_unitarity_deviation_is_sin_2theta() {
        for k in 0..100 {
            let theta = k as f64 * 0.077 - 3.0;
            let r = complex_rotation(theta);
            let dev = r.matmul(&r.adjoint()).unwrap().sub(&ComplexMatrix::identity(2)).unwrap();
            assert!(
                (dev.max_abs_entry() - (2.0 * theta).sin().abs()).abs() <= 1e-12,
                "theta = {theta}"
            );
        }
    }

    #[test]
    fn polyhedral_cardinalities_match_key_sets() {
        let expected = [
            (PlatonicSolid::Tetrahedron, "K_P", 4),
            (PlatonicSolid::Octahedron, "K_H", 6),
            (PlatonicSolid::Hexahedron, "K_O", 8),
            (PlatonicSolid::Icosahedron, "K_D", 12),
            (PlatonicSolid::Dodecahedron, "K_I", 20),
        ];
        for (solid, key, size) in expected {
            let e = polyhedral_ensemble(solid);
            assert_eq!(e.cardinality(), size);
            assert!(e.label().starts_with(key), "{}", e.label());
        }
    }

    #[test]
    fn polyhedral_bloch_rotations_sum_to_zero() {
        // Σ_j R_j = 0 over each solid, with R_j the member's induced Bloch
        // rotation (tr(σ_a U σ_b U†)/2).
        let paulis = [pauli_x(), pauli_y(), pauli_z()];
        for solid in PlatonicSolid::ALL {
            let e = polyhedral_ensemble(solid);
            let mut sum = [[0.0_f64; 3]; 3];
            for u in e.members() {
                for (a, sa) in paulis.iter().enumerate() {
                    for (b, sb) in paulis.iter().enumerate() {
                        let m = sa
                            .matmul(&u.matmul(sb).unwrap().matmul(&u.adjoint()).unwrap())
                            .unwrap();
                        sum[a][b] += 0.5 * m.trace().re;
                    }
                }
            }
            let max = sum.iter().flatten().fold(0.0_f64, |m, &x| m.max(x.abs()));
            assert!(max <= 1e-12, "{solid}: residue {max:.3e}");
        }
    }

    #[test]
    fn gell_mann_members_are_hermitian_unitary_involutions() {
        let e = gell_mann_ensemble();
        assert_eq!(e.cardinality(), 9);
        assert_eq!(e.dim(), 3);
        let id = ComplexMatrix::identity(3);
        for m in e.members() {
            assert!(m.hermitian_deviation() <= 1e-15);
            assert!(m.unitary_deviation() <= 1e-15);
            assert!(m.matmul(m).unwrap().approx_eq(&id, 1e-12));
        }
    }

    #[test]
    fn gell_mann_l1_squared_is_identity() {
        // Direct multiplication of the printed entries.
        let l1 = &gell_mann_ensemble().members()[0];
        assert!(l1.matmul(l1).unwrap().approx_eq(&ComplexMatrix::identity(3), 0.0));
    }

    #[test]
    fn weyl_d2_members_match_pauli_products() {
        let e = weyl_ensemble(2).unwrap();
        assert_eq!(e.cardinality(), 4);
        let xz = pauli_x().matmul(&pauli_z()).unwrap();
        let expected = [ComplexMatrix::identity(2), pauli_z(), pauli_x(), xz];
        for (m, want) in e.members().iter().zip(&expected) {
            assert!(m.approx_eq(want, 1e-15));
        }
        // XZ = −iY up to that global phase.
        let minus_i_y = pauli_y().scale(C64::new(0.0, -1.0));
        assert!(e.members()[3].approx_eq(&minus_i_y, 1e-15));
    }

    #[test]
    fn weyl_cardinality_and_commutation() {
        for d in 2..=6 {
            let e = weyl_ensemble(d).unwrap();
            assert_eq!(e.cardinality(), d * d);
            // Z·X = ω·X·Z entrywise.
            let x = shift_operator(d);
            let z = clock_operator(d);
            let omega = C64::from_polar(1.0, 2.0 * std::f64::consts::PI / d as f64);
            let lhs = z.matmul(&x).unwrap();
            let rhs = x.matmul(&z).unwrap().scale(omega);
            assert!(lhs.approx_eq(&rhs, 1e-12), "d = {d}");
        }
    }

    #[test]
    fn random_subensemble_is_seed_deterministic() {
        let a = random_subensemble(3, 4, 11).unwrap();
        let b = random_subensemble(3, 4, 11).unwrap();
        for (x, y) in a.members().iter().zip(b.members()) {
            assert!(x.approx_eq(y, 0.0));
        }
        assert_eq!(a.cardinality(), 4);
    }

    #[test]
    fn ensemble_rejects_non_unitary_member() {
        let bad = ComplexMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, 0.5]).unwrap();
        assert!(UnitaryEnsemble::new(2, "bad", vec![bad]).is_err());
    }

    #[test]
    fn member_lookup_errors_out_of_range() {
        let e = pauli_ensemble();
        assert!(e.member(3).is_ok());
        assert!(matches!(e.member(4), Err(Error::KeyOutOfRange { index: 4, size: 4 })));
    }
}
