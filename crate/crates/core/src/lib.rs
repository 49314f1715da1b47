//! Private quantum channels as finite unitary ensembles.
//!
//! A private quantum channel (PQC) scrambles every input state to the
//! maximally mixed state 𝟙/d by averaging over a key set of unitaries:
//!
//! ```text
//! Λ_K(ρ) = (1/|K|) Σ_j U_j ρ U_j†
//! ```
//!
//! This crate builds the classical key sets (Pauli, polyhedral, generalized
//! Gell-Mann, Weyl clock/shift, Haar-random), certifies completeness exactly
//! or up to ε, generates the regular 3- and 4-polytopes whose vertex geometry
//! mirrors those key sets, and reproduces the correspondence table linking
//! qutrit channels to 4-polytopes through an extended quantum Fourier
//! transform.
//!
//! # Quick start
//!
//! ```
//! use pqc_core::channels;
//! use pqc_core::ensembles;
//! use pqc_core::linalg::{random_density, von_neumann_entropy};
//!
//! let pauli = ensembles::pauli_ensemble();
//! assert!(channels::is_complete(&pauli, 1e-12));
//!
//! let rho = random_density(2, 7).unwrap();
//! let out = channels::apply(&pauli, &rho).unwrap();
//! assert!((von_neumann_entropy(&out) - f64::ln(2.0)).abs() < 1e-9);
//! ```
//!
//! The guide under `book/` walks through each module; its code snippets are
//! compiled and run as part of this crate's doctests.

pub mod channels;
pub mod ensembles;
mod error;
pub mod linalg;
pub mod polytopes;
pub mod qft;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, DensityMatrix, PureState, C64};
pub use ensembles::UnitaryEnsemble;
pub use polytopes::{Hypervector, IsotropyReport, Polytope};

// Book chapters double as doctests so the guide can never drift from the API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/states-and-norms.md")]
    mod states_and_norms {}
    #[doc = include_str!("../../../book/src/key-sets.md")]
    mod key_sets {}
    #[doc = include_str!("../../../book/src/channels.md")]
    mod channels {}
    #[doc = include_str!("../../../book/src/polytopes.md")]
    mod polytopes {}
    #[doc = include_str!("../../../book/src/qft-correspondence.md")]
    mod qft_correspondence {}
}
