use thiserror::Error;

/// Errors produced by matrix, state, ensemble, and channel constructors.
#[derive(Debug, Error)]
pub enum Error {
    /// Operand shapes are incompatible (matrix product, mixed vector
    /// dimensions, empty input where at least one element is required).
    #[error("shape error in {op}: {detail}")]
    Shape { op: &'static str, detail: String },

    /// An operation that requires a Hermitian argument received one that
    /// deviates from its own adjoint by more than the stated tolerance.
    #[error("matrix is not Hermitian: max |m - m†| = {deviation:.3e} (tolerance {tolerance:.1e})")]
    NotHermitian { deviation: f64, tolerance: f64 },

    /// The cyclic Jacobi eigensolver failed to reduce the off-diagonal
    /// mass below its threshold within the sweep budget.
    #[error("eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    /// A value failed a domain check (trace, positivity, normalization,
    /// norm order, ...).
    #[error("invalid {what}: {detail}")]
    Invalid { what: &'static str, detail: String },

    /// A name did not match any known polytope, solid, or ensemble.
    #[error("unknown {kind} name: {name:?}")]
    UnknownName { kind: &'static str, name: String },

    /// A key index addressed a member outside the ensemble.
    #[error("key index {index} out of range for ensemble of {size} members")]
    KeyOutOfRange { index: usize, size: usize },
}

impl Error {
    pub(crate) fn shape(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Shape { op, detail: detail.into() }
    }

    pub(crate) fn invalid(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Invalid { what, detail: detail.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
