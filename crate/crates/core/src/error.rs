//! Error type shared by the whole crate.

use crate::algebra::AlgebraDescriptor;
use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, ConeError>;

/// Everything that can go wrong while building or computing with cone data.
#[derive(Debug, Clone, Error)]
pub enum ConeError {
    /// Two operands live in different algebras.
    #[error("algebra mismatch: expected {expected}, found {found}")]
    AlgebraMismatch {
        expected: AlgebraDescriptor,
        found: AlgebraDescriptor,
    },

    /// Malformed element data (wrong coordinate count, bad descriptor, …).
    #[error("invalid element: {0}")]
    InvalidElement(String),

    /// A point required to be in the open cone is not.
    #[error("element is not in the interior of the cone (min eigenvalue {min_eigenvalue:.3e})")]
    NotInterior { min_eigenvalue: f64 },

    /// A point required to lie in the closed cone is outside it.
    #[error("element is outside the closed cone (min eigenvalue {min_eigenvalue:.3e})")]
    NotInCone { min_eigenvalue: f64 },

    /// Functional calculus applied outside its domain.
    #[error("domain violation: {op} applied to eigenvalue {eigenvalue:.3e}")]
    DomainViolation { op: &'static str, eigenvalue: f64 },

    /// The iterative eigensolver failed to converge.
    #[error("eigensolver failed to converge ({context})")]
    EigenFailure { context: String },

    /// An element claimed to be idempotent is not.
    #[error("not an idempotent: residual {residual:.3e}")]
    NotIdempotent { residual: f64 },

    /// The zero idempotent determines an empty Peirce space.
    #[error("the zero idempotent has no Peirce eigenvalue data")]
    ZeroIdempotent,

    /// An element expected inside a Peirce subalgebra A(p) sticks out of it.
    #[error("element is not in the Peirce space of the idempotent (residual {residual:.3e})")]
    OutsidePeirceSpace { residual: f64 },

    /// A tangent vector must be traceless.
    #[error("vector is not traceless (trace {trace:.3e})")]
    NotTraceless { trace: f64 },

    /// A projective representative must have determinant one.
    #[error("element does not have unit determinant (det {det:.6e})")]
    NotUnitDeterminant { det: f64 },

    /// Invalid boundary parametrisation (frame, index sets, or weights).
    #[error("invalid boundary parameters: {0}")]
    InvalidParams(String),

    /// Invalid horofunction pair.
    #[error("invalid horofunction pair: {0}")]
    InvalidPair(String),

    /// A limit evaluation was asked to follow an inadmissible path.
    #[error("inadmissible path for the limit evaluator: {0}")]
    InvalidPath(String),
}
