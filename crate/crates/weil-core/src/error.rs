//! Error types shared by the algebra kernel and the engines above it.

use thiserror::Error;

/// Why a presentation fails to define a Weil algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotWeilReason {
    #[error("the ideal contains 1; the quotient is the zero algebra")]
    ZeroAlgebra,
    #[error(
        "the quotient is infinite-dimensional: no pure power of every variable leads the ideal"
    )]
    InfiniteDimensional,
    #[error("variable {0} is not nilpotent in the quotient")]
    NonNilpotentVariable(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("Buchberger exceeded the degree cap {degree_cap} without stabilizing; the ideal is likely not zero-dimensional")]
    NonTerminating { degree_cap: u32 },
    #[error("not a Weil algebra: {reason}")]
    NotWeil { reason: NotWeilReason },
    #[error("relation {relation} maps to nonzero residual {residual}")]
    RelationViolated { relation: String, residual: String },
    #[error("morphism endpoints do not match: {0}")]
    SourceTargetMismatch(String),
    #[error("element belongs to {found}, expected {expected}")]
    AlgebraMismatch { expected: String, found: String },
    #[error("generator {0} has no image")]
    MissingImage(String),
    #[error("{0} images provided for {1} generators")]
    ImageCountMismatch(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("more than {limit} parallel paths between {from} and {to}")]
    PathExplosion {
        from: String,
        to: String,
        limit: usize,
    },
    #[error("diagram is disconnected; limits of disconnected Weil diagrams are not Weil algebras")]
    DisconnectedDiagram,
    #[error("node {0} is not a Weil algebra (it has free polynomial variables)")]
    NonWeilNode(String),
    #[error("cone does not match the diagram: {0}")]
    ConeMismatch(String),
    #[error("arrow {arrow}: {source}")]
    InvalidArrow { arrow: String, source: KernelError },
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum JetError {
    #[error("{primitive} is undefined at scalar part {at}")]
    DomainError { primitive: String, at: f64 },
    #[error("division by a non-unit: the divisor's scalar part is zero")]
    NonInvertible,
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error(
        "monomial {0} is not a basis monomial of the algebra; it cannot represent that derivative"
    )]
    NotABasisMonomial(String),
    #[error("jet values belong to different algebras")]
    MixedAlgebras,
    #[error("{0} is not available in exact mode")]
    UnsupportedInExactMode(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangentError {
    #[error("tangent vectors sit over different base points")]
    BaseMismatch,
    #[error("expected dimension {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
}
