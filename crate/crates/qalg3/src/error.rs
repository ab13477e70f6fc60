//! Error type shared by the whole engine.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("unknown parameter name `{0}`; the parameter set is fixed to a1..c3 and rho")]
    UnknownParameter(String),

    #[error("truncation order mismatch: {lhs} vs {rhs}")]
    TruncationMismatch { lhs: usize, rhs: usize },

    #[error("cannot divide by z: the z^0 coefficient is nonzero")]
    DivByZ,

    #[error("commutator table has a shape the rewriter cannot terminate on: {0}")]
    NonTerminatingTable(String),

    #[error("expression still contains symbolic parameters; bind them to rationals first")]
    SymbolicCoefficient,

    #[error("unknown catalog case `{0}`")]
    UnknownCase(String),

    #[error("parameter outside the case's constraint set: {0}")]
    ParameterConstraint(String),

    #[error("no antipode solution at z-order {order}")]
    AntipodeUnsolvable { order: usize },

    #[error("quantization ansatz inconsistent at z-order {order} (degree bound {bound})")]
    InconsistentSystem { order: usize, bound: usize },

    #[error("first-order constraints violated by the supplied constants: {0} != 0")]
    ConstraintViolation(String),

    #[error("transformation is not invertible: {0}")]
    NonInvertibleTransform(String),

    #[error("transformed coproduct is not formally invariant for generator {0}")]
    CoproductNotInvariant(char),

    #[error("image commutators do not close on the transformed basis")]
    BasisChangeFailure,

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
