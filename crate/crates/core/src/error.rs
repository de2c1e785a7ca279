use thiserror::Error;

/// Everything that can go wrong while building families, operators or checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dilation factor must be nonzero")]
    ZeroDilation,
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("exact division left a nonzero remainder")]
    NonzeroRemainder,
    #[error("Laurent polynomial is not symmetric under z -> 1/z")]
    NotSymmetric,
    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),
    #[error("degree {n} exceeds the degree cap {cap}")]
    DegreeCap { n: usize, cap: usize },
    #[error("no q-difference operator of the requested shape: {0}")]
    NoSolution(String),
    #[error("derived relation failed verification: {0}")]
    VerificationFailure(String),
    #[error("elimination impossible: {0}")]
    EliminationImpossible(String),
    #[error("expansion residual is nonzero (corrupt family data)")]
    ExpansionResidual,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
