use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("basis mismatch: {left:?} vs {right:?}")]
    BasisMismatch {
        left: crate::poly::Basis,
        right: crate::poly::Basis,
    },
    #[error("operation `{op}` is not supported in the {basis:?} basis")]
    UnsupportedBasis {
        op: &'static str,
        basis: crate::poly::Basis,
    },
    #[error("extended Euclid needs at least one nonzero operand")]
    BothZero,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("singular denominator: {0}")]
    SingularDenominator(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error(
        "quadrature did not converge after {intervals} subintervals (error estimate {estimate:e})"
    )]
    NonConvergence { intervals: usize, estimate: f64 },
    #[error("cannot parse `{0}` as a rational number")]
    ParseRational(String),
}
