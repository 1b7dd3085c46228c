use thiserror::Error;

/// Errors surfaced by the library operations.
///
/// The CLI maps these onto its exit-code contract: `Unsupported` is a usage
/// error (exit 2), `MinusOneNotInWeylGroup` an unsupported mathematical
/// precondition (exit 3) and the remaining variants evaluation precondition
/// failures (exit 4).
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("the chamber sum vanishes identically unless -1 lies in the Weyl group; {0}")]
    MinusOneNotInWeylGroup(String),

    #[error("input not regular enough: {0}")]
    NotRegular(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
