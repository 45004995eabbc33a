use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("band lengths {diag}/{sub}/{sup} do not describe a tridiagonal matrix")]
    BandLength { diag: usize, sub: usize, sup: usize },

    /// `sub[index]·sup[index] ≤ 0`: no positive diagonal similarity makes the
    /// matrix symmetric.
    #[error("off-diagonal product at index {index} is {product}, must be > 0")]
    NonSimilarizable { index: usize, product: f64 },

    #[error("bisection stopped at bracket width {width:e} > tol {tol:e}")]
    ToleranceNotMet { tol: f64, width: f64 },

    #[error("b = {0} must be > 0")]
    NonPositiveB(f64),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// The sine-equation scan did not produce exactly `d` simple interior
    /// roots. Fall back to [`crate::oracle_spectrum`].
    #[error("found {found} interior roots, expected {expected}")]
    RootCountMismatch { found: usize, expected: usize },

    #[error("theta = {theta} is not a root (residual {residual:e})")]
    NotARoot { theta: f64, residual: f64 },

    #[error("column {column} has non-positive norm {denom}")]
    DegenerateColumn { column: usize, denom: f64 },

    #[error("expected {expected} eigenvalues, got {found}")]
    SpectrumLength { expected: usize, found: usize },
}

impl Error {
    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::BandLength { .. } => "BandLength",
            Error::NonSimilarizable { .. } => "NonSimilarizable",
            Error::ToleranceNotMet { .. } => "ToleranceNotMet",
            Error::NonPositiveB(_) => "NonPositiveB",
            Error::InvalidParams(_) => "InvalidParams",
            Error::RootCountMismatch { .. } => "RootCountMismatch",
            Error::NotARoot { .. } => "NotARoot",
            Error::DegenerateColumn { .. } => "DegenerateColumn",
            Error::SpectrumLength { .. } => "SpectrumLength",
        }
    }
}
