use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("polynomial is not monic: {0}")]
    NotMonic(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("missing value for variable {0}")]
    MissingVariable(String),
    #[error("result is rational, not polynomial: {0}")]
    NotPolynomial(String),
    #[error("expression is not symmetric in {0}")]
    NotSymmetric(String),
    #[error("singular system: {0}")]
    Singular(String),
    #[error("{what} needs {size} steps, budget is {budget}")]
    BudgetExceeded { what: String, size: u128, budget: u128 },
    #[error("certificate condition {condition} failed: {detail}")]
    CertificateFailure { condition: String, detail: String },
    #[error("malformed input: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn inexact(msg: impl Into<String>) -> Self {
        Error::InexactDivision(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn budget(what: impl Into<String>, size: u128, budget: u128) -> Self {
        Error::BudgetExceeded { what: what.into(), size, budget }
    }

    pub(crate) fn certificate(condition: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::CertificateFailure { condition: condition.into(), detail: detail.into() }
    }
}
