use thiserror::Error;

/// Errors raised by the library.
///
/// Variants split into two families: validation errors (bad input, unusable
/// model, malformed document) and contract violations (a mathematical
/// postcondition that failed to hold). The CLI maps them to exit codes 2 and 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCount { left: usize, right: usize },
    #[error("exponential conventions differ (real vs imaginary)")]
    ConventionMismatch,
    #[error("denominator form is identically zero")]
    ZeroForm,
    #[error("non-expandable pole: {0}")]
    NonExpandablePole(String),
    #[error("expected a rank-one term, got rank {0}")]
    NotRankOne(usize),
    #[error("chamber vector vanishes on denominator form {0}")]
    InvalidChamber(String),
    #[error("invalid perturbation: {0}")]
    InvalidPerturbation(String),
    #[error("perturbation required: exponent lies on a wall of the cone spanned by {0}")]
    PerturbationRequired(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("model validation: {0}")]
    Model(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("component `{0}` is strictly semistable; use the ih or desing pairing")]
    StrictlySemistable(String),
    #[error("shift {0} is a critical value")]
    CriticalShift(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("no component has positive moment; the chamber next to 0 is empty")]
    EmptyChamber,
    #[error("missing blow-up data for strictly semistable component `{0}`")]
    MissingBlowup(String),
    #[error("not weakly balanced")]
    NotWeaklyBalanced,
    #[error("degenerate weights: {0}")]
    DegenerateWeights(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("json: {0}")]
    Json(String),
}

impl Error {
    /// True for failures of a mathematical postcondition rather than bad input.
    pub fn is_contract_violation(&self) -> bool {
        matches!(self, Error::Contract(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
