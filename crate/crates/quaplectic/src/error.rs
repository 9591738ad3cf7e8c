use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Parameters on or beyond the null surface of the γ chart.
    #[error("domain error: {what} (radicand {radicand:.6e})")]
    Domain { what: String, radicand: f64 },

    #[error("singular composition: denominator {denominator:.6e}")]
    SingularComposition { denominator: f64 },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("contraction diverges: {}", .0.join("; "))]
    Divergence(Vec<String>),

    #[error("basis dimension {dim} exceeds element budget {budget}")]
    Size { dim: usize, budget: usize },

    #[error("grid resolution too coarse: level {level} deviates by {deviation:.3e}")]
    Resolution { level: usize, deviation: f64 },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
