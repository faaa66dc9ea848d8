use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function} has a pole at {at}")]
    Pole { function: &'static str, at: f64 },

    #[error("{function}: argument outside domain ({detail})")]
    Domain {
        function: &'static str,
        detail: String,
    },

    #[error("invalid spacetime: {0}")]
    InvalidSpacetime(String),

    #[error("{theory} is not defined for D = {dim}: {reason}")]
    UnsupportedDimension {
        theory: &'static str,
        dim: u32,
        reason: &'static str,
    },

    /// Densities diverge on the plates; evaluation there is refused.
    #[error("z = {z} lies on a plate (plates at 0 and {gap})")]
    OnPlate { z: f64, gap: f64 },

    #[error("z = {z} lies outside the slab (0, {gap})")]
    OutsideSlab { z: f64, gap: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("insufficient samples: need at least {need}, got {got}")]
    InsufficientSamples { need: usize, got: usize },

    #[error("malformed profile: {0}")]
    MalformedProfile(String),

    #[error("ill-conditioned fit: {0}")]
    IllConditionedFit(String),

    #[error("series budget exhausted: {0}")]
    BudgetExhausted(String),
}

pub(crate) fn domain(function: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        function,
        detail: detail.into(),
    }
}
