use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or a physically meaningless request.
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] casimir_core::Error),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),

    #[error("cannot write CSV: {0}")]
    Csv(#[from] csv::Error),

    #[error("cannot write JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerificationFailed(_) => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
