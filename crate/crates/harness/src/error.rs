use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Core(#[from] monideal_core::Error),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl HarnessError {
    /// Process exit code: 3 for resource caps, 2 for everything else the
    /// user can fix.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Core(monideal_core::Error::CapExceeded { .. })
            | HarnessError::Core(monideal_core::Error::ExponentOverflow { .. }) => 3,
            _ => 2,
        }
    }
}
