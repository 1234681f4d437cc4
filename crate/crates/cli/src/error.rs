use std::path::PathBuf;

use hadastick_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    /// 1 for input and validation errors, 2 for failed verification.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) | CliError::Core(CoreError::Invariant(_)) => 2,
            _ => 1,
        }
    }
}

impl From<hadastick_core::HVectorError> for CliError {
    fn from(e: hadastick_core::HVectorError) -> Self {
        CliError::Core(e.into())
    }
}

impl From<hadastick_core::ConfigError> for CliError {
    fn from(e: hadastick_core::ConfigError) -> Self {
        CliError::Core(e.into())
    }
}
