use std::process::ExitCode;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("verification failed: {0}")]
    VerifyFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Numerical(_) => 3,
        })
    }
}

impl From<fracdiff_core::Error> for CliError {
    fn from(e: fracdiff_core::Error) -> Self {
        CliError::Numerical(e.to_string())
    }
}
