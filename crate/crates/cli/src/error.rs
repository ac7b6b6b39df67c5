use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error in `{key}`: {reason}")]
    Config { key: String, reason: String },
    #[error("degenerate physics: {0}")]
    Physics(String),
    #[error("verification failed: {failed} of {total} cases outside tolerance")]
    Verification { failed: usize, total: usize },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn config(key: impl Into<String>, reason: impl Into<String>) -> Self {
        Self::Config {
            key: key.into(),
            reason: reason.into(),
        }
    }

    /// 1 verification failure, 2 config error, 3 degenerate physics.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Verification { .. } => 1,
            Self::Config { .. } | Self::Io(_) => 2,
            Self::Physics(_) => 3,
        }
    }
}

impl From<nslg_core::Error> for CliError {
    fn from(e: nslg_core::Error) -> Self {
        match e {
            nslg_core::Error::InvalidParameter { name, reason } => Self::config(name, reason),
            other => Self::Physics(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
