use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("consistency check failed: {0}")]
    Consistency(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Compute(monopow::Error),
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Unsupported(_) => 3,
            CliError::Consistency(_) => 4,
            CliError::Compute(e) => match e {
                monopow::Error::Inconsistent(_) => 4,
                monopow::Error::Unbounded | monopow::Error::Overflow => 3,
                _ => 2,
            },
        }
    }
}

impl From<monopow::Error> for CliError {
    fn from(e: monopow::Error) -> Self {
        CliError::Compute(e)
    }
}
