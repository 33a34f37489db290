use std::fmt;

/// A command failure and the exit status it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Unreadable input, malformed document or bad flags (exit 2).
    Usage(String),
    /// Well-formed input that fails a mathematical check (exit 1).
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }

    pub fn failure(message: impl Into<String>) -> Self {
        CliError::Failure(message.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<fillpair_core::Error> for CliError {
    fn from(e: fillpair_core::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}
