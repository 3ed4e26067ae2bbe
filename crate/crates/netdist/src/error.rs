use std::path::PathBuf;

/// Everything the command line can fail with, grouped by exit code.
#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}:{line}: {message}", path.display())]
    Parse { path: PathBuf, line: usize, message: String },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Contract(String),
    #[error(transparent)]
    Core(#[from] netdist_core::Error),
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
}

impl AppError {
    /// 2 for unreadable or malformed input, 3 for well-formed input used
    /// outside an operation's contract, 4 for numerical failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            AppError::Io { .. } | AppError::Parse { .. } | AppError::Input(_) | AppError::Output(_) => 2,
            AppError::Contract(_) => 3,
            AppError::Core(e) if e.is_numerical() => 4,
            AppError::Core(e) if e.is_malformed_input() => 2,
            AppError::Core(_) => 3,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        AppError::Io { path: path.into(), source }
    }

    pub(crate) fn parse(path: impl Into<PathBuf>, line: usize, message: impl Into<String>) -> Self {
        AppError::Parse { path: path.into(), line, message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, AppError>;
