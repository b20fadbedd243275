//! Error type shared by every module.

use std::path::PathBuf;

/// Errors raised across the pipeline. Each variant maps onto one
/// machine-readable class (see [`Error::class`]).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("load error: {0}")]
    Load(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("checkpoint mismatch: {0}")]
    Checkpoint(String),

    #[error("adapter error: {0}")]
    Adapter(String),

    #[error("evaluation error: {0}")]
    Evaluation(String),

    #[error("training aborted: {0}")]
    Training(String),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// Process exit code of the class; 1 and 2 are left to panics and
    /// usage errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidArgument(_) => 3,
            Error::Io { .. } => 4,
            Error::Load(_) => 5,
            Error::Schema(_) => 6,
            Error::Config(_) => 7,
            Error::Checkpoint(_) => 8,
            Error::Adapter(_) => 9,
            Error::Evaluation(_) => 10,
            Error::Training(_) => 11,
        }
    }

    /// The message without the class prefix of `Display`.
    pub fn detail(&self) -> String {
        match self {
            Error::Io { path, source } => format!("{}: {source}", path.display()),
            Error::InvalidArgument(m)
            | Error::Load(m)
            | Error::Schema(m)
            | Error::Config(m)
            | Error::Checkpoint(m)
            | Error::Adapter(m)
            | Error::Evaluation(m)
            | Error::Training(m) => m.clone(),
        }
    }

    /// Stable kebab-case class name.
    pub fn class(&self) -> &'static str {
        match self {
            Error::InvalidArgument(_) => "invalid-argument",
            Error::Io { .. } => "missing-input",
            Error::Load(_) => "load-error",
            Error::Schema(_) => "schema-violation",
            Error::Config(_) => "config-error",
            Error::Checkpoint(_) => "checkpoint-mismatch",
            Error::Adapter(_) => "adapter-error",
            Error::Evaluation(_) => "evaluation-error",
            Error::Training(_) => "training-error",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
