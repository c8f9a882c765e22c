use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced by the library and the CLI.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: bad parameters, bad files, invalid vertex ids.
    #[error("{0}")]
    Input(String),

    /// Input error tied to a line of a text document (1-based).
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A configured resource cap was exceeded.
    #[error("{0}")]
    Resource(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// Process exit status used by the CLI for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Parse { .. } | Error::Io { .. } => 2,
            Error::Resource(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
