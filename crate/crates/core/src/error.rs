use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum WslError {
    /// An argument fell outside the domain an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// A request would need more memory than the guard allows.
    #[error("resource limit: {0}")]
    Resource(String),

    /// Post-selection found no weight on the ancilla |1> branch.
    #[error("degenerate post-selection branch (norm {0:e})")]
    DegenerateBranch(f64),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("I/O error at {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("CSV error at {}: {source}", path.display())]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
}

impl WslError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        WslError::Domain(msg.into())
    }

    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            WslError::Io { .. } | WslError::Csv { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, WslError>;
