use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("n = {n} exceeds the limit of {max}")]
    Capacity { n: usize, max: usize },
    #[error("prime {0} is not supported (supported: {1})")]
    UnsupportedPrime(u64, String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] descent_lie::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    /// 2 for usage and capacity problems, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Capacity { .. } | CliError::UnsupportedPrime(..) => 2,
            CliError::Core(descent_lie::Error::Capacity { .. }) => 2,
            _ => 1,
        }
    }
}
