use std::path::PathBuf;

use plasmon_itm::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("{context}: {source}")]
    Core {
        context: String,
        #[source]
        source: Error,
    },

    #[error("cannot write {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn core(context: impl Into<String>, source: Error) -> Self {
        CliError::Core {
            context: context.into(),
            source,
        }
    }

    /// 2 for configuration, 3 for regime, 4 for numerical failures and 1 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Core { source, .. } => match source {
                Error::InvalidParameter { .. } => 2,
                e if e.is_regime() => 3,
                _ => 4,
            },
            CliError::Io { .. } => 1,
        }
    }
}

/// Attaches a context string to a core result.
pub trait Context<T> {
    fn context(self, what: impl FnOnce() -> String) -> Result<T, CliError>;
}

impl<T> Context<T> for plasmon_itm::Result<T> {
    fn context(self, what: impl FnOnce() -> String) -> Result<T, CliError> {
        self.map_err(|e| CliError::core(what(), e))
    }
}
