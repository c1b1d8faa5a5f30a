use std::io;

use palstream::ParamError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("{0}")]
    Usage(String),
    #[error("byte {byte:#04x} at offset {offset} is outside the alphabet")]
    Alphabet { byte: u8, offset: u64 },
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: io::Error,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn io(context: impl Into<String>, source: io::Error) -> Self {
        CliError::Io {
            context: context.into(),
            source,
        }
    }

    /// 2 for bad parameters or input outside the alphabet, 1 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Param(_) | CliError::Usage(_) | CliError::Alphabet { .. } => 2,
            CliError::Io { .. } | CliError::Csv(_) => 1,
        }
    }
}
