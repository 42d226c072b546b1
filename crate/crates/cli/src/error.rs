use effspec::Error;

/// Exit status for each failure class.
pub mod exit {
    pub const USAGE: i32 = 64;
    pub const DATA: i32 = 65;
    pub const NO_INPUT: i32 = 66;
    pub const SOFTWARE: i32 = 70;
    pub const IO_ERR: i32 = 74;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{source_name}line {line}: {message}")]
    Parse {
        /// Empty, or a file name followed by `": "`.
        source_name: String,
        line: usize,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Parse { .. } => exit::DATA,
            CliError::Io { .. } => exit::NO_INPUT,
            CliError::Core(e) => match e {
                Error::DimensionMismatch { .. }
                | Error::IndexOutOfRange { .. }
                | Error::EmptySelection
                | Error::CapExceeded { .. }
                | Error::InvalidEta { .. }
                | Error::InvalidBudget { .. } => exit::USAGE,
                Error::NoConvergence { .. } => exit::SOFTWARE,
                _ => exit::DATA,
            },
        }
    }
}

impl CliError {
    /// Prefixes parse errors with the file they came from.
    pub fn in_file(self, path: &str) -> CliError {
        match self {
            CliError::Parse { line, message, .. } => CliError::Parse {
                source_name: format!("{path}: "),
                line,
                message,
            },
            other => other,
        }
    }
}
