use thiserror::Error;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MATH: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{origin}: {message}")]
    Input { origin: String, message: String },

    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error(transparent)]
    Core(#[from] lecalc_core::Error),

    #[error("corpus case {case}: {source}")]
    Case { case: String, source: lecalc_core::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input { .. } | CliError::Io { .. } => EXIT_USAGE,
            CliError::Core(e) | CliError::Case { source: e, .. } if e.is_usage() => EXIT_USAGE,
            CliError::Core(_) | CliError::Case { .. } => EXIT_MATH,
        }
    }

    /// Machine-readable code for reports.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "USAGE",
            CliError::Input { .. } => "INPUT",
            CliError::Io { .. } => "IO",
            CliError::Core(e) | CliError::Case { source: e, .. } => e.code(),
        }
    }
}
