use std::fmt;

/// Command failures mapped to distinct exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Exit 2: bad configuration (unknown key, unparsable value, missing
    /// required setting).
    Config(String),
    /// Exit 3: an objective evaluation failed mid-run.
    Objective(String),
    /// Exit 4: a simulator backend failed outside the optimizer loop.
    Backend(String),
    /// Exit 5: replay produced differing output trees.
    ReplayMismatch(Vec<String>),
    /// Exit 1: filesystem trouble.
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Config(_) => 2,
            CliError::Objective(_) => 3,
            CliError::Backend(_) => 4,
            CliError::ReplayMismatch(_) => 5,
        }
    }

    pub fn io(context: &str, e: std::io::Error) -> Self {
        CliError::Io(format!("{context}: {e}"))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "config error: {m}"),
            CliError::Objective(m) => write!(f, "objective failure: {m}"),
            CliError::Backend(m) => write!(f, "backend failure: {m}"),
            CliError::ReplayMismatch(files) => {
                write!(
                    f,
                    "replay mismatch in {} file(s): {}",
                    files.len(),
                    files.join(", ")
                )
            }
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<cfo_core::CfoError> for CliError {
    fn from(e: cfo_core::CfoError) -> Self {
        match e {
            cfo_core::CfoError::Objective { .. } => CliError::Objective(e.to_string()),
            other => CliError::Config(other.to_string()),
        }
    }
}

impl From<cfo_antenna::BackendError> for CliError {
    fn from(e: cfo_antenna::BackendError) -> Self {
        CliError::Backend(e.to_string())
    }
}
