use thiserror::Error;

/// Exit code when every asserted check holds.
pub const EXIT_PASS: i32 = 0;
/// Exit code when an asserted check is refuted.
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("i/o error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io { .. } => EXIT_INPUT,
            CliError::Budget(_) | CliError::Unsupported(_) => EXIT_BUDGET,
        }
    }
}

impl From<leibniz_core::lattice::LatticeError> for CliError {
    fn from(e: leibniz_core::lattice::LatticeError) -> Self {
        use leibniz_core::lattice::LatticeError;
        match e {
            LatticeError::InfiniteField => CliError::Unsupported(e.to_string()),
            LatticeError::Budget { .. } => CliError::Budget(e.to_string()),
        }
    }
}
