use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] tosswait::Error),

    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),

    #[error("cannot write CSV: {0}")]
    Csv(#[from] csv::Error),
}

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFICATION: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(tosswait::Error::Overflow { .. })
            | CliError::Core(tosswait::Error::GameLengthCap { .. }) => EXIT_OVERFLOW,
            _ => EXIT_USAGE,
        }
    }
}
