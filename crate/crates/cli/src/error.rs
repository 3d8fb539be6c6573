use disc_census::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Network(String),
    #[error("{0}")]
    FixtureMissing(String),
    #[error("{0}")]
    NotFound(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(Error::InvalidInput(_)) => "invalid-input",
            CliError::Core(Error::BudgetExceeded(_)) => "budget-exceeded",
            CliError::Core(Error::InternalInconsistency(_)) => "internal-inconsistency",
            CliError::Core(Error::ConditionFailed(_)) => "condition-failed",
            CliError::Core(Error::EmptySample(_)) => "empty-sample",
            CliError::Usage(_) => "invalid-input",
            CliError::Network(_) => "network",
            CliError::FixtureMissing(_) => "fixture-missing",
            CliError::NotFound(_) => "not-found",
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => "io",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::InvalidInput(_) | Error::EmptySample(_))
            | CliError::Usage(_)
            | CliError::FixtureMissing(_)
            | CliError::NotFound(_) => 2,
            CliError::Core(Error::BudgetExceeded(_)) => 3,
            CliError::Network(_) => 4,
            _ => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
