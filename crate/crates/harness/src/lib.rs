//! Command-line front end and verification harness for `pdthrottle`.

pub mod cache;
pub mod expr;
pub mod report;
pub mod suites;
pub mod table;

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    /// Bad arguments or input; exit code 2.
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] pdthrottle::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl HarnessError {
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Core(pdthrottle::Error::BudgetExceeded) => 1,
            _ => 2,
        }
    }
}
