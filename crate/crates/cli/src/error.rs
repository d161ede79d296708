use std::fmt;

use balcover_core::balancing::{BalanceError, ParsePartitionError};
use balcover_core::coverage::CoverageError;
use balcover_core::division::{DivisionError, ParseDivisionError};
use balcover_core::graph::ParseGraphError;
use balcover_core::separator::SeparatorError;

pub const EXIT_OTHER: i32 = 1;
pub const EXIT_INVARIANT: i32 = 2;
pub const EXIT_WINDOW: i32 = 3;
pub const EXIT_LIMIT: i32 = 4;

#[derive(Debug)]
pub struct CliError {
    pub category: &'static str,
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(category: &'static str, code: i32, message: impl Into<String>) -> Self {
        CliError { category, code, message: message.into() }
    }

    pub fn params(message: impl Into<String>) -> Self {
        Self::new("invalid-parameter", EXIT_OTHER, message)
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Self::new("parse", EXIT_OTHER, message)
    }

    pub fn invariant(message: impl Into<String>) -> Self {
        Self::new("invariant", EXIT_INVARIANT, message)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error[{}]: {}", self.category, self.message)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new("io", EXIT_OTHER, e.to_string())
    }
}

impl From<SeparatorError> for CliError {
    fn from(e: SeparatorError) -> Self {
        match e {
            SeparatorError::SizeLimitExceeded { .. } => CliError::new("size-limit", EXIT_LIMIT, e.to_string()),
            _ => CliError::new("oracle", EXIT_OTHER, e.to_string()),
        }
    }
}

impl From<DivisionError> for CliError {
    fn from(e: DivisionError) -> Self {
        match e {
            DivisionError::ParameterOutOfWindow { .. } => CliError::new("window", EXIT_WINDOW, e.to_string()),
            DivisionError::Oracle(inner) => inner.into(),
            DivisionError::InvalidParameter(_) => CliError::params(e.to_string()),
        }
    }
}

impl From<BalanceError> for CliError {
    fn from(e: BalanceError) -> Self {
        match e {
            BalanceError::Division(inner) => inner.into(),
            BalanceError::InvalidParameter(_) => CliError::params(e.to_string()),
            _ => CliError::new("invalid-input", EXIT_OTHER, e.to_string()),
        }
    }
}

impl From<CoverageError> for CliError {
    fn from(e: CoverageError) -> Self {
        match e {
            CoverageError::SizeLimitExceeded { .. } => CliError::new("size-limit", EXIT_LIMIT, e.to_string()),
            CoverageError::Division(inner) => inner.into(),
            CoverageError::InvalidParameter(_) => CliError::params(e.to_string()),
            _ => CliError::new("invalid-input", EXIT_OTHER, e.to_string()),
        }
    }
}

impl From<ParseGraphError> for CliError {
    fn from(e: ParseGraphError) -> Self {
        CliError::parse(format!("graph file: {e}"))
    }
}

impl From<ParseDivisionError> for CliError {
    fn from(e: ParseDivisionError) -> Self {
        CliError::parse(format!("division file: {e}"))
    }
}

impl From<ParsePartitionError> for CliError {
    fn from(e: ParsePartitionError) -> Self {
        CliError::parse(format!("partition file: {e}"))
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::new("io", EXIT_OTHER, e.to_string())
    }
}
