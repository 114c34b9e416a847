use std::io;

use thiserror::Error;

use crate::table::CsvError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("numeric failure: {0}")]
    Numeric(matconc_core::Error),
    #[error("invalid input: {0}")]
    Input(matconc_core::Error),
    #[error("i/o failure: {0}")]
    Io(#[from] io::Error),
    #[error("csv: {0}")]
    Csv(#[from] CsvError),
}

impl From<matconc_core::Error> for CliError {
    fn from(e: matconc_core::Error) -> Self {
        use matconc_core::Error as E;
        match e {
            E::NoConvergence { .. }
            | E::Overflow { .. }
            | E::NonFinite
            | E::QuadratureMismatch { .. }
            | E::QuadratureDiverged
            | E::DegenerateDraw(_) => CliError::Numeric(e),
            _ => CliError::Input(e),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => 1,
            CliError::Numeric(_) => 3,
            CliError::Io(_) | CliError::Csv(_) => 4,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
