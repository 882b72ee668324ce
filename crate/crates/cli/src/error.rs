//! Error type and the exit-code contract: 0 success, 1 input or validation
//! error, 2 verification failure, 3 resource cap exceeded.

use thiserror::Error;

use ihull_core::constructors::ConstructorError;
use ihull_core::hull::HullError;
use ihull_core::semigroup::SemigroupError;
use ihull_core::spectrum::SpectrumError;
use ihull_core::strings::StringsError;

use crate::input::InputError;

#[derive(Error, Debug)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("resource cap exceeded: {0}")]
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Verification(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SemigroupError> for CliError {
    fn from(e: SemigroupError) -> Self {
        match e {
            SemigroupError::AlignmentBudget { .. } => CliError::Budget(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<ConstructorError> for CliError {
    fn from(e: ConstructorError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<HullError> for CliError {
    fn from(e: HullError) -> Self {
        match e {
            HullError::CapExceeded(_) => CliError::Budget(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<StringsError> for CliError {
    fn from(e: StringsError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SpectrumError> for CliError {
    fn from(e: SpectrumError) -> Self {
        match e {
            SpectrumError::CoverBudget { .. } | SpectrumError::AlgebraBudget(_) => {
                CliError::Budget(e.to_string())
            }
            SpectrumError::Hull(h) => CliError::from(h),
            other => CliError::Input(other.to_string()),
        }
    }
}
