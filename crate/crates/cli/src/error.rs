use lne_core::LneError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{field}: {source}")]
    Field {
        field: &'static str,
        #[source]
        source: LneError,
    },
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot write output: {0}")]
    Write(#[from] std::io::Error),
    #[error("{0}")]
    Infeasible(LneError),
    /// The record is printed before exiting.
    #[error("solver did not converge")]
    NonConvergence,
    #[error("check `{0}` failed")]
    CheckFailed(&'static str),
}

impl CliError {
    pub fn field(field: &'static str, source: LneError) -> Self {
        match source {
            LneError::Infeasible { .. } | LneError::DegenerateConstraint { .. } => {
                Self::Infeasible(source)
            }
            source => Self::Field { field, source },
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Self::CheckFailed(_) => 1,
            Self::Validation(_) | Self::Field { .. } | Self::Read { .. } | Self::Write(_) => 2,
            Self::NonConvergence => 3,
            Self::Infeasible(_) => 4,
        }
    }
}
