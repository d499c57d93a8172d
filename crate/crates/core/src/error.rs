use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("inseparable linearized polynomial: {0}")]
    Inseparable(String),
    #[error("curve validation failed: {0}")]
    Validation(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error("desk-scale limit: {0}")]
    DeskScaleLimit(String),
    #[error("search budget exceeded: more than {budget} candidate evaluations")]
    Budget { budget: u64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}

pub(crate) fn inconsistency<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Inconsistency(msg.into()))
}
