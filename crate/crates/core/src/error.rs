use thiserror::Error;

use crate::expr::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} of size {requested} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        requested: u128,
        cap: usize,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("element {element} is not central in {ring}")]
    NotCentral { ring: String, element: String },
    #[error("element {element} is not nilpotent in {ring}")]
    NotNilpotent { ring: String, element: String },
    #[error("multiplication of {ring} is not associative at ({a}, {b}, {c})")]
    AssociativityViolation {
        ring: String,
        a: String,
        b: String,
        c: String,
    },
    #[error("{0} was not built as a group ring")]
    WrongConstruction(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    pub(crate) fn cap(what: &'static str, requested: u128, cap: usize) -> Self {
        Error::CapExceeded {
            what,
            requested,
            cap,
        }
    }

    /// True for the errors the CLI reports with the cap exit code.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
