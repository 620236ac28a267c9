use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{what} of order {order} exceeds the size cap {cap}")]
    SizeCapExceeded {
        what: &'static str,
        order: u128,
        cap: usize,
    },
    #[error("subset is not a two-sided ideal: {0}")]
    NotAnIdeal(String),
    #[error("modules are defined over different rings")]
    RingMismatch,
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("malformed description: {0}")]
    Malformed(String),
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn cap(what: &'static str, order: u128, cap: usize) -> Self {
        Error::SizeCapExceeded { what, order, cap }
    }
}
