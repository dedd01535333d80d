//! Crate-wide error type.
//!
//! Every variant renders as `Kind: detail` on one line so CLI consumers can
//! parse failures mechanically.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Edge list does not describe a tree (wrong edge count, cycle, disconnected).
    #[error("NotATree: {0}")]
    NotATree(String),
    /// Vertex label out of range, self-loop, or duplicate edge.
    #[error("BadLabel: {0}")]
    BadLabel(String),
    /// Order outside the operation's domain (e.g. closed form needs n >= 3).
    #[error("BadOrder: {0}")]
    BadOrder(String),
    /// Degree-sequence grammar violation.
    #[error("ParseError: {0}")]
    ParseError(String),
    /// Construction parameters admit no tree.
    #[error("Infeasible: {0}")]
    Infeasible(String),
    /// Degree sequence is not realizable by any tree.
    #[error("NotRealizable: {0}")]
    NotRealizable(String),
    /// Derived parameters undefined (n = max degree, or eta = n).
    #[error("DegenerateParams: {0}")]
    DegenerateParams(String),
    /// Majorization comparison on sequences of different length or sum.
    #[error("IncomparableLength: {0}")]
    IncomparableLength(String),
    /// Enumeration bound exceeded; partial results may still be valid.
    #[error("CapExceeded: {0}")]
    CapExceeded(String),
    /// Argument outside a documented precondition.
    #[error("DomainError: {0}")]
    DomainError(String),
    #[error("Io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable tag, the part before the first `:` in `Display`.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotATree(_) => "NotATree",
            Error::BadLabel(_) => "BadLabel",
            Error::BadOrder(_) => "BadOrder",
            Error::ParseError(_) => "ParseError",
            Error::Infeasible(_) => "Infeasible",
            Error::NotRealizable(_) => "NotRealizable",
            Error::DegenerateParams(_) => "DegenerateParams",
            Error::IncomparableLength(_) => "IncomparableLength",
            Error::CapExceeded(_) => "CapExceeded",
            Error::DomainError(_) => "DomainError",
            Error::Io(_) => "Io",
        }
    }
}
