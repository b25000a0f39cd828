use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A rational map was evaluated where one of its denominators vanishes,
    /// or a parameter that must be nonzero is zero.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid node {node} for {context}")]
    InvalidNode { node: usize, context: &'static str },

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
