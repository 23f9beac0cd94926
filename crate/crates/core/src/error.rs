use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("resource limit: {what} would produce {count} items (limit {limit})")]
    ResourceLimit {
        what: String,
        count: u128,
        limit: u128,
    },

    #[error("slope is undefined for the zero dimension vector")]
    UndefinedSlope,

    #[error("representation is (Θ,σ)-semistable")]
    NotUnstable,

    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}
