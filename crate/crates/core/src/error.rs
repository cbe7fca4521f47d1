use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Argument outside the operation's domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A desk-scale guard was hit. `limit` is the configured bound.
    #[error("guard exceeded: {what} = {value} (limit {limit})")]
    GuardExceeded {
        what: &'static str,
        value: String,
        limit: String,
    },

    /// A binomial determinant that should count paths came out negative.
    #[error("negative path count {value} for index set {set:?} (n = {n})")]
    NegativePathCount { value: String, set: Vec<usize>, n: usize },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn guard(what: &'static str, value: impl ToString, limit: impl ToString) -> Self {
        Error::GuardExceeded {
            what,
            value: value.to_string(),
            limit: limit.to_string(),
        }
    }
}
