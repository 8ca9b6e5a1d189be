use thiserror::Error;

/// Errors raised by the combinatorial constructions in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The requested size is beyond what the enumerator supports.
    #[error("size {n} exceeds the supported cap of {cap}")]
    Capacity { n: usize, cap: usize },

    /// The input object violates one of its structural invariants.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// A computed quantity disagrees with a proven identity.
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    /// A canonical text form could not be parsed.
    #[error("cannot parse {kind} from {input:?}: {reason}")]
    Parse {
        kind: &'static str,
        input: String,
        reason: String,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn parse(kind: &'static str, input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            kind,
            input: input.to_owned(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
