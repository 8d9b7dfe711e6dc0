use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Two values built over different universes were combined.
    #[error("universe mismatch")]
    UniverseMismatch,

    /// A conditioning event was empty where a non-empty one is required.
    #[error("conditioning event is empty")]
    EmptyConditioning,

    /// An event or gamble is not measurable w.r.t. the partition at hand.
    #[error("not measurable w.r.t. the partition: {0}")]
    NotMeasurable(String),

    /// A value failed its construction invariants.
    #[error("invalid {what}: {reason}")]
    Invalid { what: &'static str, reason: String },

    /// The operation only supports unconditional assessments.
    #[error("{0} requires an unconditional assessment (all conditioning events equal to the sure event)")]
    UnsupportedDomain(&'static str),

    /// A stated precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Degenerate input (e.g. a trivial conditional event) was rejected.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// Could not parse a literal or document.
    #[error("parse error: {0}")]
    Parse(String),

    /// An internal cross-check failed; this indicates a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn invalid(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid { what, reason: reason.into() }
    }

    pub fn parse(reason: impl Into<String>) -> Self {
        Error::Parse(reason.into())
    }
}
