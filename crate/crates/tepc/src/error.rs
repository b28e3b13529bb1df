use crate::search::SearchReport;

/// Errors shared by every module of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A constructor or operation was called with parameters outside its domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The graph is too large for an exhaustive operation.
    #[error("unsupported size: {what} has {actual}, limit is {limit}")]
    UnsupportedSize {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    /// A labeling was applied to a graph other than the one it was built for.
    #[error("binding mismatch: {0}")]
    BindingMismatch(String),

    /// The requested family member admits no balanced labeling.
    #[error("not labelable: {0}")]
    NotLabelable(String),

    /// A non-existence certification failed because a witness labeling exists.
    #[error("witness found: the graph admits a balanced labeling")]
    WitnessFound(Box<SearchReport>),

    /// A document failed structural validation (beyond JSON syntax).
    #[error("malformed document: {0}")]
    Format(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
