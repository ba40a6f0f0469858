use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Caller mistakes (bad input, a filling that is not in the claimed class)
/// are kept apart from [`Error::TheoremViolation`], which signals that an
/// internal step produced a state the underlying theorems rule out.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a Ferrers shape: {0}")]
    NotFerrers(String),

    #[error("invalid pattern {pattern}: {reason}")]
    InvalidPattern { pattern: String, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("bad composition {content:?} for shape {shape:?}: {reason}")]
    BadComposition {
        shape: Vec<usize>,
        content: Vec<usize>,
        reason: String,
    },

    #[error("filling content {actual:?} does not match {expected:?}")]
    ContentMismatch {
        expected: Vec<usize>,
        actual: Vec<usize>,
    },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid filling: {0}")]
    InvalidFilling(String),

    #[error("filling {filling:?} contains {pattern}")]
    NotAvoiding {
        filling: Vec<usize>,
        pattern: String,
    },

    #[error("no {kind}-avoiding full rook placement on {shape:?} realizes {sequence:?}")]
    NoSuchPlacement {
        shape: Vec<usize>,
        sequence: Vec<usize>,
        kind: String,
    },

    #[error("internal theorem violation: {0}")]
    TheoremViolation(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
