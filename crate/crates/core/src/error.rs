use std::fmt;

use thiserror::Error;

/// Where in the input a parse error was detected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    /// 1-based line number (edge-list input).
    Line(usize),
    /// 0-based byte offset (graph6 input).
    Byte(usize),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Line(l) => write!(f, "line {l}"),
            Location::Byte(b) => write!(f, "byte {b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed header")]
    MalformedHeader,
    #[error("malformed edge line")]
    MalformedEdge,
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("invalid graph6 character {0:#04x}")]
    InvalidChar(u8),
    #[error("graph6 data too short")]
    Truncated,
    #[error("graph6 data too long")]
    TrailingData,
    #[error("graph6 padding bits are not zero")]
    NonZeroPadding,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {location}: {kind}")]
    Parse {
        location: Location,
        kind: ParseErrorKind,
    },
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{what} exceeded cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A proved statement failed on an input that satisfied its hypotheses.
    /// This always indicates a bug in this crate.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("generation failed after {attempts} attempts: {reason}")]
    GenerationFailed { attempts: usize, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(location: Location, kind: ParseErrorKind) -> Self {
        Error::Parse { location, kind }
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Output of a capped enumeration. `truncated` is set when the cap was hit
/// and `items` holds only the prefix found before stopping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration<T> {
    pub items: Vec<T>,
    pub truncated: bool,
    pub cap: usize,
}

impl<T> Enumeration<T> {
    /// Converts a truncated enumeration into [`Error::CapExceeded`].
    pub fn complete(self, what: &'static str) -> Result<Vec<T>> {
        if self.truncated {
            Err(Error::CapExceeded {
                what,
                cap: self.cap,
            })
        } else {
            Ok(self.items)
        }
    }
}
