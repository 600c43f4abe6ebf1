use std::fmt;

/// Errors produced by graph construction, parsing, and the numeric kernels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Vertex count outside the supported range, or an order overflow.
    Size(String),
    /// graph6 decode failure; `offset` is the byte position within the line.
    Graph6 { offset: usize, reason: String },
    /// The operation needs a connected graph.
    Disconnected(String),
    /// The quantity is undefined for this input (e.g. toughness of a complete graph).
    Undefined(String),
    /// Input exceeds an exact-computation cap (isomorphism, toughness enumeration,
    /// exact characteristic polynomial, exhaustive generation).
    Capability(String),
    /// A matrix failed a validity precondition (not square, asymmetric, negative entry).
    Matrix(String),
    /// Family or grid parameters violate a side condition; the message names the
    /// failed inequality.
    Parameter(String),
    /// Malformed vertex partition (empty block, overlap, or incomplete cover).
    Partition(String),
    /// Root isolation found no sign change inside the search bound.
    RootSearch(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Size(msg) => write!(f, "size error: {msg}"),
            Error::Graph6 { offset, reason } => {
                write!(f, "graph6 parse error at byte {offset}: {reason}")
            }
            Error::Disconnected(msg) => write!(f, "connectivity error: {msg}"),
            Error::Undefined(msg) => write!(f, "undefined: {msg}"),
            Error::Capability(msg) => write!(f, "capability error: {msg}"),
            Error::Matrix(msg) => write!(f, "matrix error: {msg}"),
            Error::Parameter(msg) => write!(f, "parameter error: {msg}"),
            Error::Partition(msg) => write!(f, "partition error: {msg}"),
            Error::RootSearch(msg) => write!(f, "root search error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
