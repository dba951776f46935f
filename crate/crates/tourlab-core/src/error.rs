//! Crate-wide error type. Every fallible operation returns [`Result`]; the
//! variants distinguish caller mistakes (mismatched sizes, out-of-range
//! vertices, exceeded enumeration caps) from internal-consistency failures
//! that signal an implementation bug (e.g. an exact division with remainder).

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// Two structures that must share an order do not.
    #[error("order mismatch: expected {expected}, found {found}")]
    OrderMismatch { expected: usize, found: usize },

    /// A coloring's palette does not match what the operation requires.
    #[error("palette mismatch: expected {expected}, found {found}")]
    PaletteMismatch { expected: usize, found: usize },

    /// A coloring's length does not match its host's order.
    #[error("coloring length {length} does not match host order {order}")]
    ColoringLength { length: usize, order: usize },

    /// A vertex identifier lies outside `1..=order`.
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    /// An operation that needs a nonempty vertex set received an empty one.
    #[error("empty vertex set")]
    EmptyVertexSet,

    /// A vertex set argument contains a repeated vertex.
    #[error("duplicate vertex {vertex} in vertex set")]
    DuplicateVertex { vertex: usize },

    /// Invalid argument that fits no more specific variant.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A documented enumeration cap was exceeded.
    #[error("{what}: order {requested} exceeds the supported cap {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        requested: usize,
    },

    /// A permutation image is not a bijection on `1..=k`.
    #[error("sequence of length {length} is not a permutation of 1..={length}")]
    NotAPermutation { length: usize },

    /// A pair sequence is not a maximal matching on the vertex set.
    #[error("not a maximal matching: {0}")]
    NotMaximalMatching(String),

    /// Two vertex sets that must partition the vertex set do not.
    #[error("not a partition of the vertex set: {0}")]
    NotAPartition(String),

    /// The vertex set given to a gadget is not a signature of the pattern.
    #[error("vertex set is not a signature of the pattern")]
    NotASignature,

    /// A gadget was handed a partition that has not passed verification.
    #[error("partition has not been verified")]
    UnverifiedPartition,

    /// An exact division left a remainder; this indicates a bug in the
    /// caller's pipeline or in this crate, never a property of valid inputs.
    #[error("exact division failed in {context}: {numerator} is not divisible by {divisor}")]
    Divisibility {
        context: &'static str,
        numerator: i64,
        divisor: i64,
    },

    /// Malformed text input; carries a 1-based line/column position.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// Unknown verification suite name.
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    /// An internal invariant failed; always a bug in this crate.
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
