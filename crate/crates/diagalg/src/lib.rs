//! Computational engine for three planar diagram algebras: the label algebra
//! L_n(X), the ghost algebra Gh_n, and the symplectic blob algebra S_n.
//!
//! The crate provides exact diagram multiplication with symbolic parameter
//! coefficients ([`labelalg`], [`ghostalg`], [`sympblob`]), the algebraic
//! presentation with its evaluation homomorphism φ ([`presentation`]),
//! rewriting of words to WT normal form ([`rewrite`]), diagram-to-word
//! decomposition ([`decompose`]), and the shared coefficient ring
//! ([`coeff`]). All arithmetic is exact; there is no floating point anywhere.

pub mod coeff;
pub mod decompose;
pub mod diagram;
pub mod ghostalg;
pub mod labelalg;
pub mod presentation;
pub mod rewrite;
pub mod sympblob;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// Two operands live over different n.
    #[error("size mismatch: left has n = {0}, right has n = {1}")]
    SizeMismatch(u32, u32),
    /// Two operands live over different label sets X.
    #[error("label set mismatch")]
    LabelSetMismatch,
    /// A word evaluated to something with boundary arcs in its trace.
    #[error("word is not label-reduced: its evaluation produces boundary arcs")]
    NotLabelReduced,
    /// A diagram expected to be even has odd parity.
    #[error("diagram is not even")]
    NotEvenDiagram,
    /// A diagram expected to be odd has even parity.
    #[error("diagram is not odd")]
    NotOdd,
    /// A word expected to contain only even generators contains an odd one.
    #[error("word contains odd generators")]
    NotEven,
    /// A diagram expected to be boundary-free has boundary links.
    #[error("diagram has boundary links")]
    HasBoundaryLinks,
    /// A generator or node index is out of range for the given n.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    /// Boundary decorations violate the required parity invariant.
    #[error("parity mismatch in boundary data")]
    ParityMismatch,
    /// A blob decoration sequence or placement is invalid.
    #[error("invalid blob decoration: {0}")]
    InvalidDecoration(String),
    /// A word expected to be even-reduced is not.
    #[error("word is not even-reduced")]
    NotEvenReduced,
    /// A structurally invalid diagram.
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    /// A parse error, with the byte position in the input.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl From<coeff::UnmappedParameter> for Error {
    fn from(e: coeff::UnmappedParameter) -> Self {
        Error::InvalidDiagram(e.to_string())
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
