//! Error type shared by all fallible operations in this crate.

use std::fmt;

use num_bigint::BigUint;

/// Everything that can go wrong when building or analyzing objects here.
///
/// `Parse` is a usage-level error (bad input text, with a byte position);
/// all other variants are domain errors (structurally valid input that
/// violates a precondition).
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Malformed literal text; `at` is the byte offset into the input.
    Parse { at: usize, msg: String },
    /// A point outside the domain `0..n`.
    PointOutOfRange { x: usize, n: usize },
    /// An image entry outside the domain `0..n`.
    ImageOutOfRange { index: usize, value: usize, n: usize },
    /// The domain must have at least one element.
    EmptyDomain,
    /// An orbit-pattern value that breaks the invariants (empty order list,
    /// a zero order, or modulus exceeding the ambient size).
    InvalidPattern(String),
    /// Two values with different ambient sizes were combined.
    AmbientMismatch { left: usize, right: usize },
    /// A rank outside `1..=n^n`.
    RankOutOfRange { rank: BigUint, n: usize },
    /// An exhaustive sweep was requested above the safety guard without the
    /// explicit override.
    GuardExceeded { n: usize, limit: usize },
    /// The sweep engine cannot index this domain at all (independent of any
    /// override flag).
    SweepTooLarge { n: usize, limit: usize },
    /// A parameter outside its documented range (message names it).
    InvalidParameter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { at, msg } => write!(f, "parse error at byte {at}: {msg}"),
            Error::PointOutOfRange { x, n } => {
                write!(f, "point {x} is outside the domain 0..{n}")
            }
            Error::ImageOutOfRange { index, value, n } => {
                write!(f, "image {value} at position {index} is outside the domain 0..{n}")
            }
            Error::EmptyDomain => write!(f, "domain size must be at least 1"),
            Error::InvalidPattern(msg) => write!(f, "invalid orbit pattern: {msg}"),
            Error::AmbientMismatch { left, right } => {
                write!(f, "ambient size mismatch: {left} vs {right}")
            }
            Error::RankOutOfRange { rank, n } => {
                write!(f, "rank {rank} is outside 1..={n}^{n}")
            }
            Error::GuardExceeded { n, limit } => write!(
                f,
                "domain size {n} exceeds the exhaustive-search guard of {limit}; \
                 pass force (CLI: --force) to run anyway"
            ),
            Error::SweepTooLarge { n, limit } => {
                write!(f, "domain size {n} is beyond the sweep engine's hard limit of {limit}")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
