//! Error type shared by the whole crate.

use std::fmt;

/// Errors produced by exact arithmetic and operator construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Exact polynomial division left a nonzero remainder.
    NotDivisible,
    /// A rational-coefficient operator could not be cast to the polynomial
    /// ring: some coefficient kept a nontrivial denominator.
    DenominatorNotCleared,
    /// A shift-operator coefficient has a pole at the evaluation index.
    PoleAtIndex { offset: i64, at: i64 },
    /// The derivative of the candidate polynomial is not divisible by the
    /// seed Wronskian, so it lies outside the stabilizer ring.
    NotAStabilizer,
    /// A partition must be a non-decreasing sequence of positive integers.
    InvalidPartition(String),
    /// Malformed serialized input.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotDivisible => write!(f, "exact polynomial division failed"),
            Error::DenominatorNotCleared => {
                write!(f, "operator coefficient retained a nontrivial denominator")
            }
            Error::PoleAtIndex { offset, at } => write!(
                f,
                "coefficient at shift offset {offset} has a pole at index n = {at}"
            ),
            Error::NotAStabilizer => {
                write!(f, "polynomial is not in the stabilizer ring (eta does not divide f')")
            }
            Error::InvalidPartition(msg) => write!(f, "invalid partition: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
