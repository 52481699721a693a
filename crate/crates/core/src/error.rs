use thiserror::Error;

use crate::ring::RingDescriptor;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch {
        left: RingDescriptor,
        right: RingDescriptor,
    },

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("cannot parse {literal:?} as an element of {ring}")]
    BadLiteral { ring: RingDescriptor, literal: String },

    #[error("unknown ring {0:?}; expected `int`, `rat` or `mod:<n>`")]
    UnknownRing(String),

    #[error("alphabet mismatch")]
    AlphabetMismatch,

    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),

    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),

    #[error("dimension mismatch: expected lengths ({expected_left}, {expected_right}), got ({got_left}, {got_right})")]
    DimensionMismatch {
        expected_left: usize,
        expected_right: usize,
        got_left: usize,
        got_right: usize,
    },

    #[error("weight mismatch: target algebra has weight {target}, requested {requested}")]
    WeightMismatch { target: String, requested: String },

    #[error("unsupported weight: {0}")]
    UnsupportedWeight(String),

    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),

    #[error("{0}")]
    Invalid(String),
}
