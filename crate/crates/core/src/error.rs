use thiserror::Error;

use crate::groups::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group {family}({size}): {reason}")]
    InvalidGroup {
        family: Family,
        size: u32,
        reason: &'static str,
    },
    #[error("family mismatch: {big} cannot contain {small}")]
    FamilyMismatch { big: Family, small: Family },
    #[error("{small} is not a proper subgroup size of {big}")]
    SizeOrder { big: String, small: String },
    #[error("weight {parts:?} is not dominant: {reason}")]
    NotDominant {
        parts: Vec<i64>,
        reason: &'static str,
    },
    #[error("weight has length {got}, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("non-integral result {value} in {context}")]
    NonIntegerResult { value: String, context: &'static str },
    #[error("determinant {value} disagrees with the interlacing condition for mu={mu:?}")]
    InterlacingMismatch { mu: Vec<i64>, value: String },
    #[error("{pair} is not a corank-2 pair with a product formula")]
    WrongCorank { pair: String },
    #[error("rank window violated: m={m}, n={n}")]
    BadRankWindow { n: usize, m: usize },
    #[error("representation dimension {dim} exceeds cap {cap}")]
    ScaleExceeded { dim: String, cap: u64 },
    #[error("negative remainder at weight {weight:?} while decomposing")]
    NegativeRemainder { weight: Vec<i64> },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
