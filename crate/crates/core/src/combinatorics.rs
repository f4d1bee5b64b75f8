//! Binomial coefficients and the restricted-root partition function.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::rational::{ExactRational, HalfInteger};

/// `x(x-1)…(x-k+1)/k!` for a half-integer `x`; `1` when `k = 0`.
pub fn binom_ext(x: &HalfInteger, k: u32) -> ExactRational {
    // x - i has doubled value 2x - 2i, so the product carries an extra 2^k.
    let mut numer = BigInt::one();
    let mut denom = BigInt::one();
    for i in 0..k {
        numer *= x.doubled() - BigInt::from(2 * i as i64);
        denom *= BigInt::from(2 * (i as i64 + 1));
    }
    BigRational::new(numer, denom)
}

/// Truncated binomial: `C(n, k)` when `n ≥ k`, otherwise zero (including
/// every negative `n`).
pub fn binom_trunc(n: i64, k: u32) -> BigUint {
    if n < k as i64 {
        return BigUint::zero();
    }
    let n = n as u64;
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Coordinates `ξ_j` of a weight `Σ ξ_j ε_j` of the subgroup torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionArg {
    pub xi: Vec<i64>,
}

impl PartitionArg {
    pub fn new(xi: Vec<i64>) -> Self {
        Self { xi }
    }
}

/// Number of ways to write `ξ` as a non-negative combination of
/// `ε_1, …, ε_m`, each root counted with multiplicity `r`.
pub fn partition_value(arg: &PartitionArg, r: u32) -> BigUint {
    if arg.xi.is_empty() {
        return BigUint::one();
    }
    debug_assert!(r >= 1, "r = 0 only makes sense for the empty argument");
    let r = r.max(1);
    arg.xi
        .iter()
        .map(|&x| binom_trunc(x + r as i64 - 1, r - 1))
        .product()
}
