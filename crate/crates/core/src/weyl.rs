//! Weyl vectors and the two forms of the Weyl dimension formula.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::combinatorics::binom_ext;
use crate::detkit::{det_exact, RationalMatrix};
use crate::error::{Error, Result};
use crate::groups::{ClassicalGroup, DominantWeight, Family};
use crate::rational::{ExactRational, HalfInteger};

/// Coordinates of half the sum of positive roots in the ε-basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoVector {
    pub coords: Vec<HalfInteger>,
}

impl RhoVector {
    /// Twice each coordinate, always an integer.
    pub fn doubled(&self) -> Vec<i64> {
        self.coords
            .iter()
            .map(|c| i64::try_from(c.doubled()).expect("rho coordinate fits in i64"))
            .collect()
    }
}

pub fn rho(group: &ClassicalGroup) -> RhoVector {
    let n = group.rank() as i64;
    let coords = (1..=n)
        .map(|i| match group.family() {
            Family::GL => HalfInteger::from_int(n - i),
            Family::Sp => HalfInteger::from_int(n - i + 1),
            Family::SO if group.is_odd_orthogonal() => HalfInteger::plus_half(n - i),
            Family::SO => HalfInteger::from_int(n - i),
        })
        .collect();
    RhoVector { coords }
}

pub(crate) fn to_natural(value: ExactRational, context: &'static str) -> Result<BigUint> {
    if !value.is_integer() || value.is_negative() {
        return Err(Error::NonIntegerResult {
            value: value.to_string(),
            context,
        });
    }
    Ok(value
        .to_integer()
        .to_biguint()
        .expect("non-negative integer"))
}

/// Classical product over positive roots, evaluated as one exact fraction.
pub fn weyl_dim_product(group: &ClassicalGroup, lambda: &DominantWeight) -> Result<BigUint> {
    lambda.check_rank(group)?;
    let n = group.rank();
    let rho = rho(group);
    let shifted: Vec<ExactRational> = (0..n)
        .map(|i| rho.coords[i].to_rational() + BigRational::from_integer(lambda.parts()[i].into()))
        .collect();
    let base: Vec<ExactRational> = rho.coords.iter().map(HalfInteger::to_rational).collect();

    let mut numer = BigRational::one();
    let mut denom = BigRational::one();
    for i in 0..n {
        for j in i + 1..n {
            match group.family() {
                Family::GL => {
                    numer *= &shifted[i] - &shifted[j];
                    denom *= &base[i] - &base[j];
                }
                Family::Sp | Family::SO => {
                    numer *= &shifted[i] * &shifted[i] - &shifted[j] * &shifted[j];
                    denom *= &base[i] * &base[i] - &base[j] * &base[j];
                }
            }
        }
    }
    if group.family() == Family::Sp || group.is_odd_orthogonal() {
        for i in 0..n {
            numer *= &shifted[i];
            denom *= &base[i];
        }
    }
    to_natural(numer / denom, "Weyl dimension product")
}

/// Determinant form: a binomial matrix in `λ_i − i` with prefactor
/// `1, 1, 2^n, 2^(n-1)` for `GL(n)`, `Sp(2n)`, `SO(2n+1)`, `SO(2n)`.
pub fn weyl_dim_det(group: &ClassicalGroup, lambda: &DominantWeight) -> Result<BigUint> {
    lambda.check_rank(group)?;
    let n = group.rank() as i64;
    if n == 0 {
        return Ok(BigUint::one());
    }
    let odd = group.is_odd_orthogonal();
    let matrix = RationalMatrix::from_fn(n as usize, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        let li = lambda.parts()[(i - 1) as usize];
        let (top, k) = match group.family() {
            Family::GL => (HalfInteger::from_int(li + n - i), n - j),
            Family::Sp => (HalfInteger::from_int(li - i + 2 * n - j + 1), 2 * n - 2 * j + 1),
            Family::SO if odd => (HalfInteger::plus_half(li - i + 2 * n - j), 2 * n - 2 * j + 1),
            Family::SO => (HalfInteger::from_doubled(2 * (li - i + 2 * n - j) - 1), 2 * n - 2 * j),
        };
        binom_ext(&top, k as u32)
    });
    let prefactor: u32 = match group.family() {
        Family::GL | Family::Sp => 0,
        Family::SO if odd => n as u32,
        Family::SO => n as u32 - 1,
    };
    let value = det_exact(&matrix) * BigRational::from_integer(BigInt::from(2).pow(prefactor));
    to_natural(value, "Weyl dimension determinant")
}
