//! Exact scalars: big rationals and half-integers.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type ExactRational = BigRational;

/// An element of `Z ∪ (Z + 1/2)`, stored as twice its value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInteger {
    doubled: BigInt,
}

impl HalfInteger {
    pub fn from_doubled(doubled: impl Into<BigInt>) -> Self {
        Self {
            doubled: doubled.into(),
        }
    }

    pub fn from_int(value: impl Into<BigInt>) -> Self {
        Self {
            doubled: value.into() * 2,
        }
    }

    /// `value + 1/2`.
    pub fn plus_half(value: impl Into<BigInt>) -> Self {
        Self {
            doubled: value.into() * 2 + 1,
        }
    }

    pub fn doubled(&self) -> &BigInt {
        &self.doubled
    }

    pub fn is_integer(&self) -> bool {
        self.doubled.is_even()
    }

    pub fn to_rational(&self) -> ExactRational {
        BigRational::new(self.doubled.clone(), BigInt::from(2))
    }

    pub fn zero() -> Self {
        Self {
            doubled: BigInt::zero(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(BigInt::one())
    }
}

impl Add<i64> for &HalfInteger {
    type Output = HalfInteger;

    fn add(self, rhs: i64) -> HalfInteger {
        HalfInteger {
            doubled: &self.doubled + BigInt::from(rhs) * 2,
        }
    }
}

impl Sub<i64> for &HalfInteger {
    type Output = HalfInteger;

    fn sub(self, rhs: i64) -> HalfInteger {
        HalfInteger {
            doubled: &self.doubled - BigInt::from(rhs) * 2,
        }
    }
}

impl Add for &HalfInteger {
    type Output = HalfInteger;

    fn add(self, rhs: &HalfInteger) -> HalfInteger {
        HalfInteger {
            doubled: &self.doubled + &rhs.doubled,
        }
    }
}

impl Sub for &HalfInteger {
    type Output = HalfInteger;

    fn sub(self, rhs: &HalfInteger) -> HalfInteger {
        HalfInteger {
            doubled: &self.doubled - &rhs.doubled,
        }
    }
}

impl Neg for HalfInteger {
    type Output = HalfInteger;

    fn neg(self) -> HalfInteger {
        HalfInteger {
            doubled: -self.doubled,
        }
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", &self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}
