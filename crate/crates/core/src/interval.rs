use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

/// Closed integer interval `[lo, hi]`. May be empty when `lo > hi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: BigInt,
    pub hi: BigInt,
}

impl Interval {
    pub fn new(lo: impl Into<BigInt>, hi: impl Into<BigInt>) -> Self {
        Interval {
            lo: lo.into(),
            hi: hi.into(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    /// Number of integers in the interval.
    pub fn len(&self) -> BigInt {
        if self.is_empty() {
            BigInt::from(0)
        } else {
            &self.hi - &self.lo + BigInt::one()
        }
    }

    pub fn contains(&self, v: &BigInt) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    /// Largest absolute value attained in the interval.
    pub fn abs_max(&self) -> BigInt {
        self.lo.abs().max(self.hi.abs())
    }

    /// Image of the interval under `v -> scale * v + shift`.
    pub fn affine_image(&self, scale: &BigInt, shift: &BigInt) -> Interval {
        let a = scale * &self.lo + shift;
        let b = scale * &self.hi + shift;
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
