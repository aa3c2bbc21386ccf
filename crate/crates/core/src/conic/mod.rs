//! Lattice points on the conics `x² - D·y² = n` and `x·y = n`.
//!
//! All enumeration is exact integer arithmetic. Floating point only appears
//! in [`arc`], which measures Euclidean arc length between two points.

pub mod arc;
mod divisors;
pub(crate) mod enumerate;
mod lemma;
mod pell;
mod reduce;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};

pub use arc::{arc_length, chord_length};
pub use divisors::{divisors, factorize, solve_xy_in_box};
pub use enumerate::{enumerate_in_box_orbit, enumerate_in_box_scan, orbit_search_bound, scan_with_class, ClassFilter};
pub use lemma::{branch_points, verify_small_arc_lemma, LemmaReport, Violation};
pub use pell::{fundamental_solution, PellUnit};
pub use reduce::{primitive_reduce, SolutionClass};

/// Largest interval length scanned point by point.
pub const SCAN_GUARD: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub x: BigInt,
    pub y: BigInt,
}

impl LatticePoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        LatticePoint {
            x: x.into(),
            y: y.into(),
        }
    }

    /// `x² - d·y²`.
    pub fn norm(&self, d: i64) -> BigInt {
        &self.x * &self.x - BigInt::from(d) * &self.y * &self.y
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

pub fn is_squarefree(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    let m = d.unsigned_abs();
    let mut q = 2u64;
    while q * q <= m {
        if m.is_multiple_of(q * q) {
            return false;
        }
        q += 1;
    }
    true
}

/// Exact square root of a non-negative integer, if it is a perfect square.
pub(crate) fn exact_sqrt(v: &BigInt) -> Option<BigInt> {
    if v.is_negative() {
        return None;
    }
    if let Some(w) = v.to_u128() {
        let s = w.sqrt();
        return (s * s == w).then(|| BigInt::from(s));
    }
    let s = v.sqrt();
    (&s * &s == *v).then_some(s)
}

pub(crate) fn require_norm_d(d: i64) -> Result<()> {
    if d == 0 || d == 1 || !is_squarefree(d) {
        return Err(Error::NotSquareFree(d));
    }
    Ok(())
}

/// Sign of `p + q·√d` for `d > 0`.
pub(crate) fn sign_sqrt(p: &BigInt, q: &BigInt, d: i64) -> std::cmp::Ordering {
    use std::cmp::Ordering::*;
    let sp = p.sign();
    let sq = q.sign();
    use num_bigint::Sign;
    match (sp, sq) {
        (Sign::NoSign, Sign::NoSign) => Equal,
        (Sign::Minus, Sign::Minus) | (Sign::Minus, Sign::NoSign) | (Sign::NoSign, Sign::Minus) => Less,
        (Sign::Plus, Sign::Plus) | (Sign::Plus, Sign::NoSign) | (Sign::NoSign, Sign::Plus) => Greater,
        (Sign::Plus, Sign::Minus) => (p * p).cmp(&(BigInt::from(d) * q * q)),
        (Sign::Minus, Sign::Plus) => (BigInt::from(d) * q * q).cmp(&(p * p)),
    }
}
