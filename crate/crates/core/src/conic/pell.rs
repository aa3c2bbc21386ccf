use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Zero};

use super::{is_squarefree, LatticePoint};
use crate::error::{Error, Result};

/// Minimal positive solution `(u0, v0)` of `u² - D·v² = 1`, i.e. the
/// fundamental unit `u0 + v0·√D` (its inverse is `u0 - v0·√D`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellUnit {
    pub d: i64,
    pub u0: BigInt,
    pub v0: BigInt,
}

impl PellUnit {
    /// Multiplies `x + y√D` by the unit.
    pub fn forward(&self, p: &LatticePoint) -> LatticePoint {
        LatticePoint {
            x: &self.u0 * &p.x + &self.v0 * &p.y * self.d,
            y: &self.v0 * &p.x + &self.u0 * &p.y,
        }
    }

    /// Multiplies `x + y√D` by the inverse unit.
    pub fn backward(&self, p: &LatticePoint) -> LatticePoint {
        LatticePoint {
            x: &self.u0 * &p.x - &self.v0 * &p.y * self.d,
            y: &self.u0 * &p.y - &self.v0 * &p.x,
        }
    }
}

/// Fundamental solution of the Pell equation from the periodic continued
/// fraction of `√D`.
///
/// The expansion runs on the `(m, q, a)` recurrence
/// `m' = a·q - m`, `q' = (D - m'²)/q`, `a' = ⌊(a0 + m')/q'⌋`, and the first
/// convergent `h/k` with `h² - D·k² = 1` is returned.
pub fn fundamental_solution(d: i64) -> Result<PellUnit> {
    if d < 2 {
        return Err(Error::DTooSmall(d));
    }
    if !is_squarefree(d) {
        return Err(Error::NotSquareFree(d));
    }
    let a0 = d.sqrt();
    let (mut m, mut q, mut a) = (0i64, 1i64, a0);
    let (mut h_prev, mut h) = (BigInt::one(), BigInt::from(a0));
    let (mut k_prev, mut k) = (BigInt::zero(), BigInt::one());
    let big_d = BigInt::from(d);
    loop {
        if &h * &h - &big_d * &k * &k == BigInt::one() {
            return Ok(PellUnit { d, u0: h, v0: k });
        }
        m = a * q - m;
        q = (d - m * m) / q;
        a = (a0 + m) / q;
        let h_next = BigInt::from(a) * &h + &h_prev;
        let k_next = BigInt::from(a) * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
    }
}
