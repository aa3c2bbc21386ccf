//! Arithmetic modulo an odd prime.
//!
//! Residues are always kept in `[0, p-1]`. Signed representatives in
//! `[-(p-1)/2, (p-1)/2]` are only produced by [`PrimeModulus::signed`].
//! When `p` fits in a machine word every operation runs on `u64` with `u128`
//! intermediates; otherwise it falls back to `BigUint`.

mod prime;

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use prime::{is_prime, is_prime_u64, next_prime_u64};
pub(crate) use prime::{mul_mod, pow_mod};

/// An odd prime modulus.
#[derive(Clone, PartialEq, Eq)]
pub struct PrimeModulus {
    p: Arc<BigUint>,
    word: Option<u64>,
}

impl fmt::Debug for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PrimeModulus({})", self.p)
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.p.fmt(f)
    }
}

impl PrimeModulus {
    pub fn new(p: impl Into<BigInt>) -> Result<Self> {
        let p: BigInt = p.into();
        let Some(u) = p.to_biguint() else {
            return Err(Error::NotOddPrime(p));
        };
        if !u.bit(0) || !is_prime(&u) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(PrimeModulus {
            word: u.to_u64(),
            p: Arc::new(u),
        })
    }

    pub fn value(&self) -> &BigUint {
        &self.p
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from_biguint(Sign::Plus, (*self.p).clone())
    }

    /// The modulus as a machine word, when it fits.
    pub fn as_u64(&self) -> Option<u64> {
        self.word
    }

    pub fn residue(&self, a: &BigInt) -> Residue {
        Residue {
            value: self.reduce(a),
            modulus: self.clone(),
        }
    }

    pub fn residue_u64(&self, a: u64) -> Residue {
        self.residue(&BigInt::from(a))
    }

    /// Canonical representative of `a` in `[0, p-1]`.
    pub fn reduce(&self, a: &BigInt) -> BigUint {
        let p = self.to_bigint();
        a.mod_floor(&p).to_biguint().expect("mod_floor is non-negative")
    }

    /// Signed representative in `[-(p-1)/2, (p-1)/2]`.
    pub fn signed(&self, v: &BigUint) -> BigInt {
        let v = v % &*self.p;
        let half = &*self.p >> 1u32;
        if v > half {
            BigInt::from(v) - self.to_bigint()
        } else {
            BigInt::from(v)
        }
    }

    pub fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        let s = a + b;
        if s >= *self.p {
            s - &*self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if a >= b {
            a - b
        } else {
            &*self.p - (b - a)
        }
    }

    pub fn neg(&self, a: &BigUint) -> BigUint {
        if a.is_zero() {
            BigUint::zero()
        } else {
            &*self.p - a
        }
    }

    pub fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        match (self.word, a.to_u64(), b.to_u64()) {
            (Some(p), Some(x), Some(y)) => BigUint::from(mul_mod(x, y, p)),
            _ => a * b % &*self.p,
        }
    }

    pub fn pow(&self, a: &BigUint, e: &BigUint) -> BigUint {
        match (self.word, a.to_u64(), e.to_u64()) {
            (Some(p), Some(x), Some(k)) => BigUint::from(pow_mod(x, k, p)),
            _ => a.modpow(e, &self.p),
        }
    }

    pub fn inv(&self, a: &BigUint) -> Result<BigUint> {
        if (a % &*self.p).is_zero() {
            return Err(Error::ZeroInverse);
        }
        if let (Some(p), Some(x)) = (self.word, a.to_u64()) {
            let g = (x as i128).extended_gcd(&(p as i128));
            debug_assert_eq!(g.gcd, 1);
            return Ok(BigUint::from(g.x.rem_euclid(p as i128) as u64));
        }
        Ok(self.pow(a, &(&*self.p - 2u32)))
    }

    /// Euler's criterion: `a^((p-1)/2)` mapped to {-1, 0, 1}.
    pub fn legendre(&self, a: &BigUint) -> i8 {
        let a = a % &*self.p;
        if a.is_zero() {
            return 0;
        }
        let e = (&*self.p - 1u32) >> 1u32;
        if self.pow(&a, &e).is_one() {
            1
        } else {
            -1
        }
    }

    /// All square roots of `a`, ascending.
    pub fn sqrt(&self, a: &BigUint) -> Vec<BigUint> {
        let a = a % &*self.p;
        if a.is_zero() {
            return vec![BigUint::zero()];
        }
        if self.legendre(&a) != 1 {
            return Vec::new();
        }
        let r = match (self.word, a.to_u64()) {
            (Some(p), Some(x)) => BigUint::from(tonelli_shanks_u64(x, p)),
            _ => self.tonelli_shanks_big(&a),
        };
        let s = self.neg(&r);
        if r < s {
            vec![r, s]
        } else {
            vec![s, r]
        }
    }

    fn tonelli_shanks_big(&self, a: &BigUint) -> BigUint {
        let p = &*self.p;
        let one = BigUint::one();
        let p1 = p - 1u32;
        let s = p1.trailing_zeros().unwrap_or(0);
        let q = &p1 >> s;
        if s == 1 {
            return self.pow(a, &((p + 1u32) >> 2u32));
        }
        let mut z = BigUint::from(2u32);
        while self.legendre(&z) != -1 {
            z += 1u32;
        }
        let mut m = s;
        let mut c = self.pow(&z, &q);
        let mut t = self.pow(a, &q);
        let mut r = self.pow(a, &((&q + 1u32) >> 1u32));
        while t != one {
            let mut i = 0u64;
            let mut tt = t.clone();
            while tt != one {
                tt = self.mul(&tt, &tt);
                i += 1;
            }
            let mut b = c.clone();
            for _ in 0..(m - i - 1) {
                b = self.mul(&b, &b);
            }
            m = i;
            c = self.mul(&b, &b);
            t = self.mul(&t, &c);
            r = self.mul(&r, &b);
        }
        r
    }
}

/// Tonelli–Shanks for a quadratic residue `a` modulo a word-sized odd prime.
/// The non-residue search scans 2, 3, 4, ... so results are reproducible.
pub(crate) fn tonelli_shanks_u64(a: u64, p: u64) -> u64 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    let p1 = p - 1;
    let s = p1.trailing_zeros();
    let q = p1 >> s;
    if s == 1 {
        return pow_mod(a, (p + 1) / 4, p);
    }
    let mut z = 2u64;
    while pow_mod(z, p1 / 2, p) != p1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let mut b = c;
        for _ in 0..(m - i - 1) {
            b = mul_mod(b, b, p);
        }
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    r
}

/// A residue class modulo an odd prime.
#[derive(Clone, PartialEq, Eq)]
pub struct Residue {
    value: BigUint,
    modulus: PrimeModulus,
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Residue {
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn modulus(&self) -> &PrimeModulus {
        &self.modulus
    }

    pub fn signed(&self) -> BigInt {
        self.modulus.signed(&self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn with_value(&self, value: BigUint) -> Residue {
        Residue {
            value,
            modulus: self.modulus.clone(),
        }
    }
}

pub fn mod_inverse(a: &Residue) -> Result<Residue> {
    let v = a.modulus.inv(&a.value)?;
    Ok(a.with_value(v))
}

pub fn legendre(a: &Residue) -> i8 {
    a.modulus.legendre(&a.value)
}

/// Square roots of `a`: empty, `{0}`, or two distinct roots `r < p - r`.
pub fn sqrt_mod(a: &Residue) -> Vec<Residue> {
    a.modulus.sqrt(&a.value).into_iter().map(|v| a.with_value(v)).collect()
}

/// Number of integers `n` in `[lo, hi]` with `n ≡ r (mod p)`.
pub fn count_class_in_interval(r: &Residue, lo: &BigInt, hi: &BigInt) -> Result<BigUint> {
    if lo > hi {
        return Err(Error::EmptyInterval {
            lo: lo.clone(),
            hi: hi.clone(),
        });
    }
    let p = r.modulus.to_bigint();
    let rv: BigInt = BigInt::from(r.value.clone());
    let upper = (hi - &rv).div_floor(&p);
    let lower = Integer::div_floor(&(lo - BigInt::one() - &rv), &p);
    Ok((upper - lower).to_biguint().expect("count is non-negative"))
}

/// Smallest integer `>= lo` congruent to `r` modulo `p`.
pub(crate) fn first_in_class(r: &BigUint, p: &BigInt, lo: &BigInt) -> BigInt {
    let r = BigInt::from(r.clone());
    lo + (&r - lo).mod_floor(p)
}
