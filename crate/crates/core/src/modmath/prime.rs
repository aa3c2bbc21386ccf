//! Primality testing.
//!
//! Inputs below 2^64 use Miller–Rabin with the first twelve prime bases, which
//! is deterministic for that range. Larger inputs run 40 extra rounds with
//! bases drawn from a fixed-seed generator; the answer is reproducible but
//! carries the usual probabilistic caveat (error below 4^-40 per composite).

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const EXTRA_ROUNDS: usize = 40;
const BASE_SEED: u64 = 0x5157_4144_434f_4e47;

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn witness_u64(n: u64, d: u64, s: u32, a: u64) -> bool {
    let a = a % n;
    if a == 0 {
        return true;
    }
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &BASES {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    BASES.iter().all(|&a| witness_u64(n, d, s, a))
}

fn witness_big(n: &BigUint, n1: &BigUint, d: &BigUint, s: u64, a: &BigUint) -> bool {
    let mut x = a.modpow(d, n);
    if x.is_one() || &x == n1 {
        return true;
    }
    for _ in 1..s {
        x = &x * &x % n;
        if &x == n1 {
            return true;
        }
    }
    false
}

/// Smallest prime `>= n`.
pub fn next_prime_u64(n: u64) -> u64 {
    let mut c = n.max(2);
    while !is_prime_u64(c) {
        c += 1;
    }
    c
}

/// Primality test for arbitrary-precision integers.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(w) = n.to_u64() {
        return is_prime_u64(w);
    }
    if !n.bit(0) {
        return false;
    }
    for &q in &BASES {
        if (n % q).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    if !BASES.iter().all(|&a| witness_big(n, &n1, &d, s, &BigUint::from(a))) {
        return false;
    }
    let mut rng = SplitMix64::seed_from_u64(BASE_SEED);
    let span = n - 3u32;
    (0..EXTRA_ROUNDS).all(|_| {
        let mut bytes = [0u8; 32];
        rng.fill_bytes(&mut bytes);
        let a = BigUint::from_bytes_le(&bytes) % &span + 2u32;
        witness_big(n, &n1, &d, s, &a)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn agrees_with_trial_division() {
        for n in 0..20_000u64 {
            assert_eq!(is_prime_u64(n), trial(n), "n = {n}");
        }
    }

    #[test]
    fn strong_pseudoprimes_rejected() {
        // strong pseudoprimes to several small bases
        for n in [2047u64, 1373653, 25326001, 3215031751, 2152302898747, 3474749660383] {
            assert!(!is_prime_u64(n), "{n}");
        }
        assert!(is_prime_u64(18446744073709551557));
        assert!(!is_prime_u64(u64::MAX));
    }

    #[test]
    fn big_inputs() {
        let m89 = (BigUint::one() << 89u32) - 1u32;
        let m127 = (BigUint::one() << 127u32) - 1u32;
        assert!(is_prime(&m89));
        assert!(is_prime(&m127));
        assert!(!is_prime(&(&m89 * &m127)));
        assert!(!is_prime(&((BigUint::one() << 100u32) + 1u32)));
    }
}
