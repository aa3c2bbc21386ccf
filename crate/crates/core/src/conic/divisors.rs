//! Integer factorization (trial division, then Pollard–Brent rho) and the
//! divisor-pair solver for `x·y = n`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LatticePoint;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::modmath::is_prime;

const TRIAL_LIMIT: u64 = 10_000;
const RHO_ITERATIONS: u64 = 1 << 22;

fn rho(n: &BigUint, c: u64) -> Option<BigUint> {
    let c = BigUint::from(c);
    let f = |v: &BigUint| (v * v + &c) % n;
    let mut y = BigUint::from(2u32);
    let mut x = y.clone();
    let mut g = BigUint::one();
    let mut r = 1u64;
    let mut q = BigUint::one();
    let mut ys = y.clone();
    let m = 64u64;
    let mut spent = 0u64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..m.min(r - k) {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = q * diff % n;
            }
            g = q.gcd(n);
            k += m;
        }
        r *= 2;
        spent += r;
        if spent > RHO_ITERATIONS {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = f(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}

fn split(n: BigUint, out: &mut BTreeMap<BigUint, u32>) -> Result<()> {
    if n.is_one() {
        return Ok(());
    }
    if is_prime(&n) {
        *out.entry(n).or_insert(0) += 1;
        return Ok(());
    }
    for c in 1..64u64 {
        if let Some(g) = rho(&n, c) {
            let rest = &n / &g;
            split(g, out)?;
            return split(rest, out);
        }
    }
    Err(Error::FactorizationTimeout(BigInt::from(n)))
}

/// Prime factorization of `n > 0` as ascending `(prime, exponent)` pairs.
pub fn factorize(n: &BigUint) -> Result<Vec<(BigUint, u32)>> {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut out = BTreeMap::new();
    let mut rest = n.clone();
    let mut q = 2u64;
    while q <= TRIAL_LIMIT && BigUint::from(q) * q <= rest {
        let mut e = 0;
        while (&rest % q).is_zero() {
            rest /= q;
            e += 1;
        }
        if e > 0 {
            out.insert(BigUint::from(q), e);
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if BigUint::from(q) * q > rest {
        if !rest.is_one() {
            *out.entry(rest).or_insert(0) += 1;
        }
    } else {
        split(rest, &mut out)?;
    }
    Ok(out.into_iter().collect())
}

/// All positive divisors of `n > 0`, ascending.
pub fn divisors(n: &BigUint) -> Result<Vec<BigUint>> {
    let mut ds = vec![BigUint::one()];
    for (q, e) in factorize(n)? {
        let len = ds.len();
        let mut pw = BigUint::one();
        for _ in 0..e {
            pw *= &q;
            for i in 0..len {
                ds.push(&ds[i] * &pw);
            }
        }
    }
    ds.sort();
    Ok(ds)
}

/// Integer points of `x·y = n` inside `xs × ys`, sorted.
pub fn solve_xy_in_box(n: &BigInt, xs: &Interval, ys: &Interval) -> Result<Vec<LatticePoint>> {
    if n.is_zero() {
        return Err(Error::NotApplicable("x·y = 0 has a line of solutions"));
    }
    let mut out = Vec::new();
    if xs.is_empty() || ys.is_empty() {
        return Ok(out);
    }
    // cheap bail-out when the box cannot contain a divisor pair
    if let (Some(xm), Some(ym)) = (xs.abs_max().to_u128(), ys.abs_max().to_u128()) {
        if let Some(nm) = n.abs().to_u128() {
            if xm.saturating_mul(ym) < nm {
                return Ok(out);
            }
        }
    }
    for d in divisors(n.magnitude())? {
        let d = BigInt::from(d);
        let e = n / &d;
        for (x, y) in [(d.clone(), e.clone()), (-d, -e)] {
            if xs.contains(&x) && ys.contains(&y) {
                out.push(LatticePoint { x, y });
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(n: u64) -> Vec<(u64, u32)> {
        factorize(&BigUint::from(n))
            .unwrap()
            .into_iter()
            .map(|(q, e)| (q.to_u64().unwrap(), e))
            .collect()
    }

    #[test]
    fn factorizations() {
        assert_eq!(fac(1), vec![]);
        assert_eq!(fac(12), vec![(2, 2), (3, 1)]);
        assert_eq!(fac(1_000_003 * 1_000_033), vec![(1_000_003, 1), (1_000_033, 1)]);
        assert_eq!(fac(999_983u64 * 999_983 * 7), vec![(7, 1), (999_983, 2)]);
        let big = BigUint::from(4_294_967_291u64) * BigUint::from(4_294_967_279u64);
        let f = factorize(&big).unwrap();
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn xy_examples() {
        let pts = solve_xy_in_box(&BigInt::from(12), &Interval::new(1, 12), &Interval::new(1, 12)).unwrap();
        assert_eq!(pts.len(), 6);
        let pts = solve_xy_in_box(&BigInt::from(-1), &Interval::new(-1, 1), &Interval::new(-1, 1)).unwrap();
        assert_eq!(pts, vec![LatticePoint::new(-1, 1), LatticePoint::new(1, -1)]);
        let pq = BigInt::from(101 * 103);
        let pts = solve_xy_in_box(&pq, &Interval::new(1, 20_000), &Interval::new(1, 20_000)).unwrap();
        assert_eq!(pts.len(), 4);
        assert!(solve_xy_in_box(&BigInt::zero(), &Interval::new(1, 2), &Interval::new(1, 2)).is_err());
    }

    #[test]
    fn xy_matches_scan() {
        let xs = Interval::new(-40, 35);
        let ys = Interval::new(-30, 50);
        for n in -600i64..=600 {
            if n == 0 {
                continue;
            }
            let got = solve_xy_in_box(&BigInt::from(n), &xs, &ys).unwrap();
            let mut want = Vec::new();
            for x in -40i64..=35 {
                if x != 0 && n % x == 0 && (-30..=50).contains(&(n / x)) {
                    want.push(LatticePoint::new(x, n / x));
                }
            }
            assert_eq!(got, want, "n = {n}");
        }
    }
}
