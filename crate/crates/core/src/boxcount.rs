//! Exact solution counts of `Q(x, y) ≡ λ (mod p)` over a box.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::modmath::{count_class_in_interval, first_in_class, PrimeModulus};
use crate::quadform::{QuadraticForm, SearchBox};

/// Largest box side accepted by [`count_naive`].
pub const NAIVE_GUARD: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CountResult {
    pub count: u64,
    /// Solutions in `(x, y)` lexicographic order, when requested.
    pub solutions: Option<Vec<(BigInt, BigInt)>>,
    /// Columns `x` where every `y` solves the congruence. Non-empty only for
    /// degenerate (reducible) instances.
    pub degenerate_columns: Vec<BigInt>,
}

impl CountResult {
    pub fn is_degenerate(&self) -> bool {
        !self.degenerate_columns.is_empty()
    }
}

/// Counts solutions column by column.
///
/// For each `x` the congruence is the polynomial
/// `c·y² + (bx + e)·y + (ax² + dx + f - λ)` in `y`, which has at most two
/// roots mod `p` unless all three coefficients vanish. Each root class is
/// counted inside `[L+1, L+M]` in constant time.
pub fn count_exact(q: &QuadraticForm, lambda: &BigInt, p: &PrimeModulus, bx: &SearchBox, collect: bool) -> CountResult {
    let [a, b, c, d, e, f] = q.coeffs().map(|v| p.reduce(v));
    let lam = p.reduce(lambda);
    let f_lam = p.sub(&f, &lam);
    let two = BigUint::from(2u32);
    let pb = p.to_bigint();
    let ys = bx.y_range();

    let mut out = CountResult {
        solutions: collect.then(Vec::new),
        ..Default::default()
    };
    let mut roots: Vec<BigUint> = Vec::with_capacity(2);
    let mut x = &bx.k + 1;
    for _ in 0..bx.m {
        let xr = p.reduce(&x);
        let lin = p.add(&p.mul(&b, &xr), &e);
        let cst = p.add(&p.mul(&p.add(&p.mul(&a, &xr), &d), &xr), &f_lam);
        roots.clear();
        if !c.is_zero() {
            // y = (-lin ± sqrt(lin² - 4c·cst)) / 2c
            let disc = p.sub(&p.mul(&lin, &lin), &p.mul(&p.mul(&two, &two), &p.mul(&c, &cst)));
            let inv2c = p.inv(&p.mul(&two, &c)).expect("c is non-zero mod p");
            let neg_lin = p.neg(&lin);
            for r in p.sqrt(&disc) {
                roots.push(p.mul(&p.add(&neg_lin, &r), &inv2c));
            }
        } else if !lin.is_zero() {
            let inv = p.inv(&lin).expect("non-zero");
            roots.push(p.mul(&p.neg(&cst), &inv));
        } else if cst.is_zero() {
            out.degenerate_columns.push(x.clone());
            out.count += bx.m;
            if let Some(sol) = out.solutions.as_mut() {
                let mut y = ys.lo.clone();
                while y <= ys.hi {
                    sol.push((x.clone(), y.clone()));
                    y += 1;
                }
            }
        }
        roots.sort();
        for r in &roots {
            let res = p.residue(&BigInt::from(r.clone()));
            let n = count_class_in_interval(&res, &ys.lo, &ys.hi)
                .expect("box is non-empty")
                .to_u64()
                .expect("count fits u64");
            out.count += n;
            if let Some(sol) = out.solutions.as_mut() {
                let mut y = first_in_class(r, &pb, &ys.lo);
                while y <= ys.hi {
                    sol.push((x.clone(), y.clone()));
                    y += &pb;
                }
            }
        }
        x += 1;
    }
    if let Some(sol) = out.solutions.as_mut() {
        sol.sort();
    }
    out
}

/// Double loop over the box, evaluating `Q(x, y) - λ` directly.
pub fn count_naive(q: &QuadraticForm, lambda: &BigInt, p: &PrimeModulus, bx: &SearchBox) -> Result<CountResult> {
    if bx.m > NAIVE_GUARD {
        return Err(Error::GuardExceeded(format!(
            "naive count needs M <= {NAIVE_GUARD}, got {}",
            bx.m
        )));
    }
    let mut out = CountResult {
        solutions: Some(Vec::new()),
        ..Default::default()
    };
    let sol = out.solutions.as_mut().unwrap();
    match p.as_u64().filter(|&w| w < 1 << 31) {
        Some(w) => {
            let w = w as i128;
            let r = |v: &BigInt| v.mod_floor(&BigInt::from(w)).to_i128().unwrap();
            let [a, b, c, d, e, f] = q.coeffs().map(r);
            let lam = r(lambda);
            let (x0, y0) = (r(&bx.k), r(&bx.l));
            for i in 1..=bx.m as i128 {
                let x = (x0 + i) % w;
                let row = ((a * x % w) * x + d * x + f - lam) % w;
                let lin = (b * x + e) % w;
                for j in 1..=bx.m as i128 {
                    let y = (y0 + j) % w;
                    if (row + (lin + c * y) % w * y) % w == 0 {
                        sol.push((&bx.k + i as i64, &bx.l + j as i64));
                    }
                }
            }
        }
        None => {
            let xs = bx.x_range();
            let ys = bx.y_range();
            let mut x = xs.lo.clone();
            while x <= xs.hi {
                let mut y = ys.lo.clone();
                while y <= ys.hi {
                    if p.reduce(&(q.eval(&x, &y) - lambda)).is_zero() {
                        sol.push((x.clone(), y.clone()));
                    }
                    y += 1;
                }
                x += 1;
            }
        }
    }
    out.count = sol.len() as u64;
    Ok(out)
}
