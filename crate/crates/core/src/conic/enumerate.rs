use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{Signed, ToPrimitive, Zero};

use super::{exact_sqrt, fundamental_solution, require_norm_d, sign_sqrt, LatticePoint, PellUnit, SCAN_GUARD};
use crate::error::{Error, Result};
use crate::interval::Interval;

/// Restricts a search to points with `x ≡ x_res` and `y ≡ y_res (mod t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFilter {
    pub t: BigInt,
    pub x_res: BigInt,
    pub y_res: BigInt,
}

impl ClassFilter {
    pub fn accepts(&self, p: &LatticePoint) -> bool {
        (&p.x - &self.x_res).is_multiple_of(&self.t) && (&p.y - &self.y_res).is_multiple_of(&self.t)
    }
}

fn first_member(lo: &BigInt, res: &BigInt, t: &BigInt) -> BigInt {
    lo + (res - lo).mod_floor(t)
}

fn members(iv: &Interval, res: &BigInt, t: &BigInt) -> BigInt {
    if iv.is_empty() {
        return BigInt::zero();
    }
    let first = first_member(&iv.lo, res, t);
    if first > iv.hi {
        BigInt::zero()
    } else {
        (&iv.hi - &first) / t + 1
    }
}

fn clip(iv: &Interval, bound: BigInt) -> Interval {
    Interval {
        lo: iv.lo.clone().max(-&bound),
        hi: iv.hi.clone().min(bound),
    }
}

/// Points of `x² - d·y² = n` in `xs × ys` (and in `class`, if given) by
/// walking the shorter side and testing the other coordinate for an exact
/// square root.
pub fn scan_with_class(
    d: i64,
    n: &BigInt,
    xs: &Interval,
    ys: &Interval,
    class: Option<&ClassFilter>,
) -> Result<Vec<LatticePoint>> {
    assert!(d != 0, "d must be non-zero");
    let (mut xs, mut ys) = (xs.clone(), ys.clone());
    if d < 0 {
        if n.is_negative() {
            return Ok(Vec::new());
        }
        xs = clip(&xs, n.sqrt());
        ys = clip(&ys, (n / BigInt::from(-d)).sqrt());
    }
    if xs.is_empty() || ys.is_empty() {
        return Ok(Vec::new());
    }
    let one = BigInt::from(1);
    let zero = BigInt::zero();
    let (t, xr, yr) = match class {
        Some(c) => (&c.t, &c.x_res, &c.y_res),
        None => (&one, &zero, &zero),
    };
    let cnt_x = members(&xs, xr, t);
    let cnt_y = members(&ys, yr, t);
    let along_y = cnt_y <= cnt_x;
    let steps = if along_y { &cnt_y } else { &cnt_x };
    if *steps > BigInt::from(SCAN_GUARD) {
        return Err(Error::GuardExceeded(format!(
            "scan of {steps} values exceeds {SCAN_GUARD}"
        )));
    }
    let steps = steps.to_u64().unwrap_or(0);
    let in_class = |v: &BigInt, r: &BigInt| (v - r).is_multiple_of(t);

    let mut out = Vec::new();
    let small =
        n.abs().bits() < 62 && xs.abs_max().bits() < 40 && ys.abs_max().bits() < 40 && d.unsigned_abs() < 1 << 20;
    if small {
        let n = n.to_i128().unwrap();
        let d = d as i128;
        let t = t.to_i128().unwrap();
        let (xlo, xhi) = (xs.lo.to_i128().unwrap(), xs.hi.to_i128().unwrap());
        let (ylo, yhi) = (ys.lo.to_i128().unwrap(), ys.hi.to_i128().unwrap());
        let (xr, yr) = (xr.to_i128().unwrap(), yr.to_i128().unwrap());
        let isq = |v: i128| -> Option<i128> {
            if v < 0 {
                return None;
            }
            let s = (v as u128).sqrt() as i128;
            (s * s == v).then_some(s)
        };
        let ok = |v: i128, r: i128| (v - r).rem_euclid(t) == 0;
        if along_y {
            let mut y = ylo + (yr - ylo).rem_euclid(t);
            for _ in 0..steps {
                if let Some(s) = isq(n + d * y * y) {
                    for x in [-s, s] {
                        if xlo <= x && x <= xhi && ok(x, xr) {
                            out.push(LatticePoint::new(x as i64, y as i64));
                        }
                        if s == 0 {
                            break;
                        }
                    }
                }
                y += t;
            }
        } else {
            let mut x = xlo + (xr - xlo).rem_euclid(t);
            for _ in 0..steps {
                let r = x * x - n;
                if r % d == 0 {
                    if let Some(s) = isq(r / d) {
                        for y in [-s, s] {
                            if ylo <= y && y <= yhi && ok(y, yr) {
                                out.push(LatticePoint::new(x as i64, y as i64));
                            }
                            if s == 0 {
                                break;
                            }
                        }
                    }
                }
                x += t;
            }
        }
    } else {
        let bd = BigInt::from(d);
        if along_y {
            let mut y = first_member(&ys.lo, yr, t);
            for _ in 0..steps {
                if let Some(s) = exact_sqrt(&(n + &bd * &y * &y)) {
                    let zero_root = s.is_zero();
                    for x in [-&s, s] {
                        if xs.contains(&x) && in_class(&x, xr) {
                            out.push(LatticePoint { x, y: y.clone() });
                        }
                        if zero_root {
                            break;
                        }
                    }
                }
                y += t;
            }
        } else {
            let mut x = first_member(&xs.lo, xr, t);
            for _ in 0..steps {
                let r = &x * &x - n;
                if r.is_multiple_of(&bd) {
                    if let Some(s) = exact_sqrt(&(r / &bd)) {
                        let zero_root = s.is_zero();
                        for y in [-&s, s] {
                            if ys.contains(&y) && in_class(&y, yr) {
                                out.push(LatticePoint { x: x.clone(), y });
                            }
                            if zero_root {
                                break;
                            }
                        }
                    }
                }
                x += t;
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All integer points of `x² - D·y² = n` in `xs × ys` by direct scan.
pub fn enumerate_in_box_scan(d: i64, n: &BigInt, xs: &Interval, ys: &Interval) -> Result<Vec<LatticePoint>> {
    require_norm_d(d)?;
    scan_with_class(d, n, xs, ys, None)
}

/// `Y* = ⌈√(|n|·(u0 + 1) / 2D)⌉`: every orbit of solutions of
/// `x² - D·y² = n` under the unit group meets `0 <= y <= Y*` up to sign.
pub fn orbit_search_bound(unit: &PellUnit, n: &BigInt) -> BigInt {
    let num: BigInt = n.abs() * (&unit.u0 + BigInt::from(1));
    let den = BigInt::from(2 * unit.d);
    let q = Integer::div_ceil(&num, &den);
    let s = q.sqrt();
    if &s * &s == q {
        s
    } else {
        s + 1
    }
}

pub(crate) fn orbit_representatives(unit: &PellUnit, n: &BigInt) -> Result<Vec<LatticePoint>> {
    let ystar = orbit_search_bound(unit, n);
    if ystar > BigInt::from(SCAN_GUARD) {
        return Err(Error::GuardExceeded(format!(
            "orbit representative bound {ystar} exceeds {SCAN_GUARD}"
        )));
    }
    let ys = Interval::new(0, ystar.clone());
    let xb = (n.abs() + BigInt::from(unit.d) * &ystar * &ystar).sqrt() + 1;
    let xs = Interval::new(-&xb, xb);
    let base = scan_with_class(unit.d, n, &xs, &ys, None)?;
    let mut reps = BTreeSet::new();
    for p in base {
        reps.insert(LatticePoint {
            x: p.x.clone(),
            y: -&p.y,
        });
        reps.insert(p);
    }
    Ok(reps.into_iter().collect())
}

/// All integer points of `x² - D·y² = n` in `xs × ys`, for `D >= 2`, by
/// propagating orbit representatives with the fundamental unit.
///
/// Multiplying by the unit scales `A = x + y√D` by `ε > 1` and
/// `B = x - y√D` by `1/ε`. A point inside the box has
/// `|A|, |B| <= Xmax + Ymax·√D`, so each walk stops once that bound is
/// crossed.
pub fn enumerate_in_box_orbit(d: i64, n: &BigInt, xs: &Interval, ys: &Interval) -> Result<Vec<LatticePoint>> {
    require_norm_d(d)?;
    if d < 2 {
        return Err(Error::DTooSmall(d));
    }
    if n.is_zero() {
        // only the origin, D being a non-square
        let o = LatticePoint::new(0, 0);
        let zero = BigInt::zero();
        return Ok(if xs.contains(&zero) && ys.contains(&zero) {
            vec![o]
        } else {
            vec![]
        });
    }
    let unit = fundamental_solution(d)?;
    orbit_points(&unit, n, xs, ys)
}

pub(crate) fn orbit_points(unit: &PellUnit, n: &BigInt, xs: &Interval, ys: &Interval) -> Result<Vec<LatticePoint>> {
    if xs.is_empty() || ys.is_empty() {
        return Ok(Vec::new());
    }
    let d = unit.d;
    let xmax = xs.abs_max();
    let ymax = ys.abs_max();
    // |p + q√D| > Xmax + Ymax√D
    let beyond = |p: &BigInt, q: &BigInt| {
        let s = sign_sqrt(p, q, d);
        let (p, q) = if s.is_lt() { (-p, -q) } else { (p.clone(), q.clone()) };
        sign_sqrt(&(p - &xmax), &(q - &ymax), d).is_gt()
    };
    let mut found = BTreeSet::new();
    for rep in orbit_representatives(unit, n)? {
        let mut p = rep.clone();
        while !beyond(&p.x, &p.y) {
            if xs.contains(&p.x) && ys.contains(&p.y) {
                found.insert(p.clone());
            }
            p = unit.forward(&p);
        }
        let mut p = unit.backward(&rep);
        while !beyond(&p.x, &-&p.y) {
            if xs.contains(&p.x) && ys.contains(&p.y) {
                found.insert(p.clone());
            }
            p = unit.backward(&p);
        }
    }
    Ok(found.into_iter().collect())
}
