//! Euclidean arc length along `x² - D·y² = n`.
//!
//! Ellipses (`D < 0`) use `x = √n·cos θ`, `y = √(n/|D|)·sin θ`. Hyperbola
//! branches use `x = ±√n·cosh s`, `y = √(n/D)·sinh s` for `n > 0` and
//! `y = ±√(|n|/D)·cosh s`, `x = √|n|·sinh s` for `n < 0`.

use std::f64::consts::TAU;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::LatticePoint;
use crate::error::{Error, Result};

const REL_TOL: f64 = 1e-9;
const PIECES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Branch {
    Ellipse,
    /// Hyperbola branch, identified by the sign of the coordinate that
    /// never vanishes on it.
    Hyperbola(i8),
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Conic {
    d: f64,
    n: f64,
    ellipse: bool,
    positive: bool,
}

impl Conic {
    pub(crate) fn new(d: i64, n: &BigInt) -> Result<Self> {
        if d == 0 || n.is_zero() {
            return Err(Error::NotApplicable("arc length needs D != 0 and n != 0"));
        }
        if d < 0 && n.is_negative() {
            return Err(Error::NotApplicable("x² + |D|·y² = n has no real points for n < 0"));
        }
        Ok(Conic {
            d: d as f64,
            n: n.to_f64().expect("finite"),
            ellipse: d < 0,
            positive: n.is_positive(),
        })
    }

    /// Branch and parameter value of a point on the conic.
    pub(crate) fn locate(&self, p: &LatticePoint) -> (Branch, f64) {
        let x = p.x.to_f64().expect("finite");
        let y = p.y.to_f64().expect("finite");
        if self.ellipse {
            return (Branch::Ellipse, (y * (-self.d).sqrt()).atan2(x));
        }
        if self.positive {
            let s = (y * self.d.sqrt() / self.n.sqrt()).asinh();
            (Branch::Hyperbola(if p.x.is_negative() { -1 } else { 1 }), s)
        } else {
            let s = (x / (-self.n).sqrt()).asinh();
            (Branch::Hyperbola(if p.y.is_negative() { -1 } else { 1 }), s)
        }
    }

    fn speed(&self, s: f64) -> f64 {
        let n = self.n.abs();
        let d = self.d.abs();
        if self.ellipse {
            let (sn, cs) = s.sin_cos();
            (n * sn * sn + n / d * cs * cs).sqrt()
        } else if self.positive {
            let (sh, ch) = (s.sinh(), s.cosh());
            (n * sh * sh + n / d * ch * ch).sqrt()
        } else {
            let (sh, ch) = (s.sinh(), s.cosh());
            (n * ch * ch + n / d * sh * sh).sqrt()
        }
    }

    /// Length of the parameter range `[s1, s2]`.
    pub(crate) fn length(&self, s1: f64, s2: f64) -> f64 {
        let (a, b) = if s1 <= s2 { (s1, s2) } else { (s2, s1) };
        integrate(|s| self.speed(s), a, b)
    }

    /// Length of the counter-clockwise ellipse arc from `t1` to `t2`.
    pub(crate) fn ccw_length(&self, t1: f64, t2: f64) -> f64 {
        let sweep = (t2 - t1).rem_euclid(TAU);
        self.length(t1, t1 + sweep)
    }

    pub(crate) fn perimeter(&self) -> f64 {
        self.length(0.0, TAU)
    }
}

fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adaptive<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(fa, flm, fm, a, m);
    let right = simpson(fm, frm, fb, m, b);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    adaptive(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
        + adaptive(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
}

fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let h = (b - a) / PIECES as f64;
    let mut pieces = Vec::with_capacity(PIECES);
    let mut coarse = 0.0;
    for i in 0..PIECES {
        let lo = a + h * i as f64;
        let hi = if i + 1 == PIECES { b } else { lo + h };
        let (fa, fm, fb) = (f(lo), f(0.5 * (lo + hi)), f(hi));
        let s = simpson(fa, fm, fb, lo, hi);
        coarse += s;
        pieces.push((lo, hi, fa, fm, fb, s));
    }
    let tol = REL_TOL * 0.1 * coarse.abs() / PIECES as f64;
    pieces
        .into_iter()
        .map(|(lo, hi, fa, fm, fb, s)| adaptive(&f, lo, hi, fa, fm, fb, s, tol, 48))
        .sum()
}

pub fn chord_length(p1: &LatticePoint, p2: &LatticePoint) -> f64 {
    let dx = (&p1.x - &p2.x).to_f64().expect("finite");
    let dy = (&p1.y - &p2.y).to_f64().expect("finite");
    dx.hypot(dy)
}

/// Arc length between two points on the same branch of `x² - D·y² = n`.
/// On an ellipse the shorter of the two arcs is measured.
pub fn arc_length(d: i64, n: &BigInt, p1: &LatticePoint, p2: &LatticePoint) -> Result<f64> {
    let conic = Conic::new(d, n)?;
    for p in [p1, p2] {
        if &p.norm(d) != n {
            return Err(Error::NotOnConic {
                x: p.x.clone(),
                y: p.y.clone(),
            });
        }
    }
    let (b1, s1) = conic.locate(p1);
    let (b2, s2) = conic.locate(p2);
    if b1 != b2 {
        return Err(Error::DifferentBranch);
    }
    if p1 == p2 {
        return Ok(0.0);
    }
    if conic.ellipse {
        let one_way = conic.ccw_length(s1, s2);
        Ok(one_way.min(conic.perimeter() - one_way))
    } else {
        Ok(conic.length(s1, s2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(1.0)
    }

    #[test]
    fn circle_arcs() {
        let n = BigInt::from(25);
        let a = arc_length(-1, &n, &LatticePoint::new(3, 4), &LatticePoint::new(4, 3)).unwrap();
        assert!(close(a, 5.0 * (24.0f64 / 25.0).acos(), 1e-9), "{a}");
        let a = arc_length(-1, &n, &LatticePoint::new(3, 4), &LatticePoint::new(5, 0)).unwrap();
        assert!(close(a, 5.0 * (15.0f64 / 25.0).acos(), 1e-9), "{a}");
        let a = arc_length(-1, &n, &LatticePoint::new(5, 0), &LatticePoint::new(-5, 0)).unwrap();
        assert!(close(a, 5.0 * std::f64::consts::PI, 1e-9));
    }

    #[test]
    fn ellipse_perimeter_against_series() {
        // x² + 4y² = 4: semi-axes 2 and 1
        let c = Conic::new(-4, &BigInt::from(4)).unwrap();
        // Ramanujan's second approximation is accurate to ~1e-10 here
        let (a, b) = (2.0f64, 1.0f64);
        let h = ((a - b) / (a + b)).powi(2);
        let approx = std::f64::consts::PI * (a + b) * (1.0 + 3.0 * h / (10.0 + (4.0 - 3.0 * h).sqrt()));
        assert!(close(c.perimeter(), approx, 1e-8));
    }

    #[test]
    fn hyperbola_arc_against_polyline() {
        // x² - 2y² = 1 from (1, 0) to (3, 2)
        let n = BigInt::from(1);
        let a = arc_length(2, &n, &LatticePoint::new(1, 0), &LatticePoint::new(3, 2)).unwrap();
        let steps = 200_000;
        let mut len = 0.0;
        let mut prev = (1.0f64, 0.0f64);
        for i in 1..=steps {
            let y = 2.0 * i as f64 / steps as f64;
            let x = (1.0 + 2.0 * y * y).sqrt();
            len += (x - prev.0).hypot(y - prev.1);
            prev = (x, y);
        }
        assert!(close(a, len, 1e-8), "{a} vs {len}");
    }

    #[test]
    fn negative_n_branches() {
        // x² - 2y² = -1: (1, 1) and (7, 5) on the upper branch
        let n = BigInt::from(-1);
        let a = arc_length(2, &n, &LatticePoint::new(1, 1), &LatticePoint::new(7, 5)).unwrap();
        assert!(a > chord_length(&LatticePoint::new(1, 1), &LatticePoint::new(7, 5)));
        assert_eq!(
            arc_length(2, &n, &LatticePoint::new(1, 1), &LatticePoint::new(1, -1)),
            Err(Error::DifferentBranch)
        );
    }

    #[test]
    fn errors() {
        let n = BigInt::from(1);
        assert_eq!(
            arc_length(2, &n, &LatticePoint::new(1, 0), &LatticePoint::new(-1, 0)),
            Err(Error::DifferentBranch)
        );
        assert!(matches!(
            arc_length(2, &n, &LatticePoint::new(1, 0), &LatticePoint::new(2, 1)),
            Err(Error::NotOnConic { .. })
        ));
    }
}
