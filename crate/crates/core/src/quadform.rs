//! Binary quadratic polynomials and their reduction to a standard shape.
//!
//! A congruence `Q(x, y) ≡ λ (mod p)` with `Q = ax² + bxy + cy² + dx + ey + f`
//! is rewritten through an injective affine change of variables
//! `(X, Y) = map(x, y)` into one of
//!
//! * `X² - D·Y² ≡ μ` with `D` square-free and `D ∉ {0, 1}` ([`StandardKind::Norm`]),
//! * `X·Y ≡ μ` when `a = c = 0` ([`StandardKind::Hyperbolic`]),
//! * `X² - Y² ≡ μ` when the discriminant is a perfect square ([`StandardKind::Difference`]).
//!
//! Every instance satisfies `F(X, Y) - μ = s·(Q(x, y) - λ)` as an integer
//! identity, where `F` is the standard shape and `s` is the recorded scale.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::modmath::PrimeModulus;

/// `ax² + bxy + cy² + dx + ey + f` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
    e: BigInt,
    f: BigInt,
}

impl QuadraticForm {
    /// Builds a form with non-zero discriminant.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
        e: impl Into<BigInt>,
        f: impl Into<BigInt>,
    ) -> Result<Self> {
        let q = Self::new_unchecked(a, b, c, d, e, f);
        if q.discriminant().is_zero() {
            return Err(Error::DegenerateForm);
        }
        Ok(q)
    }

    /// Builds a form without the discriminant check. Only parabolic sanity
    /// experiments should need this.
    pub fn new_unchecked(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
        e: impl Into<BigInt>,
        f: impl Into<BigInt>,
    ) -> Self {
        QuadraticForm {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
            e: e.into(),
            f: f.into(),
        }
    }

    pub fn from_coeffs(c: [i64; 6]) -> Result<Self> {
        Self::new(c[0], c[1], c[2], c[3], c[4], c[5])
    }

    /// Coefficients in the order `a, b, c, d, e, f`.
    pub fn coeffs(&self) -> [&BigInt; 6] {
        [&self.a, &self.b, &self.c, &self.d, &self.e, &self.f]
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }
    pub fn e(&self) -> &BigInt {
        &self.e
    }
    pub fn f(&self) -> &BigInt {
        &self.f
    }

    pub fn discriminant(&self) -> BigInt {
        discriminant(self)
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.a * x * x + &self.b * x * y + &self.c * y * y + &self.d * x + &self.e * y + &self.f
    }

    /// The form `Q(x + k, y + l)`.
    pub fn translated(&self, k: &BigInt, l: &BigInt) -> QuadraticForm {
        QuadraticForm {
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.clone(),
            d: BigInt::from(2) * &self.a * k + &self.b * l + &self.d,
            e: BigInt::from(2) * &self.c * l + &self.b * k + &self.e,
            f: self.eval(k, l),
        }
    }

    /// The form `Q(y, x)`.
    pub fn swapped(&self) -> QuadraticForm {
        QuadraticForm {
            a: self.c.clone(),
            b: self.b.clone(),
            c: self.a.clone(),
            d: self.e.clone(),
            e: self.d.clone(),
            f: self.f.clone(),
        }
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}x^2 + {}xy + {}y^2 + {}x + {}y + {}",
            self.a, self.b, self.c, self.d, self.e, self.f
        )
    }
}

/// The box `K+1 ≤ x ≤ K+M`, `L+1 ≤ y ≤ L+M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SearchBox {
    pub k: BigInt,
    pub l: BigInt,
    pub m: u64,
}

impl SearchBox {
    pub fn new(k: impl Into<BigInt>, l: impl Into<BigInt>, m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyBox);
        }
        Ok(SearchBox {
            k: k.into(),
            l: l.into(),
            m,
        })
    }

    pub fn x_range(&self) -> Interval {
        Interval::new(&self.k + 1, &self.k + self.m)
    }

    pub fn y_range(&self) -> Interval {
        Interval::new(&self.l + 1, &self.l + self.m)
    }

    pub fn contains(&self, x: &BigInt, y: &BigInt) -> bool {
        self.x_range().contains(x) && self.y_range().contains(y)
    }
}

/// `b² - 4ac`.
pub fn discriminant(q: &QuadraticForm) -> BigInt {
    &q.b * &q.b - BigInt::from(4) * &q.a * &q.c
}

/// Whether `Q - λ` stays irreducible over the algebraic closure of `F_p`.
///
/// For a conic this is equivalent to the associated symmetric matrix
/// `[[2a, b, d], [b, 2c, e], [d, e, 2(f - λ)]]` having full rank mod `p`.
/// A polynomial whose quadratic part vanishes mod `p` is not a conic and is
/// reported as `false`.
pub fn is_absolutely_irreducible(q: &QuadraticForm, lambda: &BigInt, p: &PrimeModulus) -> bool {
    let two = BigInt::from(2);
    let m = [
        [&two * &q.a, q.b.clone(), q.d.clone()],
        [q.b.clone(), &two * &q.c, q.e.clone()],
        [q.d.clone(), q.e.clone(), &two * (&q.f - lambda)],
    ];
    let det = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
    !p.reduce(&det).is_zero()
}

/// Writes `d = d1·k²` with `d1` square-free and `k > 0`, by trial division.
pub fn squarefree_extract(d: &BigInt) -> (BigInt, BigInt) {
    assert!(!d.is_zero(), "square-free part of zero");
    let mut rest: BigUint = d.magnitude().clone();
    let mut core = BigUint::one();
    let mut k = BigUint::one();
    let mut q = 2u64;
    while BigUint::from(q) * q <= rest {
        let mut e = 0u32;
        while (&rest % q).is_zero() {
            rest /= q;
            e += 1;
        }
        k *= BigUint::from(q).pow(e / 2);
        if e % 2 == 1 {
            core *= q;
        }
        q += if q == 2 { 1 } else { 2 };
    }
    core *= rest;
    let sign = if d.is_negative() { -1 } else { 1 };
    (BigInt::from(core) * sign, BigInt::from(k))
}

/// `X = r[0][0]·x + r[0][1]·y + r[0][2]`, `Y = r[1][0]·x + r[1][1]·y + r[1][2]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    pub rows: [[BigInt; 3]; 2],
}

impl AffineMap {
    pub fn identity() -> Self {
        AffineMap {
            rows: [
                [BigInt::one(), BigInt::zero(), BigInt::zero()],
                [BigInt::zero(), BigInt::one(), BigInt::zero()],
            ],
        }
    }

    pub fn apply(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        let [r, s] = &self.rows;
        (&r[0] * x + &r[1] * y + &r[2], &s[0] * x + &s[1] * y + &s[2])
    }

    pub fn determinant(&self) -> BigInt {
        let [r, s] = &self.rows;
        &r[0] * &s[1] - &r[1] * &s[0]
    }

    /// The integer point mapping to `(big_x, big_y)`, if any.
    pub fn preimage(&self, big_x: &BigInt, big_y: &BigInt) -> Option<(BigInt, BigInt)> {
        let [r, s] = &self.rows;
        let det = self.determinant();
        if det.is_zero() {
            return None;
        }
        let u = big_x - &r[2];
        let v = big_y - &s[2];
        let (x, rx) = (&u * &s[1] - &r[1] * &v).div_rem(&det);
        let (y, ry) = (&r[0] * &v - &s[0] * &u).div_rem(&det);
        (rx.is_zero() && ry.is_zero()).then_some((x, y))
    }

    /// Exact hull of the image of `xs × ys` under each coordinate.
    pub fn image_hull(&self, xs: &Interval, ys: &Interval) -> (Interval, Interval) {
        let row = |r: &[BigInt; 3]| {
            let a = [&r[0] * &xs.lo, &r[0] * &xs.hi];
            let b = [&r[1] * &ys.lo, &r[1] * &ys.hi];
            let lo = a.iter().min().unwrap() + b.iter().min().unwrap() + &r[2];
            let hi = a.iter().max().unwrap() + b.iter().max().unwrap() + &r[2];
            Interval { lo, hi }
        };
        (row(&self.rows[0]), row(&self.rows[1]))
    }

    fn scale_row(&mut self, row: usize, k: &BigInt) {
        for v in self.rows[row].iter_mut() {
            *v *= k;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StandardKind {
    /// `X² - D·Y²` with `D` square-free, `D ∉ {0, 1}`.
    Norm { d: BigInt },
    /// `X·Y`.
    Hyperbolic,
    /// `X² - Y²`.
    Difference,
}

impl StandardKind {
    pub fn name(&self) -> &'static str {
        match self {
            StandardKind::Norm { .. } => "norm",
            StandardKind::Hyperbolic => "hyperbolic",
            StandardKind::Difference => "difference",
        }
    }

    /// The `D` entering the size weight `1 + |D|` of the lift: the norm
    /// discriminant, 1 for `X² - Y²` and 0 for `XY`.
    pub fn weight_d(&self) -> BigInt {
        match self {
            StandardKind::Norm { d } => d.clone(),
            StandardKind::Hyperbolic => BigInt::zero(),
            StandardKind::Difference => BigInt::one(),
        }
    }

    /// Evaluates the standard shape at `(X, Y)`.
    pub fn shape(&self, x: &BigInt, y: &BigInt) -> BigInt {
        match self {
            StandardKind::Norm { d } => x * x - d * y * y,
            StandardKind::Hyperbolic => x * y,
            StandardKind::Difference => x * x - y * y,
        }
    }
}

/// A congruence `F(X, Y) ≡ μ (mod p)` equivalent to the original one on the
/// image of the source box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardInstance {
    pub kind: StandardKind,
    pub mu: BigInt,
    pub map: AffineMap,
    pub scale: BigInt,
    pub y_stretch: BigInt,
    pub x_interval: Interval,
    pub y_interval: Interval,
    pub modulus: PrimeModulus,
    pub source_box: SearchBox,
}

impl StandardInstance {
    /// `F(X, Y) - μ`.
    pub fn residual(&self, big_x: &BigInt, big_y: &BigInt) -> BigInt {
        self.kind.shape(big_x, big_y) - &self.mu
    }

    pub fn satisfies(&self, big_x: &BigInt, big_y: &BigInt) -> bool {
        self.modulus.reduce(&self.residual(big_x, big_y)).is_zero()
    }

    /// Maps a transformed point back into the source box, if it comes from it.
    pub fn preimage_in_box(&self, big_x: &BigInt, big_y: &BigInt) -> Option<(BigInt, BigInt)> {
        let (x, y) = self.map.preimage(big_x, big_y)?;
        self.source_box.contains(&x, &y).then_some((x, y))
    }

    /// Checks `F(map(x, y)) - μ = s·(Q(x, y) - λ)` at one point.
    pub fn identity_holds(&self, q: &QuadraticForm, lambda: &BigInt, x: &BigInt, y: &BigInt) -> bool {
        let (big_x, big_y) = self.map.apply(x, y);
        self.residual(&big_x, &big_y) == &self.scale * (q.eval(x, y) - lambda)
    }
}

fn divides(p: &PrimeModulus, v: &BigInt) -> bool {
    p.reduce(v).is_zero()
}

/// The standard shape [`standardize`] produces for `q`, independent of
/// `λ`, `p` and the box.
pub fn standard_kind(q: &QuadraticForm) -> StandardKind {
    let d1 = if q.a.is_zero() && q.c.is_zero() {
        return StandardKind::Hyperbolic;
    } else if q.a.is_one() && q.b.is_zero() && q.d.is_zero() && q.e.is_zero() {
        squarefree_extract(&-&q.c).0
    } else {
        squarefree_extract(&q.discriminant()).0
    };
    if d1.is_one() {
        StandardKind::Difference
    } else {
        StandardKind::Norm { d: d1 }
    }
}

/// Reduces `Q(x, y) ≡ λ (mod p)` on `bx` to a standard instance.
pub fn standardize(q: &QuadraticForm, lambda: &BigInt, p: &PrimeModulus, bx: &SearchBox) -> Result<StandardInstance> {
    let disc = q.discriminant();
    if disc.is_zero() {
        return Err(Error::DegenerateForm);
    }
    if !is_absolutely_irreducible(q, lambda, p) {
        return Err(Error::ReducibleModP);
    }
    let small_prime = || Error::SmallPrime {
        p: p.to_bigint(),
        d: disc.clone(),
    };

    let two = BigInt::from(2);
    let four = BigInt::from(4);
    let already_norm = q.a.is_one() && q.b.is_zero() && q.d.is_zero() && q.e.is_zero();
    if !already_norm && p.to_bigint() <= disc {
        return Err(small_prime());
    }
    let (kind_d, mu, map, scale, stretch) = if q.a.is_zero() && q.c.is_zero() {
        // (bx + e)(by + d) = b·Q - bf + ed
        if divides(p, &q.b) {
            return Err(small_prime());
        }
        let map = AffineMap {
            rows: [
                [q.b.clone(), BigInt::zero(), q.e.clone()],
                [BigInt::zero(), q.b.clone(), q.d.clone()],
            ],
        };
        let mu = &q.b * lambda - &q.b * &q.f + &q.e * &q.d;
        (None, mu, map, q.b.clone(), BigInt::one())
    } else if already_norm {
        // x² + c·y² + f = X² - D1·(kY)² + f with -c = D1·k²
        let (d1, k) = squarefree_extract(&-&q.c);
        if divides(p, &d1) || p.to_bigint() <= d1 {
            return Err(small_prime());
        }
        let mut map = AffineMap::identity();
        map.scale_row(1, &k);
        (Some(d1), lambda - &q.f, map, BigInt::one(), k)
    } else {
        // Complete the square in the variable with a non-zero square
        // coefficient. For a ≠ 0, with Y = 2ax + by + d and
        // X = D·y + (bd - 2ae):
        //   X² - D·Y² = -4aD·Q + (2ae - bd)² + D(4af - d²).
        let (lead, swap) = if !q.a.is_zero() { (&q.a, false) } else { (&q.c, true) };
        if divides(p, &(&two * lead * &disc)) {
            return Err(small_prime());
        }
        let w = if swap { q.swapped() } else { q.clone() };
        let cross = &w.b * &w.d - &two * &w.a * &w.e;
        let mut rows = [
            [BigInt::zero(), disc.clone(), cross.clone()],
            [&two * &w.a, w.b.clone(), w.d.clone()],
        ];
        if swap {
            for r in rows.iter_mut() {
                r.swap(0, 1);
            }
        }
        let mu = &cross * &cross + &disc * (&four * &w.a * &w.f - &w.d * &w.d) - &four * &w.a * &disc * lambda;
        let scale = -&four * &w.a * &disc;
        // X² - D1·k²·Y² = X² - D1·(kY)²
        let (d1, k) = squarefree_extract(&disc);
        let mut map = AffineMap { rows };
        map.scale_row(1, &k);
        (Some(d1), mu, map, scale, k)
    };

    let kind = match kind_d {
        None => StandardKind::Hyperbolic,
        Some(d1) if d1.is_one() => StandardKind::Difference,
        Some(d1) => StandardKind::Norm { d: d1 },
    };
    if divides(p, &scale) || divides(p, &map.determinant()) {
        return Err(small_prime());
    }
    if matches!(kind, StandardKind::Hyperbolic | StandardKind::Difference) && divides(p, &mu) {
        return Err(Error::ReducibleModP);
    }
    let (x_interval, y_interval) = map.image_hull(&bx.x_range(), &bx.y_range());
    Ok(StandardInstance {
        kind,
        mu,
        map,
        scale,
        y_stretch: stretch,
        x_interval,
        y_interval,
        modulus: p.clone(),
        source_box: bx.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn form(c: [i64; 6]) -> QuadraticForm {
        QuadraticForm::from_coeffs(c).unwrap()
    }

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(form([0, 1, 0, 0, 0, 0]).discriminant(), BigInt::from(1));
        assert_eq!(form([1, 0, 1, 0, 0, 0]).discriminant(), BigInt::from(-4));
        assert_eq!(form([1, 0, -12, 0, 0, 0]).discriminant(), BigInt::from(48));
        assert_eq!(
            QuadraticForm::from_coeffs([1, 2, 1, 0, 0, 0]),
            Err(Error::DegenerateForm)
        );
    }

    #[test]
    fn irreducibility_examples() {
        let xy = form([0, 1, 0, 0, 0, 0]);
        assert!(is_absolutely_irreducible(&xy, &BigInt::from(1), &pm(13)));
        assert!(!is_absolutely_irreducible(&xy, &BigInt::from(0), &pm(13)));
        let q = form([1, 0, -3, 0, 0, 0]);
        assert!(!is_absolutely_irreducible(&q, &BigInt::from(0), &pm(11)));
        assert!(is_absolutely_irreducible(&q, &BigInt::from(2), &pm(11)));
        // x² + y² factors as (x + iy)(x - iy) only when λ ≡ 0
        let circle = form([1, 0, 1, 0, 0, 0]);
        assert!(!is_absolutely_irreducible(&circle, &BigInt::from(13), &pm(13)));
    }

    #[test]
    fn squarefree_examples() {
        let sf = |d: i64| {
            let (a, b) = squarefree_extract(&BigInt::from(d));
            (a.to_i64().unwrap(), b.to_i64().unwrap())
        };
        assert_eq!(sf(48), (3, 4));
        assert_eq!(sf(-4), (-1, 2));
        assert_eq!(sf(7), (7, 1));
        assert_eq!(sf(1), (1, 1));
        assert_eq!(sf(-1), (-1, 1));
        assert_eq!(sf(72), (2, 6));
        assert_eq!(sf(-675), (-3, 15));
    }

    #[test]
    fn squarefree_extract_exhaustive() {
        for d in -100_000i64..=100_000 {
            if d == 0 {
                continue;
            }
            let (d1, k) = squarefree_extract(&BigInt::from(d));
            let (d1, k) = (d1.to_i64().unwrap(), k.to_i64().unwrap());
            assert_eq!(d1 * k * k, d);
            let m = d1.unsigned_abs();
            assert!((2u64..).take_while(|q| q * q <= m).all(|q| m % (q * q) != 0), "{d}");
        }
    }

    #[test]
    fn hyperbolic_is_identity_for_xy() {
        let q = form([0, 1, 0, 0, 0, 0]);
        let bx = SearchBox::new(0, 0, 10).unwrap();
        let inst = standardize(&q, &BigInt::from(5), &pm(101), &bx).unwrap();
        assert_eq!(inst.kind, StandardKind::Hyperbolic);
        assert_eq!(inst.mu, BigInt::from(5));
        assert_eq!(inst.map, AffineMap::identity());
        assert_eq!(inst.scale, BigInt::one());
    }

    #[test]
    fn circle_standardizes_to_norm_minus_one() {
        let q = form([1, 0, 1, 0, 0, 0]);
        let bx = SearchBox::new(0, 0, 13).unwrap();
        let inst = standardize(&q, &BigInt::from(1), &pm(13), &bx).unwrap();
        assert_eq!(inst.kind, StandardKind::Norm { d: BigInt::from(-1) });
        assert_eq!(inst.y_stretch, BigInt::one());
    }

    #[test]
    fn x2_minus_3y2_standardizes_to_norm_three() {
        let q = form([1, 0, -3, 0, 0, 0]);
        let bx = SearchBox::new(2, 5, 6).unwrap();
        let inst = standardize(&q, &BigInt::from(2), &pm(11), &bx).unwrap();
        assert_eq!(inst.kind, StandardKind::Norm { d: BigInt::from(3) });
        assert_eq!(inst.mu, BigInt::from(2));
    }

    #[test]
    fn general_branches_satisfy_identity() {
        let p = pm(1_000_003);
        let bx = SearchBox::new(-7, 11, 9).unwrap();
        let lambda = BigInt::from(123_456);
        for c in [
            [2i64, 3, -1, 4, -5, 6],
            [0, 3, 2, 1, 1, -1],
            [3, 1, 0, 0, 2, 5],
            [1, 1, -1, 0, 0, 0],
            [2, 0, -8, 1, 0, 0],
            [1, 0, -4, 0, 0, 3],
            [0, 2, 0, 3, -1, 4],
        ] {
            let q = form(c);
            let inst = standardize(&q, &lambda, &p, &bx).unwrap();
            for x in -20..20 {
                for y in [-9i64, -1, 0, 3, 17] {
                    let (x, y) = (BigInt::from(x), BigInt::from(y));
                    assert!(inst.identity_holds(&q, &lambda, &x, &y), "{c:?}");
                }
            }
        }
    }

    #[test]
    fn stretch_and_kind_from_square_free_part() {
        let p = pm(10_007);
        let bx = SearchBox::new(0, 0, 5).unwrap();
        // D = 1 + 8 = 9 is a square
        let inst = standardize(&form([1, 1, -2, 0, 0, 0]), &BigInt::from(3), &p, &bx).unwrap();
        assert_eq!(inst.kind, StandardKind::Difference);
        assert_eq!(inst.y_stretch, BigInt::from(3));
        // D = 48 = 3·4²
        let inst = standardize(&form([1, 0, -12, 0, 1, 0]), &BigInt::from(3), &p, &bx).unwrap();
        assert_eq!(inst.kind, StandardKind::Norm { d: BigInt::from(3) });
        assert_eq!(inst.y_stretch, BigInt::from(4));
    }

    #[test]
    fn rejects_degenerate_and_reducible() {
        let p = pm(101);
        let bx = SearchBox::new(0, 0, 5).unwrap();
        let parabola = QuadraticForm::new_unchecked(0, 0, 0, 0, 1, 0);
        assert_eq!(
            standardize(&parabola, &BigInt::zero(), &p, &bx),
            Err(Error::DegenerateForm)
        );
        let xy = form([0, 1, 0, 0, 0, 0]);
        assert_eq!(standardize(&xy, &BigInt::zero(), &p, &bx), Err(Error::ReducibleModP));
        assert_eq!(standardize(&xy, &BigInt::from(101), &p, &bx), Err(Error::ReducibleModP));
    }

    #[test]
    fn preimage_inverts_map() {
        let map = AffineMap {
            rows: [
                [BigInt::from(0), BigInt::from(5), BigInt::from(-3)],
                [BigInt::from(4), BigInt::from(1), BigInt::from(2)],
            ],
        };
        for x in -5..5 {
            for y in -5..5 {
                let (x, y) = (BigInt::from(x), BigInt::from(y));
                let (bx, by) = map.apply(&x, &y);
                assert_eq!(map.preimage(&bx, &by), Some((x, y)));
            }
        }
        assert_eq!(map.preimage(&BigInt::from(1), &BigInt::from(0)), None);
    }

    #[test]
    fn translation_matches_eval() {
        let q = form([2, -3, 1, 4, 5, -6]);
        let (k, l) = (BigInt::from(7), BigInt::from(-4));
        let t = q.translated(&k, &l);
        for x in -3..3 {
            for y in -3..3 {
                let (x, y) = (BigInt::from(x), BigInt::from(y));
                assert_eq!(t.eval(&x, &y), q.eval(&(&x + &k), &(&y + &l)));
            }
        }
    }
}
