//! Lifting a standardized congruence to finitely many Diophantine equations.
//!
//! Write the transformed box as `[K'+1, K'+Mx] × [L'+1, L'+My]` and put
//! `X = K' + x`, `Y = L' + y`. For the norm shape the congruence becomes
//! `(x² + 2K'x) - D(y² + 2L'y) ≡ μ` with `μ = mu - (K'² - D·L'²)`.
//! Multiplying by the pigeonhole multiplier `t` (with `tK' ≡ k0`,
//! `tL' ≡ ℓ0`, both small) gives an integer identity
//!
//! ```text
//! t·x² + 2k0·x - D(t·y² + 2ℓ0·y) = μ0 + p·z,      μ0 ≡ t·μ
//! (tx + k0)² - D(ty + ℓ0)² = t(μ0 + p·z) + k0² - D·ℓ0² = n_z
//! ```
//!
//! and the left side is small, so only a short range of `z` occurs. The
//! product shape `XY` lifts the same way to
//! `(tx + k0)(ty + ℓ0) = t(μ0 + p·z) + k0·ℓ0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::conic::{
    fundamental_solution, orbit_search_bound, scan_with_class, solve_xy_in_box, ClassFilter, LatticePoint, PellUnit,
};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::modmath::PrimeModulus;
use crate::quadform::{StandardInstance, StandardKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `M < p^(1/4) / (4·(1+|D|)^(3/4))`: only `z = 0` survives.
    SmallM,
    LargeM,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::SmallM => "SmallM",
            Regime::LargeM => "LargeM",
        }
    }
}

/// `t ≤ T²` with `tK ≡ k0`, `tL ≡ ℓ0 (mod p)` and `|k0|, |ℓ0| < p/T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PigeonholeData {
    pub big_t: u64,
    pub t: u64,
    pub k0: BigInt,
    pub l0: BigInt,
    pub modulus: PrimeModulus,
}

impl PigeonholeData {
    /// Checks the defining congruences and size bounds against `(K, L)`.
    pub fn is_valid_for(&self, k: &BigInt, l: &BigInt) -> bool {
        let p = &self.modulus;
        let pb = p.to_bigint();
        let t = BigInt::from(self.t);
        let tt = BigInt::from(self.big_t);
        self.t >= 1
            && (self.t as u128) <= (self.big_t as u128) * (self.big_t as u128)
            && p.reduce(&(&t * k - &self.k0)).is_zero()
            && p.reduce(&(&t * l - &self.l0)).is_zero()
            && self.k0.abs() * &tt < pb
            && self.l0.abs() * &tt < pb
    }
}

/// `1 + |D|`.
fn weight(d: &BigInt) -> BigInt {
    d.abs() + 1
}

pub fn classify_regime(m: u64, p: &PrimeModulus, d: &BigInt) -> Regime {
    let m4 = BigInt::from(m).pow(4);
    if BigInt::from(256) * m4 * weight(d).pow(3) < p.to_bigint() {
        Regime::SmallM
    } else {
        Regime::LargeM
    }
}

/// Picks `T = 8(1+|D|)M` when `M` is small and `T = ⌈(p/M)^(1/3)⌉`
/// otherwise, never below 2.
pub fn choose_t(m: u64, p: &PrimeModulus, d: &BigInt) -> Result<(u64, Regime)> {
    assert!(m >= 1, "box side must be positive");
    let regime = classify_regime(m, p, d);
    let big_t = match regime {
        Regime::SmallM => BigInt::from(8) * weight(d) * m,
        Regime::LargeM => {
            // smallest T with T³·M >= p
            let pb = p.to_bigint();
            let mb = BigInt::from(m);
            let mut t = (&pb / &mb).cbrt();
            while &t * &t * &t * &mb < pb {
                t += 1;
            }
            while t > BigInt::one() && (&t - BigInt::one()).pow(3u32) * &mb >= pb {
                t -= 1;
            }
            t
        }
    };
    let big_t = big_t.max(BigInt::from(2));
    if big_t >= p.to_bigint() {
        return Err(Error::RegimeOverflow { t: big_t });
    }
    let t = big_t
        .to_u64()
        .ok_or_else(|| Error::GuardExceeded(format!("T = {big_t} does not fit a machine word")))?;
    Ok((t, regime))
}

/// Smallest `t` in `[1, T²]` with both `tK` and `tL` within `p/T` of a
/// multiple of `p`.
pub fn find_pigeonhole(k: &BigInt, l: &BigInt, p: &PrimeModulus, big_t: u64) -> Result<PigeonholeData> {
    let pb = p.to_bigint();
    if big_t == 0 || BigInt::from(big_t) >= pb {
        return Err(Error::PigeonholeNotFound(big_t));
    }
    let tt = BigInt::from(big_t);
    let kr = BigInt::from(p.reduce(k));
    let lr = BigInt::from(p.reduce(l));
    let mut tk = BigInt::zero();
    let mut tl = BigInt::zero();
    let limit = (big_t as u128) * (big_t as u128);
    let mut t = 0u128;
    while t < limit {
        t += 1;
        tk += &kr;
        if tk >= pb {
            tk -= &pb;
        }
        tl += &lr;
        if tl >= pb {
            tl -= &pb;
        }
        let k0 = p.signed(tk.magnitude());
        if k0.abs() * &tt >= pb {
            continue;
        }
        let l0 = p.signed(tl.magnitude());
        if l0.abs() * &tt >= pb {
            continue;
        }
        return Ok(PigeonholeData {
            big_t,
            t: t as u64,
            k0,
            l0,
            modulus: p.clone(),
        });
    }
    Err(Error::PigeonholeNotFound(big_t))
}

/// Left-hand shape of the lifted equation in `u = tx + k0`, `v = ty + ℓ0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftShape {
    /// `u² - D·v²`.
    Norm { d: i64 },
    /// `u² - v²`.
    Difference,
    /// `u·v`.
    Product,
}

impl LiftShape {
    pub fn eval(&self, u: &BigInt, v: &BigInt) -> BigInt {
        match self {
            LiftShape::Norm { d } => u * u - BigInt::from(*d) * v * v,
            LiftShape::Difference => u * u - v * v,
            LiftShape::Product => u * v,
        }
    }

    /// `k0² - D·ℓ0²` (or `k0·ℓ0`).
    fn offset(&self, k0: &BigInt, l0: &BigInt) -> BigInt {
        self.eval(k0, l0)
    }
}

/// One Diophantine equation `shape(u, v) = n` with
/// `u = t·x + k0`, `v = t·y + ℓ0`, `1 <= x <= mx`, `1 <= y <= my`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormEquationInstance {
    pub shape: LiftShape,
    pub z: BigInt,
    pub n: BigInt,
    pub t: u64,
    pub k0: BigInt,
    pub l0: BigInt,
    pub mu0: BigInt,
    pub mx: u64,
    pub my: u64,
    /// `(K', L')`: the transformed box is `[K'+1, K'+mx] × [L'+1, L'+my]`.
    pub origin: (BigInt, BigInt),
    pub unit: Option<PellUnit>,
}

/// How to enumerate the points of one lifted norm equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SolveStrategy {
    /// Orbit enumeration when its representative search is shorter than
    /// the class-restricted scan.
    #[default]
    Auto,
    Scan,
    Orbit,
}

impl NormEquationInstance {
    pub fn u_range(&self) -> Interval {
        let t = BigInt::from(self.t);
        Interval::new(&t + &self.k0, &t * self.mx + &self.k0)
    }

    pub fn v_range(&self) -> Interval {
        let t = BigInt::from(self.t);
        Interval::new(&t + &self.l0, &t * self.my + &self.l0)
    }

    pub fn class(&self) -> ClassFilter {
        ClassFilter {
            t: BigInt::from(self.t),
            x_res: self.k0.clone(),
            y_res: self.l0.clone(),
        }
    }

    fn accepts(&self, p: &LatticePoint) -> bool {
        let class = self.class();
        class.accepts(p) && self.u_range().contains(&p.x) && self.v_range().contains(&p.y)
    }

    /// Members of the `v` class, ascending.
    fn v_members(&self) -> impl Iterator<Item = BigInt> + '_ {
        let t = BigInt::from(self.t);
        (1..=self.my).map(move |y| &t * y + &self.l0)
    }

    pub fn solve(&self) -> Result<Vec<LatticePoint>> {
        self.solve_with(SolveStrategy::Auto)
    }

    /// All `(u, v)` in the lifted box and residue classes solving the
    /// equation, sorted.
    pub fn solve_with(&self, strategy: SolveStrategy) -> Result<Vec<LatticePoint>> {
        let us = self.u_range();
        let vs = self.v_range();
        let mut out = match &self.shape {
            LiftShape::Norm { d } => {
                if self.n.is_zero() {
                    // D is not a square, so only u = v = 0
                    let o = LatticePoint::new(0, 0);
                    if self.accepts(&o) {
                        vec![o]
                    } else {
                        vec![]
                    }
                } else {
                    let use_orbit = match (strategy, &self.unit) {
                        (SolveStrategy::Scan, _) | (_, None) => false,
                        (SolveStrategy::Orbit, Some(_)) => true,
                        (SolveStrategy::Auto, Some(unit)) => {
                            orbit_search_bound(unit, &self.n) < BigInt::from(self.mx.min(self.my))
                        }
                    };
                    if use_orbit {
                        let unit = self.unit.as_ref().expect("checked");
                        crate::conic::enumerate::orbit_points(unit, &self.n, &us, &vs)?
                            .into_iter()
                            .filter(|p| self.class().accepts(p))
                            .collect()
                    } else {
                        scan_with_class(*d, &self.n, &us, &vs, Some(&self.class()))?
                    }
                }
            }
            LiftShape::Product => {
                if self.n.is_zero() {
                    let mut pts = Vec::new();
                    let zero = BigInt::zero();
                    let t = BigInt::from(self.t);
                    if us.contains(&zero) && (&zero - &self.k0).is_multiple_of(&t) {
                        pts.extend(self.v_members().map(|v| LatticePoint { x: zero.clone(), y: v }));
                    }
                    if vs.contains(&zero) && (&zero - &self.l0).is_multiple_of(&t) {
                        let mut u = us.lo.clone();
                        while u <= us.hi {
                            pts.push(LatticePoint {
                                x: u.clone(),
                                y: zero.clone(),
                            });
                            u += &t;
                        }
                    }
                    pts
                } else {
                    solve_xy_in_box(&self.n, &us, &vs)?
                        .into_iter()
                        .filter(|p| self.accepts(p))
                        .collect()
                }
            }
            LiftShape::Difference => {
                if self.n.is_zero() {
                    let mut pts = Vec::new();
                    for v in self.v_members() {
                        for u in [v.clone(), -&v] {
                            let p = LatticePoint { x: u, y: v.clone() };
                            if self.accepts(&p) {
                                pts.push(p);
                            }
                        }
                    }
                    pts
                } else {
                    // (u + v)(u - v) = n
                    let sums = Interval::new(&us.lo + &vs.lo, &us.hi + &vs.hi);
                    let diffs = Interval::new(&us.lo - &vs.hi, &us.hi - &vs.lo);
                    solve_xy_in_box(&self.n, &sums, &diffs)?
                        .into_iter()
                        .filter(|pq| (&pq.x - &pq.y).is_even())
                        .map(|pq| LatticePoint {
                            x: (&pq.x + &pq.y) / 2,
                            y: (&pq.x - &pq.y) / 2,
                        })
                        .filter(|p| self.accepts(p))
                        .collect()
                }
            }
        };
        out.sort();
        out.dedup();
        Ok(out)
    }
}

/// The standardized congruence split into its lifted equations.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub kind: StandardKind,
    pub regime: Regime,
    pub pigeonhole: PigeonholeData,
    pub origin: (BigInt, BigInt),
    pub mx: u64,
    pub my: u64,
    /// Right-hand side after recentering at `(K', L')`.
    pub mu: BigInt,
    pub mu0: BigInt,
    /// `|z|` is strictly below this bound.
    pub z_bound: BigRational,
    pub z_max: BigInt,
    pub equations: Vec<NormEquationInstance>,
}

impl Decomposition {
    pub fn z_count(&self) -> usize {
        self.equations.len()
    }
}

/// `(1+|D|)·T²·M²/p + 2(1+|D|)·M/T + 1/2`.
pub fn z_bound(d: &BigInt, big_t: u64, m: u64, p: &PrimeModulus) -> BigRational {
    let w = weight(d);
    let t = BigInt::from(big_t);
    let m = BigInt::from(m);
    let first = BigRational::new(&w * &t * &t * &m * &m, p.to_bigint());
    let second = BigRational::new(BigInt::from(2) * &w * &m, t);
    first + second + BigRational::new(BigInt::one(), BigInt::from(2))
}

fn side(iv: &Interval) -> Result<u64> {
    iv.len()
        .to_u64()
        .filter(|&v| v > 0)
        .ok_or_else(|| Error::GuardExceeded(format!("transformed interval {iv} is too long")))
}

/// Decomposes with `T` from [`choose_t`].
pub fn decompose(inst: &StandardInstance) -> Result<Decomposition> {
    let m = side(&inst.x_interval)?.max(side(&inst.y_interval)?);
    let (big_t, _) = choose_t(m, &inst.modulus, &inst.kind.weight_d())?;
    decompose_with_t(inst, big_t)
}

pub fn decompose_with_t(inst: &StandardInstance, big_t: u64) -> Result<Decomposition> {
    let p = &inst.modulus;
    let pb = p.to_bigint();
    let mx = side(&inst.x_interval)?;
    let my = side(&inst.y_interval)?;
    let m = mx.max(my);
    let wd = inst.kind.weight_d();
    let regime = classify_regime(m, p, &wd);
    let origin = (&inst.x_interval.lo - 1, &inst.y_interval.lo - 1);
    let (kp, lp) = (&origin.0, &origin.1);
    let ph = find_pigeonhole(kp, lp, p, big_t)?;
    let (shape, mu, unit) = match &inst.kind {
        StandardKind::Norm { d } => {
            let di = d
                .to_i64()
                .ok_or_else(|| Error::GuardExceeded(format!("norm discriminant {d} too large")))?;
            let unit = if di >= 2 { Some(fundamental_solution(di)?) } else { None };
            (LiftShape::Norm { d: di }, &inst.mu - (kp * kp - d * lp * lp), unit)
        }
        StandardKind::Difference => (LiftShape::Difference, &inst.mu - (kp * kp - lp * lp), None),
        StandardKind::Hyperbolic => (LiftShape::Product, &inst.mu - kp * lp, None),
    };
    let t = BigInt::from(ph.t);
    let mu0 = p.signed(&p.reduce(&(&t * &mu)));
    let bound = z_bound(&wd, big_t, m, p);
    let z_max: BigInt = bound.ceil().to_integer() - BigInt::one();
    let offset = shape.offset(&ph.k0, &ph.l0);
    let mut equations = Vec::new();
    let mut z = -&z_max;
    while z <= z_max {
        let n = &t * (&mu0 + &pb * &z) + &offset;
        equations.push(NormEquationInstance {
            shape: shape.clone(),
            z: z.clone(),
            n,
            t: ph.t,
            k0: ph.k0.clone(),
            l0: ph.l0.clone(),
            mu0: mu0.clone(),
            mx,
            my,
            origin: origin.clone(),
            unit: unit.clone(),
        });
        z += 1;
    }
    Ok(Decomposition {
        kind: inst.kind.clone(),
        regime,
        pigeonhole: ph,
        origin,
        mx,
        my,
        mu,
        mu0,
        z_bound: bound,
        z_max,
        equations,
    })
}

/// Maps lifted solutions `(u, v)` back to points `(X, Y)` of the
/// standardized congruence, sorted.
pub fn recompose(solved: &[(&NormEquationInstance, Vec<LatticePoint>)]) -> Result<Vec<(BigInt, BigInt)>> {
    let mut out = Vec::new();
    for (eq, pts) in solved {
        let t = BigInt::from(eq.t);
        for pt in pts {
            if eq.shape.eval(&pt.x, &pt.y) != eq.n {
                return Err(Error::InversionMismatch(format!(
                    "{pt} does not solve the z = {} equation",
                    eq.z
                )));
            }
            let (x, rx) = (&pt.x - &eq.k0).div_rem(&t);
            let (y, ry) = (&pt.y - &eq.l0).div_rem(&t);
            if !rx.is_zero() || !ry.is_zero() {
                return Err(Error::InversionMismatch(format!(
                    "t = {} does not divide the shifted point {pt}",
                    eq.t
                )));
            }
            if x < BigInt::one() || x > BigInt::from(eq.mx) || y < BigInt::one() || y > BigInt::from(eq.my) {
                return Err(Error::InversionMismatch(format!("{pt} lies outside the lifted box")));
            }
            out.push((&eq.origin.0 + x, &eq.origin.1 + y));
        }
    }
    out.sort();
    let before = out.len();
    out.dedup();
    if out.len() != before {
        return Err(Error::InversionMismatch(
            "a point was recovered from two values of z".into(),
        ));
    }
    Ok(out)
}
