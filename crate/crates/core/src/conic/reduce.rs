use num_bigint::BigInt;
use num_traits::Zero;

use super::{fundamental_solution, require_norm_d, sign_sqrt, LatticePoint, PellUnit};
use crate::error::{Error, Result};

/// Unit-group orbit of a solution of `x² - D·y² = n`, named by its reduced
/// representative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SolutionClass {
    pub d: i64,
    pub n: BigInt,
    pub rep: LatticePoint,
}

impl SolutionClass {
    pub fn of(d: i64, point: &LatticePoint) -> Result<Self> {
        Ok(SolutionClass {
            d,
            n: point.norm(d),
            rep: primitive_reduce(d, point)?,
        })
    }
}

/// Moves a solution of `x² - D·y² = n` (`n != 0`) along its orbit under
/// multiplication by the fundamental unit `ε` until
/// `ε⁻¹ <= |A/B| < ε`, where `A = x + y√D` (made positive by an overall
/// sign) and `B = x - y√D`.
///
/// Every orbit meets that window exactly once, so the result names the
/// class. All comparisons are exact in `Z[√D]`.
pub fn primitive_reduce(d: i64, point: &LatticePoint) -> Result<LatticePoint> {
    require_norm_d(d)?;
    if d < 2 {
        return Err(Error::DTooSmall(d));
    }
    if point.norm(d).is_zero() {
        return Err(Error::NotApplicable("the zero point has no class"));
    }
    let unit = fundamental_solution(d)?;
    Ok(reduce_with(&unit, point))
}

pub(crate) fn reduce_with(unit: &PellUnit, point: &LatticePoint) -> LatticePoint {
    let d = unit.d;
    let (u, v) = (&unit.u0, &unit.v0);
    let bd = BigInt::from(d);
    let mut p = point.clone();
    if sign_sqrt(&p.x, &p.y, d).is_lt() {
        p = LatticePoint { x: -&p.x, y: -&p.y };
    }
    loop {
        // A > 0 from here on; sB is the sign of B
        let sb = if sign_sqrt(&p.x, &-&p.y, d).is_lt() { -1 } else { 1 };
        let (x, y) = (&p.x, &p.y);
        // |A|·ε - |B|
        let lo_p = x * u + &bd * y * v - sb * x;
        let lo_q = x * v + y * u + sb * y;
        if sign_sqrt(&lo_p, &lo_q, d).is_lt() {
            p = unit.forward(&p);
            continue;
        }
        // ε·|B| - |A|
        let hi_p = sb * (x * u - &bd * y * v) - x;
        let hi_q = sb * (x * v - y * u) - y;
        if !sign_sqrt(&hi_p, &hi_q, d).is_gt() {
            p = unit.backward(&p);
            continue;
        }
        return p;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_examples() {
        assert_eq!(
            primitive_reduce(2, &LatticePoint::new(5, 3)).unwrap(),
            LatticePoint::new(3, -1)
        );
        assert_eq!(
            primitive_reduce(2, &LatticePoint::new(3, 1)).unwrap(),
            LatticePoint::new(3, 1)
        );
    }

    #[test]
    fn orbit_members_share_a_class() {
        let unit = fundamental_solution(7).unwrap();
        for (x, y) in [(3i64, 1i64), (2, 1), (-5, 2), (4, -1), (1, 0), (-1, 0)] {
            let p = LatticePoint::new(x, y);
            let r = primitive_reduce(7, &p).unwrap();
            let mut q = p.clone();
            for _ in 0..4 {
                q = unit.forward(&q);
                assert_eq!(primitive_reduce(7, &q).unwrap(), r);
                let neg = LatticePoint { x: -&q.x, y: -&q.y };
                assert_eq!(primitive_reduce(7, &neg).unwrap(), r);
            }
            let mut q = p.clone();
            for _ in 0..4 {
                q = unit.backward(&q);
                assert_eq!(primitive_reduce(7, &q).unwrap(), r);
            }
            assert_eq!(r.norm(7), p.norm(7));
        }
    }

    #[test]
    fn reduced_is_fixed_point() {
        for x in -30i64..=30 {
            for y in -30i64..=30 {
                let p = LatticePoint::new(x, y);
                if p.norm(3).is_zero() {
                    continue;
                }
                let r = primitive_reduce(3, &p).unwrap();
                assert_eq!(primitive_reduce(3, &r).unwrap(), r);
            }
        }
    }

    #[test]
    fn errors() {
        assert!(primitive_reduce(2, &LatticePoint::new(0, 0)).is_err());
        assert!(primitive_reduce(8, &LatticePoint::new(3, 1)).is_err());
    }
}
