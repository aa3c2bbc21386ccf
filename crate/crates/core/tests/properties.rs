use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;

use quadcong::boxcount::{count_exact, count_naive};
use quadcong::conic::{
    arc_length, chord_length, enumerate_in_box_orbit, enumerate_in_box_scan, fundamental_solution, primitive_reduce,
    LatticePoint,
};
use quadcong::decomp::{choose_t, find_pigeonhole, Regime};
use quadcong::modmath::{count_class_in_interval, legendre, next_prime_u64, sqrt_mod};
use quadcong::quadform::{standardize, QuadraticForm, SearchBox};
use quadcong::{Interval, PrimeModulus};

fn odd_prime(limit: u64) -> impl Strategy<Value = u64> {
    (3..limit).prop_map(next_prime_u64)
}

fn coeffs(r: i64) -> impl Strategy<Value = [i64; 6]> {
    prop::array::uniform6(-r..=r)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn exact_matches_naive(p in odd_prime(200), c in coeffs(5), lam in 0i64..200, k in -300i64..300, l in -300i64..300, m in 1u64..60) {
        let q = QuadraticForm::new_unchecked(c[0], c[1], c[2], c[3], c[4], c[5]);
        let p = PrimeModulus::new(p).unwrap();
        let bx = SearchBox::new(k, l, m).unwrap();
        let lam = BigInt::from(lam);
        let fast = count_exact(&q, &lam, &p, &bx, true);
        let slow = count_naive(&q, &lam, &p, &bx).unwrap();
        prop_assert_eq!(fast.count, slow.count);
        prop_assert_eq!(fast.solutions, slow.solutions);
    }

    #[test]
    fn translation_covariance(p in odd_prime(100), c in coeffs(4), lam in 0i64..100, k in -50i64..50, l in -50i64..50, m in 1u64..30, s in -20i64..20, t in -20i64..20) {
        // solutions of Q in the box shifted by (s, t) are those of Q(x + s, y + t) in the box
        let q = QuadraticForm::new_unchecked(c[0], c[1], c[2], c[3], c[4], c[5]);
        let p = PrimeModulus::new(p).unwrap();
        let lam = BigInt::from(lam);
        let shifted = count_exact(&q, &lam, &p, &SearchBox::new(k + s, l + t, m).unwrap(), false).count;
        let moved = q.translated(&BigInt::from(s), &BigInt::from(t));
        let base = count_exact(&moved, &lam, &p, &SearchBox::new(k, l, m).unwrap(), false).count;
        prop_assert_eq!(shifted, base);
    }

    #[test]
    fn irreducible_columns_hold_two_points(p in odd_prime(300), c in coeffs(5), lam in 0i64..300, k in -500i64..500, l in -500i64..500, m in 1u64..200) {
        let Ok(q) = QuadraticForm::from_coeffs(c) else { return Ok(()) };
        let p = PrimeModulus::new(p).unwrap();
        let lam = BigInt::from(lam);
        prop_assume!(quadcong::quadform::is_absolutely_irreducible(&q, &lam, &p));
        let r = count_exact(&q, &lam, &p, &SearchBox::new(k, l, m).unwrap(), false);
        prop_assert!(!r.is_degenerate());
        prop_assert!(r.count <= 2 * m.div_ceil(p.as_u64().unwrap()).max(1) * m);
    }

    #[test]
    fn count_class_matches_loop(p in odd_prime(500), r in 0u64..500, lo in -2000i64..2000, len in 0i64..1500) {
        let pm = PrimeModulus::new(p).unwrap();
        let res = pm.residue_u64(r);
        let hi = lo + len;
        let want = (lo..=hi).filter(|v| v.rem_euclid(p as i64) == (r % p) as i64).count() as u64;
        let got = count_class_in_interval(&res, &BigInt::from(lo), &BigInt::from(hi)).unwrap().to_u64().unwrap();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn sqrt_set_size_follows_legendre(p in odd_prime(5000), a in 0u64..5000) {
        let pm = PrimeModulus::new(p).unwrap();
        let r = pm.residue_u64(a);
        let roots = sqrt_mod(&r);
        let l = legendre(&r);
        let want = if l >= 0 { (1 + l) as usize } else { 0 };
        prop_assert_eq!(roots.len(), want);
        for x in roots {
            let x = x.value().clone();
            prop_assert_eq!((&x * &x) % pm.value(), r.value().clone());
        }
    }

    #[test]
    fn standardization_identity(p in odd_prime(2000), c in coeffs(6), lam in 0i64..2000, k in -100i64..100, l in -100i64..100, x in -300i64..300, y in -300i64..300) {
        let Ok(q) = QuadraticForm::from_coeffs(c) else { return Ok(()) };
        let p = PrimeModulus::new(p).unwrap();
        let lam = BigInt::from(lam);
        let bx = SearchBox::new(k, l, 10).unwrap();
        let Ok(inst) = standardize(&q, &lam, &p, &bx) else { return Ok(()) };
        let (x, y) = (BigInt::from(x), BigInt::from(y));
        prop_assert!(inst.identity_holds(&q, &lam, &x, &y));
        // Q ≡ λ exactly when the standardized point satisfies F ≡ μ
        let (bx_, by_) = inst.map.apply(&x, &y);
        let original = p.reduce(&(q.eval(&x, &y) - &lam)).is_zero();
        prop_assert_eq!(original, inst.satisfies(&bx_, &by_));
        prop_assert_eq!(inst.map.preimage(&bx_, &by_), Some((x, y)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn pigeonhole_invariants(p in odd_prime(1_000_000), k in any::<i64>(), l in any::<i64>(), t in 1u64..60) {
        let pm = PrimeModulus::new(p).unwrap();
        prop_assume!(t < p);
        let (k, l) = (BigInt::from(k), BigInt::from(l));
        let ph = find_pigeonhole(&k, &l, &pm, t).unwrap();
        prop_assert!(ph.is_valid_for(&k, &l));
        prop_assert!(ph.t as u128 <= (t as u128) * (t as u128));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn choose_t_regimes(m in 1u64..10_000, p in odd_prime(1_000_000_000), d in -30i64..30) {
        let pm = PrimeModulus::new(p).unwrap();
        let d = BigInt::from(d);
        if let Ok((t, regime)) = choose_t(m, &pm, &d) {
            prop_assert!(t >= 2 && t < p);
            let w = d.abs() + 1;
            match regime {
                Regime::SmallM => prop_assert_eq!(BigInt::from(t), BigInt::from(8) * w * m),
                Regime::LargeM => {
                    let tt = BigInt::from(t);
                    prop_assert!(&tt * &tt * &tt * m >= BigInt::from(p) || t == 2);
                }
            }
        }
    }

    #[test]
    fn orbit_and_scan_agree(d in prop::sample::select(vec![2i64, 3, 5, 6, 7, 10, 11, 13]), n in -300i64..300, x0 in -400i64..400, y0 in -400i64..400, w in 1i64..400, h in 1i64..400) {
        prop_assume!(n != 0);
        let xs = Interval::new(x0, x0 + w);
        let ys = Interval::new(y0, y0 + h);
        let n = BigInt::from(n);
        let a = enumerate_in_box_scan(d, &n, &xs, &ys).unwrap();
        let b = enumerate_in_box_orbit(d, &n, &xs, &ys).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn reduction_is_a_class_invariant(d in prop::sample::select(vec![2i64, 3, 5, 6, 7, 10]), x in -200i64..200, y in -200i64..200, k in -3i32..3) {
        let p = LatticePoint::new(x, y);
        prop_assume!(!p.norm(d).is_zero());
        let unit = fundamental_solution(d).unwrap();
        let mut q = p.clone();
        for _ in 0..k.abs() {
            q = if k > 0 { unit.forward(&q) } else { unit.backward(&q) };
        }
        let r1 = primitive_reduce(d, &p).unwrap();
        let r2 = primitive_reduce(d, &LatticePoint { x: -&q.x, y: -&q.y }).unwrap();
        prop_assert_eq!(&r1, &r2);
        prop_assert_eq!(r1.norm(d), p.norm(d));
    }

    #[test]
    fn arcs_dominate_chords_and_add_up(d in prop::sample::select(vec![-1i64, -2, -3, 2, 3, 5]), n in 1i64..3000) {
        let n = BigInt::from(n);
        for branch in quadcong::conic::branch_points(d, &n).unwrap() {
            for w in branch.windows(3) {
                let ab = arc_length(d, &n, &w[0], &w[1]).unwrap();
                let bc = arc_length(d, &n, &w[1], &w[2]).unwrap();
                let ac = arc_length(d, &n, &w[0], &w[2]).unwrap();
                prop_assert!(ab >= chord_length(&w[0], &w[1]) * (1.0 - 1e-12));
                // ellipse arcs are measured the short way round, checked separately
                if d > 0 {
                    prop_assert!(((ab + bc) - ac).abs() <= 1e-6 * ac);
                }
            }
        }
    }
}

#[test]
fn pell_solutions_are_minimal() {
    for d in 2i64..=200 {
        let Ok(u) = fundamental_solution(d) else { continue };
        assert_eq!(&u.u0 * &u.u0 - BigInt::from(d) * &u.v0 * &u.v0, BigInt::one());
        let v0 = u.v0.to_u64().unwrap();
        if v0 > 1_000_000 {
            continue;
        }
        for v in 1..v0 {
            let t = (d as u128) * (v as u128) * (v as u128) + 1;
            let s = (t as f64).sqrt() as u128;
            assert!(
                !(s.saturating_sub(1)..=s + 1).any(|r| r * r == t),
                "D = {d}: smaller solution at v = {v}"
            );
        }
    }
}

#[test]
fn full_period_box_counts_points_on_the_curve() {
    // a box covering one full period of both coordinates counts every
    // affine point exactly once
    for p in [5u64, 7, 11, 13] {
        let pm = PrimeModulus::new(p).unwrap();
        for c in [[1i64, 0, 1, 0, 0, 0], [0, 1, 0, 0, 0, 0], [1, 1, -1, 2, 0, 1]] {
            let q = QuadraticForm::from_coeffs(c).unwrap();
            for lam in 0..p {
                let lam = BigInt::from(lam);
                let mut direct = 0u64;
                for x in 0..p as i64 {
                    for y in 0..p as i64 {
                        if pm
                            .reduce(&(q.eval(&BigInt::from(x), &BigInt::from(y)) - &lam))
                            .is_zero()
                        {
                            direct += 1;
                        }
                    }
                }
                for (k, l) in [(0i64, 0i64), (-3, 17), (100, -200)] {
                    let r = count_exact(&q, &lam, &pm, &SearchBox::new(k, l, p).unwrap(), false);
                    assert_eq!(r.count, direct);
                }
            }
        }
    }
}

#[test]
fn ellipse_arcs_add_up_along_short_runs() {
    let n = BigInt::from(5525); // 5²·13·17 has many representations as a sum of two squares
    let br = &quadcong::conic::branch_points(-1, &n).unwrap()[0];
    assert!(br.len() > 20);
    for w in br.windows(3) {
        let ab = arc_length(-1, &n, &w[0], &w[1]).unwrap();
        let bc = arc_length(-1, &n, &w[1], &w[2]).unwrap();
        let ac = arc_length(-1, &n, &w[0], &w[2]).unwrap();
        assert!(((ab + bc) - ac).abs() <= 1e-6 * ac, "{:?}", w);
        assert!(ac >= chord_length(&w[0], &w[2]));
    }
}
