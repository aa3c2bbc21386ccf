//! Lattice points on x² - Dy² = n in a box, by scanning and by walking
//! orbits of the unit group, plus the divisor route for xy = n.
//!
//!     cargo run --example lattice_points

use num_bigint::BigInt;
use quadcong::conic::{
    enumerate_in_box_orbit, enumerate_in_box_scan, primitive_reduce, solve_xy_in_box, SolutionClass,
};
use quadcong::Interval;

fn main() -> quadcong::Result<()> {
    let xs = Interval::new(-100_000, 100_000);
    let ys = Interval::new(-100_000, 100_000);
    for (d, n) in [(2i64, 7i64), (3, -2), (7, 9), (13, -4), (-5, 441)] {
        let n = BigInt::from(n);
        let scan = enumerate_in_box_scan(d, &n, &xs, &ys)?;
        let lhs = if d < 0 {
            format!("x² + {}y²", -d)
        } else {
            format!("x² - {d}y²")
        };
        print!("{lhs} = {n}: {} points by scan", scan.len());
        if d >= 2 {
            let orbit = enumerate_in_box_orbit(d, &n, &xs, &ys)?;
            println!(", {} by orbits, equal: {}", orbit.len(), orbit == scan);
            let mut reps: Vec<_> = scan
                .iter()
                .map(|pt| primitive_reduce(d, pt))
                .collect::<Result<_, _>>()?;
            reps.sort();
            reps.dedup();
            let shown: Vec<String> = reps.iter().map(|r| r.to_string()).collect();
            println!("  classes under the unit group: {}", shown.join(" "));
            let cls = SolutionClass::of(d, &scan[0])?;
            println!("  class of {} has representative {}", scan[0], cls.rep);
        } else {
            println!();
        }
    }

    let n = BigInt::from(720_720);
    let pts = solve_xy_in_box(&n, &Interval::new(1, 1000), &Interval::new(1, 1000))?;
    println!("xy = {n} with 1 ≤ x, y ≤ 1000: {} points", pts.len());
    Ok(())
}
