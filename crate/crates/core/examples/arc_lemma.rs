//! Checks that no arc of a conic x² - Dy² = n shorter than the threshold
//! carries three lattice points, and shows a sample arc.
//!
//!     cargo run --release --example arc_lemma [nmax]

use num_bigint::BigInt;
use quadcong::conic::{arc_length, branch_points, chord_length, verify_small_arc_lemma};

fn main() -> quadcong::Result<()> {
    let nmax: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5000);

    let n = BigInt::from(5525);
    let pts = &branch_points(-1, &n)?[0];
    println!("x² + y² = 5525 has {} lattice points", pts.len());
    let (a, b) = (&pts[0], &pts[1]);
    println!(
        "  arc {a} to {b}: {:.6}, chord {:.6}",
        arc_length(-1, &n, a, b)?,
        chord_length(a, b)
    );

    for d in [-7, -2, -1, 2, 3, 5, 6, 7, 10] {
        let r = verify_small_arc_lemma(d, nmax)?;
        let ratio = r.min_ratio.map_or("-".to_string(), |m| format!("{m:.4}"));
        println!(
            "D = {d:>3}: {} conics, {} triples, min arc/threshold {ratio}, violations {}",
            r.conics_with_points,
            r.triples_checked,
            r.violations.len()
        );
    }
    Ok(())
}
