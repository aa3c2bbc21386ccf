//! Fits the constant in |count - M²/p| ≤ C·√p·log²p from random boxes with
//! M near p^(3/4), with jackknife and half-sample stability.
//!
//!     cargo run --release --example estimate_constant

use quadcong::harness::{fit_estimate_constant, sample_counts};
use quadcong::{PrimeModulus, QuadraticForm};

fn main() -> quadcong::Result<()> {
    let q = QuadraticForm::from_coeffs([1, 0, -2, 0, 0, 0])?;
    for p in [10_007u64, 100_003] {
        let m = (p as f64).powf(0.75).round() as u64;
        let pm = PrimeModulus::new(p)?;
        let counts: Vec<u64> = sample_counts(&q, &pm, m, 20, 1)?
            .iter()
            .filter_map(|s| s.count)
            .collect();
        let fit = fit_estimate_constant(p, m, &counts)?;
        println!("p = {p}, M = {m}, M²/p = {:.1}", (m * m) as f64 / p as f64);
        println!("  counts {counts:?}");
        println!(
            "  C = {:.3e}, halves {:.3e} / {:.3e}, largest shift {:.2}",
            fit.c,
            fit.halves.0,
            fit.halves.1,
            fit.max_relative_shift()
        );
    }
    Ok(())
}
