//! The parabola y ≡ x² (mod p) in [1, M]² has about √M points when M ≪ √p.
//!
//!     cargo run --example parabola

use quadcong::harness::parabola_sanity;
use quadcong::PrimeModulus;

fn main() -> quadcong::Result<()> {
    let p = PrimeModulus::new(1_000_000_007u64)?;
    let r = parabola_sanity(&[100, 1000, 10_000, 100_000], &p)?;
    for row in &r.rows {
        println!("M = {:>6}: {:>4} points, count/√M = {:.3}", row.m, row.count, row.ratio);
    }
    Ok(())
}
