//! Seeded sweep over primes and box sizes, CSV output and a log-log fit of
//! the maximal count against M.
//!
//!     cargo run --release --example sweep_and_fit [out.csv]

use quadcong::harness::{fit_by_prime, sweep, write_csv, SweepSpec};

fn main() -> quadcong::Result<()> {
    let spec = SweepSpec::parse(
        "primes = 10007, 100003\n\
         m_schedule = 10, 30, 100, 300, 1000\n\
         samples = 50\n\
         form = 1, 0, -2, 0, 0, 0\n\
         seed = 2024\n",
    )?;
    let rows = sweep(&spec)?;
    for r in &rows {
        println!(
            "p = {:>6} M = {:>5}: max {:>4}, mean {:>8.3}, 2M = {:>5}, estimate {:>10.2}",
            r.p, r.m, r.count, r.mean_count, r.trivial_bound, r.estimate_bound
        );
    }
    for (p, fit) in fit_by_prime(&rows) {
        match fit {
            Ok(f) => println!(
                "p = {p}: slope {:.3} (residual {:.3}, {} points)",
                f.slope, f.residual, f.points
            ),
            Err(e) => println!("p = {p}: {e}"),
        }
    }
    if let Some(path) = std::env::args().nth(1) {
        write_csv(&rows, std::fs::File::create(&path)?)?;
        println!("wrote {path}");
    }
    Ok(())
}
