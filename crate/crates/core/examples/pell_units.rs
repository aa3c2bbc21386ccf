//! Fundamental units of x² - Dy² = 1 from continued fractions.
//!
//!     cargo run --example pell_units [D ...]

use num_bigint::BigInt;
use quadcong::conic::{fundamental_solution, is_squarefree};

fn main() -> quadcong::Result<()> {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ds = if args.is_empty() {
        (2..=30)
            .filter(|&d| is_squarefree(d))
            .chain([61, 109, 181, 991])
            .collect()
    } else {
        args
    };
    for d in ds {
        match fundamental_solution(d) {
            Ok(u) => {
                let check = &u.u0 * &u.u0 - BigInt::from(d) * &u.v0 * &u.v0;
                println!("D = {d:>4}: u0 = {}, v0 = {} (norm {check})", u.u0, u.v0);
            }
            Err(e) => println!("D = {d:>4}: {e}"),
        }
    }
    Ok(())
}
