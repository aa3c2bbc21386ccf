//! Runs the full chain on one instance: standardize, pick the pigeonhole
//! multiplier, lift to norm equations, solve them, map back and compare with
//! the direct count.
//!
//!     cargo run --example proof_pipeline

use num_bigint::BigInt;
use quadcong::decomp::decompose;
use quadcong::harness::run_pipeline;
use quadcong::quadform::standardize;
use quadcong::{PrimeModulus, QuadraticForm, SearchBox};

fn show(c: [i64; 6], lambda: i64, p: u64, k: i64, l: i64, m: u64) -> quadcong::Result<()> {
    let q = QuadraticForm::from_coeffs(c)?;
    let p = PrimeModulus::new(p)?;
    let bx = SearchBox::new(k, l, m)?;
    let lambda = BigInt::from(lambda);
    println!("{q} ≡ {lambda} (mod {}), box ({k}, {l}, {m})", p.value());

    let inst = standardize(&q, &lambda, &p, &bx)?;
    let dec = decompose(&inst)?;
    let ph = &dec.pigeonhole;
    println!(
        "  shape {}, mu = {}, regime {}",
        dec.kind.name(),
        dec.mu,
        dec.regime.name()
    );
    println!(
        "  T = {}, t = {}, t·K' ≡ {}, t·L' ≡ {} (mod p)",
        ph.big_t, ph.t, ph.k0, ph.l0
    );
    println!(
        "  lifted box {} × {}, |z| ≤ {} ({} equations)",
        dec.mx,
        dec.my,
        dec.z_max,
        dec.z_count()
    );

    let r = run_pipeline(&q, &lambda, &p, &bx)?;
    let hits: Vec<_> = r.rows.iter().filter(|row| row.solutions > 0).collect();
    for row in hits.iter().take(6) {
        println!(
            "    z = {:>4}: n = {:>10}, {} lifted points",
            row.z, row.n, row.solutions
        );
    }
    if hits.len() > 6 {
        println!("    ... {} more values of z with lifted points", hits.len() - 6);
    }
    println!(
        "  {} lifted points land in the source box, direct count {}",
        r.decomposed_count, r.exact_count
    );
    Ok(())
}

fn main() -> quadcong::Result<()> {
    // small box against a large prime: a single norm equation
    show([1, 0, -2, 0, 0, 0], -1, 1_000_003, 0, 0, 1)?;
    // general forms with several equations
    show([2, 1, -3, 1, 0, 4], 11, 9973, 1200, 4000, 60)?;
    show([1, 0, 3, 0, 0, 0], 5, 4099, 17, 29, 50)?;
    // xy ≡ 1: solved by divisor pairs
    show([0, 1, 0, 0, 0, 0], 1, 101, 0, 0, 10)?;
    Ok(())
}
