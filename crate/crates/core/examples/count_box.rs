//! Counts solutions of a congruence in a box two ways and prints them.
//!
//!     cargo run --example count_box

use num_bigint::BigInt;
use quadcong::boxcount::{count_exact, count_naive};
use quadcong::{PrimeModulus, QuadraticForm, SearchBox};

fn main() -> quadcong::Result<()> {
    // 2x² + xy + 3y² + x - y + 2 ≡ 5 (mod 101) on 41..60 × -9..10
    let q = QuadraticForm::from_coeffs([2, 1, 3, 1, -1, 2])?;
    let p = PrimeModulus::new(101)?;
    let bx = SearchBox::new(40, -10, 20)?;
    let lambda = BigInt::from(5);

    let fast = count_exact(&q, &lambda, &p, &bx, true);
    let slow = count_naive(&q, &lambda, &p, &bx)?;
    println!(
        "form {q}, p = 101, lambda = 5, box x in {}, y in {}",
        bx.x_range(),
        bx.y_range()
    );
    println!("column count {}, double loop {}", fast.count, slow.count);
    for (x, y) in fast.solutions.unwrap_or_default() {
        println!("  ({x}, {y})  Q = {}", q.eval(&x, &y));
    }

    // the full period box: every residue pair once
    let full = SearchBox::new(0, 0, 101)?;
    println!(
        "full period box: {} solutions",
        count_exact(&q, &lambda, &p, &full, false).count
    );
    Ok(())
}
