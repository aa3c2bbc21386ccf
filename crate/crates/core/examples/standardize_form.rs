//! Reduces a few forms to their standard shape and checks the change of
//! variables on every box solution.
//!
//!     cargo run --example standardize_form

use num_bigint::BigInt;
use quadcong::boxcount::count_exact;
use quadcong::quadform::{is_absolutely_irreducible, standard_kind, standardize};
use quadcong::{PrimeModulus, QuadraticForm, SearchBox};

fn main() -> quadcong::Result<()> {
    let p = PrimeModulus::new(1009)?;
    let bx = SearchBox::new(100, 200, 150)?;
    let lambda = BigInt::from(17);
    for c in [
        [1, 0, -2, 0, 0, 0],
        [3, 2, -5, 1, 4, 7],
        [0, 1, 0, 2, -3, 1],
        [1, 0, -1, 0, 0, 0],
        [2, 0, 6, 0, 0, 0],
    ] {
        let q = QuadraticForm::from_coeffs(c)?;
        println!("{q}");
        println!(
            "  discriminant {}, shape {}",
            q.discriminant(),
            standard_kind(&q).name()
        );
        if !is_absolutely_irreducible(&q, &lambda, &p) {
            println!("  reducible mod p, skipped");
            continue;
        }
        let inst = standardize(&q, &lambda, &p, &bx)?;
        println!("  mu = {}, map rows {:?}", inst.mu, inst.map.rows);
        println!("  image box X in {}, Y in {}", inst.x_interval, inst.y_interval);
        let sols = count_exact(&q, &lambda, &p, &bx, true).solutions.unwrap_or_default();
        let ok = sols.iter().all(|(x, y)| {
            let (bx_, by_) = inst.map.apply(x, y);
            inst.satisfies(&bx_, &by_) && inst.identity_holds(&q, &lambda, x, y)
        });
        println!(
            "  {} box solutions, all map to solutions of the standard congruence: {ok}",
            sols.len()
        );
    }
    Ok(())
}
