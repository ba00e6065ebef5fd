//! Upper and lower bounds on D(q) for a handful of prime powers, plus the
//! convergence of the nondegenerate-curve coefficient to q - 1.
//!
//! Run with `cargo run --example dq_bounds`.

use num_rational::BigRational;
use rpl::bounds::{
    dq_bounds_summary, dvz_aq_upper, homma_nondegenerate_coefficient, upper_limit_check,
};

fn main() -> Result<(), rpl::bounds::BoundsError> {
    for q in [2u64, 4, 8, 9, 27, 49] {
        let s = dq_bounds_summary(q)?;
        println!("q = {q}: D(q) <= {}", s.upper().value);
        for r in s.lower_records() {
            println!(
                "    >= {:<8} {:<20} {}",
                r.value.to_string(),
                r.name,
                r.source
            );
        }
        println!("    A(q) <= {}", dvz_aq_upper(q)?);
    }

    println!("\ncoefficient for nondegenerate curves in P^n, q = 3:");
    for n in [2u32, 3, 5, 10, 20] {
        println!("  n={n:>2}: {}", homma_nondegenerate_coefficient(3, n)?);
    }
    let eps = BigRational::new(1.into(), 1_000_000_000.into());
    let r = upper_limit_check(3, 60, &eps)?;
    println!("  within 1e-9 of 2 from n = {}", r.n0);
    Ok(())
}
