//! Point counts for the complete intersections X_l over F_q, compared
//! against their degree (q-1)^(l-1).
//!
//! Run with `cargo run --example projective_family`.

use rpl::homma_family::{brute_force_projective, count_total, homma_degree, BRUTE_FORCE_LIMIT};
use rpl::PrimePower;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!(
        "{:>3} {:>3} {:>10} {:>10} {:>10} {:>10}  ratio",
        "q", "l", "affine", "infinity", "total", "degree"
    );
    for q in [3u64, 4, 5, 7, 8, 9] {
        let pp = PrimePower::from_q(q)?;
        for ell in 2..=5 {
            let c = count_total(pp, ell)?;
            let d = homma_degree(pp, ell)?;
            let ratio = num_rational::BigRational::new(c.total().clone().into(), d.clone().into());
            println!(
                "{q:>3} {ell:>3} {:>10} {:>10} {:>10} {d:>10}  {ratio}",
                c.affine(),
                c.infinity(),
                c.total()
            );
        }
    }

    // The recursion agrees with a direct scan of P^l on small cases.
    let pp = PrimePower::from_q(5)?;
    for ell in 2..=4 {
        assert!((5u128).pow(ell as u32) <= BRUTE_FORCE_LIMIT);
        let fast = count_total(pp, ell)?;
        let slow = brute_force_projective(pp, ell)?;
        println!(
            "q=5 l={ell}: recursion {} scan {}",
            fast.total(),
            slow.total()
        );
    }

    // Large l is cheap because only the value distribution is tracked.
    let c = count_total(PrimePower::from_q(3)?, 200)?;
    println!(
        "q=3 l=200: total has {} decimal digits",
        c.total().to_string().len()
    );
    Ok(())
}
