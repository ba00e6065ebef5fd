//! Weierstrass semigroups at the totally ramified place of the tower:
//! conductor, gaps, minimal generators and the generator bound.
//!
//! Run with `cargo run --example weierstrass_semigroup`.

use rpl::gs_tower::gs_genus;
use rpl::semigroup::{check_generator_bounds, weierstrass_semigroup};

fn main() -> Result<(), rpl::semigroup::SemigroupError> {
    for m in 2..=5 {
        let s = weierstrass_semigroup(2, m)?;
        let gaps: Vec<u64> = s.gaps().collect();
        println!(
            "q=2 m={m}: conductor {}, gaps {:?}, generators {:?}",
            s.conductor(),
            gaps,
            s.minimal_generators().as_slice()
        );
    }

    println!("\ngap count against genus, and the bound on the largest generator:");
    for (q, m) in [(2u64, 6u32), (3, 4), (4, 4), (5, 3)] {
        let s = weierstrass_semigroup(q, m)?;
        let r = check_generator_bounds(q, m)?;
        println!(
            "  q={q} m={m}: gaps {} genus {}, gamma_1 {} gamma_l {} <= {} ({} generators)",
            s.gap_count(),
            gs_genus(q, m),
            r.gamma_first,
            r.gamma_last,
            r.gamma_last_bound,
            r.generator_count
        );
    }
    Ok(())
}
