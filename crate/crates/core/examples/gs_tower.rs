//! Split places, genus and the point/genus ratio along the
//! Garcia-Stichtenoth tower over F_{q^2}.
//!
//! Run with `cargo run --example gs_tower`.

use num_traits::ToPrimitive;
use rpl::gs_tower::{count_split_chains, gs_genus, ratio_limit, tower_ratio_sequence};

fn main() -> Result<(), rpl::gs_tower::GsError> {
    for q in [2u64, 3, 4] {
        println!("q = {q} (field F_{})", q * q);
        for m in 1..=6 {
            println!(
                "  m={m}: genus {:>6}, split places {:>6}",
                gs_genus(q, m),
                count_split_chains(q, m)?
            );
        }
    }

    println!("\nratio (q-1)q^m / (c_m + q^(m-1) - 1) against its limit:");
    for q in 2..=5u64 {
        let limit = ratio_limit(q);
        let seq = tower_ratio_sequence(q, 40);
        let pick: Vec<String> = seq
            .iter()
            .filter(|(m, _)| [2, 5, 10, 20, 40].contains(m))
            .map(|(m, r)| format!("m={m}: {:.6}", r.to_f64().unwrap_or(f64::NAN)))
            .collect();
        println!("  q={q}, limit {limit}: {}", pick.join(", "));
    }
    Ok(())
}
