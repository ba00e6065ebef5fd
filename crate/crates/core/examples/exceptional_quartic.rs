//! The plane quartic over F_4 with 14 rational points, one more than the
//! bound (d-1)q + 1 = 13 for curves without F_q-linear components.
//!
//! Run with `cargo run --example exceptional_quartic`.

use rpl::bounds::{exceptional_quartic_scan, sziklai_bound};

fn main() -> Result<(), rpl::bounds::BoundsError> {
    let (visited, on_curve) = exceptional_quartic_scan();
    let bound = sziklai_bound(4, 4)?;
    println!("points of P^2(F_4) visited: {visited}");
    println!("points on the quartic:      {on_curve}");
    println!("bound (d-1)q + 1:           {bound}");
    Ok(())
}
