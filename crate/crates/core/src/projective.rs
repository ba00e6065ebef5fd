//! Enumeration of `P^n(F_q)`.
//!
//! Each point is produced once, as the representative whose first nonzero
//! coordinate (scanning left to right) equals one.

use crate::gf::{Fe, FieldContext};

/// Number of points of `P^n(F_q)`, `(q^(n+1) - 1) / (q - 1)`.
pub fn projective_point_count(q: u64, n: u32) -> u128 {
    (0..=n).map(|i| (q as u128).pow(i)).sum()
}

/// Calls `visit` with every normalized point of `P^n(F_q)`, as a slice of
/// `n + 1` coordinates. Stops early and returns `false` if `visit` does.
pub fn for_each_point(ctx: &FieldContext, n: usize, mut visit: impl FnMut(&[Fe]) -> bool) -> bool {
    let len = n + 1;
    let q = ctx.q() as u32;
    let zero = ctx.zero();
    let mut coords = vec![zero; len];
    for lead in 0..len {
        coords.iter_mut().for_each(|c| *c = zero);
        coords[lead] = ctx.one();
        // odometer over the free coordinates after the leading one
        let mut digits = vec![0u32; len - lead - 1];
        loop {
            for (slot, &d) in coords[lead + 1..].iter_mut().zip(&digits) {
                *slot = ctx.element(d as u64).expect("digit below q");
            }
            if !visit(&coords) {
                return false;
            }
            let mut i = 0;
            while i < digits.len() {
                digits[i] += 1;
                if digits[i] < q {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == digits.len() {
                break;
            }
        }
    }
    true
}
