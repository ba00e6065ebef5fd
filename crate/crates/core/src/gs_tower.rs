//! Split rational places of the Garcia–Stichtenoth tower over `F_{q^2}`:
//!
//! ```text
//! F_1 = F_{q^2}(x_1),    x_{i+1}^q + x_{i+1} = x_i^q / (x_i^{q-1} + 1)
//! ```
//!
//! Every `α ∈ F_{q^2}` with `α^q + α ≠ 0` gives a place of `F_1` that splits
//! completely in `F_m`, so the tower has at least `(q-1) q^m` rational places
//! at level `m`. This module certifies that count by propagating a
//! [`ValueDistribution`] of solution chains through the Artin–Schreier
//! steps, insisting on a full fiber of size `q` at every step. Places over
//! the pole of `x_1` and any other rational places are not counted.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::distribution::{Transition, ValueDistribution};
use crate::gf::{solve_artin_schreier, Fe, FieldContext, GfError, PrimePower, MAX_FIELD_SIZE};
use crate::semigroup::conductor_cm_big;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GsError {
    #[error("level m must be at least 1")]
    BadLevel,
    #[error("level {level}: value {value} has v^(q-1) + 1 = 0")]
    AdmissibilityViolation { level: u32, value: String },
    #[error("level {level}: Artin–Schreier fiber of size {found}, expected {expected}")]
    FiberSize {
        level: u32,
        expected: u64,
        found: usize,
    },
    #[error("level {level}: chain mass {found} differs from (q^2-q)q^(m-1) = {expected}")]
    MassMismatch {
        level: u32,
        expected: BigUint,
        found: BigUint,
    },
    #[error(transparent)]
    Field(#[from] GfError),
}

/// Genus of the `m`-th tower level.
pub fn gs_genus(q: u64, m: u32) -> BigUint {
    let q = BigUint::from(q);
    let one = BigUint::one();
    if m.is_multiple_of(2) {
        let t = q.pow(m / 2) - &one;
        &t * &t
    } else {
        (q.pow(m.div_ceil(2)) - &one) * (q.pow((m - 1) / 2) - &one)
    }
}

/// `(q-1) q^m`.
pub fn n1_lower_bound(q: u64, m: u32) -> BigUint {
    BigUint::from(q - 1) * BigUint::from(q).pow(m)
}

/// Chain multiplicities over `F_{q^2}` at one tower level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerLevelState {
    pub level: u32,
    pub dist: ValueDistribution,
}

/// Result of the split-chain propagation.
#[derive(Debug, Clone)]
pub struct SplitChainRun {
    pub q: PrimePower,
    pub levels: Vec<TowerLevelState>,
    pub transitions: Vec<Transition>,
}

impl SplitChainRun {
    pub fn split_count(&self) -> BigUint {
        self.levels
            .last()
            .map(|s| s.dist.mass())
            .unwrap_or_default()
    }
}

/// Runs the chain propagation up to level `m`, checking admissibility,
/// fiber sizes and the per-level mass.
pub fn split_chain_levels(q: u64, m: u32) -> Result<SplitChainRun, GsError> {
    if m < 1 {
        return Err(GsError::BadLevel);
    }
    let sub = PrimePower::from_q(q)?;
    let ctx = FieldContext::with_cap(sub.squared()?, MAX_FIELD_SIZE)?;
    let one = ctx.one();
    let trace = |x: Fe| ctx.add(ctx.pow(x, q), x);
    let admissible = |v: Fe| ctx.add(ctx.pow(v, q - 1), one) != ctx.zero();

    let first = ValueDistribution::from_support(ctx.elements().filter(|&a| trace(a) != ctx.zero()));
    let mut levels = vec![TowerLevelState {
        level: 1,
        dist: first,
    }];
    let mut transitions = Vec::new();
    let mut fibers: BTreeMap<Fe, Vec<Fe>> = BTreeMap::new();
    check_level(&ctx, q, &levels[0], admissible)?;
    for level in 2..=m {
        let prev = &levels.last().expect("level 1 present").dist;
        let (dist, t) = prev.push_forward(|v| {
            let denom = ctx.add(ctx.pow(v, q - 1), one);
            let rhs =
                ctx.div(ctx.pow(v, q), denom)
                    .map_err(|_| GsError::AdmissibilityViolation {
                        level: level - 1,
                        value: ctx.display(v),
                    })?;
            if let std::collections::btree_map::Entry::Vacant(e) = fibers.entry(rhs) {
                e.insert(solve_artin_schreier(&ctx, q, rhs)?);
            }
            let fiber = fibers[&rhs].clone();
            if fiber.len() as u64 != q {
                return Err(GsError::FiberSize {
                    level,
                    expected: q,
                    found: fiber.len(),
                });
            }
            Ok(fiber)
        })?;
        let state = TowerLevelState { level, dist };
        check_level(&ctx, q, &state, admissible)?;
        transitions.push(t);
        levels.push(state);
    }
    Ok(SplitChainRun {
        q: sub,
        levels,
        transitions,
    })
}

fn check_level(
    ctx: &FieldContext,
    q: u64,
    state: &TowerLevelState,
    admissible: impl Fn(Fe) -> bool,
) -> Result<(), GsError> {
    if let Some((v, _)) = state.dist.iter().find(|(v, _)| !admissible(*v)) {
        return Err(GsError::AdmissibilityViolation {
            level: state.level,
            value: ctx.display(v),
        });
    }
    let expected = BigUint::from(q * q - q) * BigUint::from(q).pow(state.level - 1);
    let found = state.dist.mass();
    if found != expected {
        return Err(GsError::MassMismatch {
            level: state.level,
            expected,
            found,
        });
    }
    Ok(())
}

/// Number of split solution chains at level `m`; always `(q-1) q^m`.
pub fn count_split_chains(q: u64, m: u32) -> Result<BigUint, GsError> {
    Ok(split_chain_levels(q, m)?.split_count())
}

/// `(q^2 - q) / (q + 1)`.
pub fn ratio_limit(q: u64) -> BigRational {
    BigRational::new((q * q - q).into(), (q + 1).into())
}

/// `(q-1) q^m / (c_m + q^{m-1} - 1)` for `m = 2..=m_max`.
///
/// The first level is skipped: there the denominator vanishes.
pub fn tower_ratio_sequence(q: u64, m_max: u32) -> Vec<(u32, BigRational)> {
    (2..=m_max)
        .map(|m| {
            let denom = conductor_cm_big(q, m) + BigUint::from(q).pow(m - 1) - BigUint::one();
            debug_assert!(!denom.is_zero());
            let value = BigRational::new(n1_lower_bound(q, m).into(), denom.into());
            (m, value)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    /// Counts split chains by enumerating every tuple in `F_{q^2}^m`.
    fn chains_by_enumeration(q: u64, m: u32) -> u64 {
        let sub = PrimePower::from_q(q).unwrap();
        let ctx = FieldContext::new(sub.squared().unwrap()).unwrap();
        let n = ctx.q();
        let mut count = 0;
        for t in 0..n.pow(m) {
            let xs: Vec<Fe> = (0..m)
                .map(|i| ctx.element(t / n.pow(i) % n).unwrap())
                .collect();
            if ctx.add(ctx.pow(xs[0], q), xs[0]) == ctx.zero() {
                continue;
            }
            let ok = xs.windows(2).all(|w| {
                let (a, b) = (w[0], w[1]);
                let lhs = ctx.add(ctx.pow(b, q), b);
                let denom = ctx.add(ctx.pow(a, q - 1), ctx.one());
                // clear the denominator: (b^q + b)(a^{q-1} + 1) = a^q, denominator nonzero
                !ctx.is_zero(denom) && ctx.mul(lhs, denom) == ctx.pow(a, q)
            });
            if ok {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn genus_examples() {
        assert_eq!(gs_genus(2, 2), 1u32.into());
        assert_eq!(gs_genus(2, 3), 3u32.into());
        assert_eq!(gs_genus(3, 1), 0u32.into());
        assert_eq!(gs_genus(2, 4), 9u32.into());
        assert_eq!(gs_genus(3, 2), 4u32.into());
    }

    #[test]
    fn n1_examples() {
        assert_eq!(n1_lower_bound(2, 2), 4u32.into());
        assert_eq!(n1_lower_bound(3, 3), 54u32.into());
        assert_eq!(n1_lower_bound(2, 1), 2u32.into());
    }

    #[test]
    fn enumeration_oracle_values() {
        assert_eq!(chains_by_enumeration(2, 1), 2);
        assert_eq!(chains_by_enumeration(2, 2), 4);
        assert_eq!(chains_by_enumeration(3, 2), 18);
        assert_eq!(chains_by_enumeration(2, 4), 16);
        assert_eq!(chains_by_enumeration(4, 2), 48);
    }

    #[test]
    fn split_chain_examples() {
        assert_eq!(count_split_chains(2, 2).unwrap(), 4u32.into());
        assert_eq!(count_split_chains(2, 1).unwrap(), 2u32.into());
        assert_eq!(count_split_chains(3, 2).unwrap(), 18u32.into());
        for &(q, m) in &[(2u64, 4u32), (4, 2), (3, 3)] {
            assert_eq!(
                count_split_chains(q, m).unwrap(),
                BigUint::from(chains_by_enumeration(q, m))
            );
        }
    }

    #[test]
    fn split_chains_match_lower_bound_and_full_fibers() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let run = split_chain_levels(q, 6).unwrap();
            assert_eq!(run.split_count(), n1_lower_bound(q, 6));
            for t in &run.transitions {
                assert_eq!((t.min_fiber, t.max_fiber), (q as usize, q as usize));
                assert!(t.conserves_mass(q * q));
            }
        }
    }

    #[test]
    fn split_chain_errors() {
        assert_eq!(count_split_chains(2, 0), Err(GsError::BadLevel));
        assert_eq!(
            count_split_chains(6, 2),
            Err(GsError::Field(GfError::NotPrimePower(6)))
        );
        assert!(matches!(
            count_split_chains(2048, 2),
            Err(GsError::Field(GfError::FieldTooLarge { .. }))
        ));
    }

    #[test]
    fn ratio_examples() {
        let seq = tower_ratio_sequence(2, 4);
        assert_eq!(
            seq.last().unwrap(),
            &(4, BigRational::new(16.into(), 19.into()))
        );
        assert_eq!(seq.first().unwrap().0, 2);
        assert_eq!(ratio_limit(2), BigRational::new(2.into(), 3.into()));
        assert_eq!(ratio_limit(3), BigRational::new(3.into(), 2.into()));
        assert!(tower_ratio_sequence(5, 1).is_empty());
    }

    #[test]
    fn ratio_converges_and_is_eventually_monotone() {
        let tol = BigRational::new(1.into(), 1000.into());
        for q in 2..=5u64 {
            let seq = tower_ratio_sequence(q, 60);
            let limit = ratio_limit(q);
            for (m, v) in &seq {
                if *m >= 40 {
                    assert!((v - &limit).abs() < tol, "q={q} m={m}");
                }
            }
            // from m = 10 on, the distance to the limit shrinks
            let dist: Vec<BigRational> = seq
                .iter()
                .filter(|(m, _)| *m >= 10)
                .map(|(_, v)| (v - &limit).abs())
                .collect();
            assert!(dist.windows(2).all(|w| w[1] < w[0]), "q={q}");
        }
    }
}
