//! Rational points on the complete-intersection curves `X_ℓ ⊂ P^ℓ` cut out by
//!
//! ```text
//! x_{i+1}^{q-1} = -z^{q-1} + (x_i + z)^{q-1},   i = 1, …, ℓ-1
//! ```
//!
//! over `F_q` with `q > 2`. The curve has degree `(q-1)^{ℓ-1}` and exactly
//! as many points on the hyperplane `z = 0`, so its point count divided by
//! its degree never drops below one.
//!
//! Affine points are counted by pushing a [`ValueDistribution`] through the
//! defining recursion, which needs `O(q)` state per level instead of the
//! `q^ℓ` tuples a direct search would visit. [`brute_force_projective`] is
//! the direct search, kept as an independent oracle.

use std::collections::BTreeMap;
use std::convert::Infallible;

use num_bigint::BigUint;
use num_rational::BigRational;
use thiserror::Error;

use crate::distribution::{Transition, ValueDistribution};
use crate::gf::{solve_power_residue, Fe, FieldContext, GfError, PrimePower};
use crate::projective::for_each_point;

/// Tuple budget for the brute-force oracle.
pub const BRUTE_FORCE_LIMIT: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HommaError {
    #[error("q = {0} is too small: the family needs q strictly larger than two")]
    QTooSmall(u64),
    #[error("ell = {0} is too small: the family needs ell >= 2")]
    EllTooSmall(usize),
    #[error("q^ell = {q}^{ell} exceeds the brute-force budget of {limit}")]
    TooLarge { q: u64, ell: usize, limit: u128 },
    #[error("infinity count mismatch: closed form {analytic}, enumeration {enumerated}")]
    InfinityMismatch {
        analytic: BigUint,
        enumerated: BigUint,
    },
    #[error(transparent)]
    Field(#[from] GfError),
}

/// Affine, at-infinity and total rational point counts of a projective curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointCount {
    affine: BigUint,
    infinity: BigUint,
    total: BigUint,
}

impl PointCount {
    pub fn new(affine: BigUint, infinity: BigUint) -> Self {
        let total = &affine + &infinity;
        Self {
            affine,
            infinity,
            total,
        }
    }

    pub fn affine(&self) -> &BigUint {
        &self.affine
    }

    pub fn infinity(&self) -> &BigUint {
        &self.infinity
    }

    pub fn total(&self) -> &BigUint {
        &self.total
    }
}

fn check_params(q: PrimePower, ell: usize) -> Result<(), HommaError> {
    if q.q() <= 2 {
        return Err(HommaError::QTooSmall(q.q()));
    }
    if ell < 2 {
        return Err(HommaError::EllTooSmall(ell));
    }
    Ok(())
}

fn tuple_count(q: PrimePower, ell: usize) -> u128 {
    (q.q() as u128).saturating_pow(ell as u32)
}

/// `deg X_ℓ = (q-1)^{ℓ-1}`.
pub fn homma_degree(q: PrimePower, ell: usize) -> Result<BigUint, HommaError> {
    check_params(q, ell)?;
    Ok(BigUint::from(q.q() - 1).pow(ell as u32 - 1))
}

/// Points of `X_ℓ` on `z = 0`.
///
/// Returns the closed form `(q-1)^{ℓ-1}`; when `q^ℓ` is within the
/// brute-force budget the hyperplane is also enumerated and the two counts
/// must agree.
pub fn count_infinity(q: PrimePower, ell: usize) -> Result<BigUint, HommaError> {
    let analytic = homma_degree(q, ell)?;
    if tuple_count(q, ell) <= BRUTE_FORCE_LIMIT {
        let enumerated = enumerate_infinity(q, ell)?;
        if enumerated != analytic {
            return Err(HommaError::InfinityMismatch {
                analytic,
                enumerated,
            });
        }
    }
    Ok(analytic)
}

fn enumerate_infinity(q: PrimePower, ell: usize) -> Result<BigUint, HommaError> {
    let ctx = FieldContext::new(q)?;
    let k = q.q() - 1;
    let mut count = 0u64;
    // points [x_1 : … : x_ℓ : 0] are the points of P^{ℓ-1}
    for_each_point(&ctx, ell - 1, |xs| {
        if xs.windows(2).all(|w| ctx.pow(w[1], k) == ctx.pow(w[0], k)) {
            count += 1;
        }
        true
    });
    Ok(BigUint::from(count))
}

/// Affine points (`z = 1`) together with the per-level transitions of the
/// counting recursion.
pub fn affine_levels(
    q: PrimePower,
    ell: usize,
) -> Result<(ValueDistribution, Vec<Transition>), HommaError> {
    check_params(q, ell)?;
    let ctx = FieldContext::new(q)?;
    let k = q.q() - 1;
    let minus_one = ctx.neg(ctx.one());
    let mut residues: BTreeMap<Fe, Vec<Fe>> = BTreeMap::new();
    let mut dist = ValueDistribution::uniform(&ctx);
    let mut transitions = Vec::with_capacity(ell - 1);
    for _ in 1..ell {
        let (next, t) = dist
            .push_forward::<Infallible>(|v| {
                let rhs = ctx.add(minus_one, ctx.pow(ctx.add(v, ctx.one()), k));
                Ok(residues
                    .entry(rhs)
                    .or_insert_with(|| solve_power_residue(&ctx, rhs, k))
                    .clone())
            })
            .unwrap_or_else(|never| match never {});
        transitions.push(t);
        dist = next;
    }
    Ok((dist, transitions))
}

/// Number of affine solutions `(x_1, …, x_ℓ) ∈ F_q^ℓ` with `z = 1`.
pub fn count_affine(q: PrimePower, ell: usize) -> Result<BigUint, HommaError> {
    Ok(affine_levels(q, ell)?.0.mass())
}

pub fn count_total(q: PrimePower, ell: usize) -> Result<PointCount, HommaError> {
    let affine = count_affine(q, ell)?;
    let infinity = count_infinity(q, ell)?;
    Ok(PointCount::new(affine, infinity))
}

/// `|X_ℓ(F_q)| / deg X_ℓ` as a reduced rational.
pub fn point_degree_ratio(q: PrimePower, ell: usize) -> Result<BigRational, HommaError> {
    let total = count_total(q, ell)?;
    let degree = homma_degree(q, ell)?;
    Ok(BigRational::new(
        total.total().clone().into(),
        degree.into(),
    ))
}

/// Counts the points of `X_ℓ` by checking every normalized point of
/// `P^ℓ(F_q)` against all `ℓ-1` homogeneous equations.
pub fn brute_force_projective(q: PrimePower, ell: usize) -> Result<PointCount, HommaError> {
    check_params(q, ell)?;
    if tuple_count(q, ell) > BRUTE_FORCE_LIMIT {
        return Err(HommaError::TooLarge {
            q: q.q(),
            ell,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let ctx = FieldContext::new(q)?;
    let k = q.q() - 1;
    let (mut affine, mut infinity) = (0u64, 0u64);
    // coordinates ordered (x_1, …, x_ℓ, z)
    for_each_point(&ctx, ell, |pt| {
        let z = pt[ell];
        let zk = ctx.pow(z, k);
        let on_curve = (0..ell - 1).all(|i| {
            let lhs = ctx.pow(pt[i + 1], k);
            let rhs = ctx.sub(ctx.pow(ctx.add(pt[i], z), k), zk);
            lhs == rhs
        });
        if on_curve {
            if ctx.is_zero(z) {
                infinity += 1;
            } else {
                affine += 1;
            }
        }
        true
    });
    Ok(PointCount::new(affine.into(), infinity.into()))
}

/// Whether `total >= degree`, i.e. the exact ratio is at least one.
pub fn ratio_at_least_one(count: &PointCount, degree: &BigUint) -> bool {
    count.total() >= degree
}
