//! Multisets of field values with big-integer multiplicities.
//!
//! Chain-counting recursions keep one of these per level: the multiplicity
//! of `v` is the number of partial solution chains whose last coordinate is
//! `v`. Pushing the distribution through a fiber map gives the next level.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::gf::{Fe, FieldContext};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValueDistribution {
    entries: BTreeMap<Fe, BigUint>,
}

/// Bookkeeping for one push-forward step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transition {
    pub incoming_mass: BigUint,
    pub outgoing_mass: BigUint,
    /// `Σ_v mult(v) · |fiber(v)|`, accumulated independently of the new map.
    pub weighted_fiber_mass: BigUint,
    pub min_fiber: usize,
    pub max_fiber: usize,
}

impl Transition {
    /// Outgoing mass equals the weighted fiber sum and is at most
    /// `field_size` times the incoming mass.
    pub fn conserves_mass(&self, field_size: u64) -> bool {
        self.outgoing_mass == self.weighted_fiber_mass
            && self.outgoing_mass <= &self.incoming_mass * field_size
    }
}

impl ValueDistribution {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every element of the field with multiplicity one.
    pub fn uniform(ctx: &FieldContext) -> Self {
        Self::from_support(ctx.elements())
    }

    pub fn from_support(values: impl IntoIterator<Item = Fe>) -> Self {
        let mut d = Self::new();
        for v in values {
            d.add(v, BigUint::one());
        }
        d
    }

    /// Adds `mult` to the multiplicity of `v`. Zero multiplicities are
    /// never stored.
    pub fn add(&mut self, v: Fe, mult: BigUint) {
        if mult.is_zero() {
            return;
        }
        *self.entries.entry(v).or_default() += mult;
    }

    pub fn multiplicity(&self, v: Fe) -> BigUint {
        self.entries.get(&v).cloned().unwrap_or_default()
    }

    pub fn mass(&self) -> BigUint {
        self.entries.values().sum()
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Fe, &BigUint)> {
        self.entries.iter().map(|(&v, m)| (v, m))
    }

    /// Sends each value `v` to every element of `fiber(v)`, carrying its
    /// multiplicity along.
    pub fn push_forward<E>(
        &self,
        mut fiber: impl FnMut(Fe) -> Result<Vec<Fe>, E>,
    ) -> Result<(ValueDistribution, Transition), E> {
        let mut next = ValueDistribution::new();
        let mut weighted = BigUint::zero();
        let mut min_fiber = usize::MAX;
        let mut max_fiber = 0;
        for (&v, mult) in &self.entries {
            let targets = fiber(v)?;
            min_fiber = min_fiber.min(targets.len());
            max_fiber = max_fiber.max(targets.len());
            weighted += mult * targets.len();
            for t in targets {
                next.add(t, mult.clone());
            }
        }
        if self.entries.is_empty() {
            min_fiber = 0;
        }
        let transition = Transition {
            incoming_mass: self.mass(),
            outgoing_mass: next.mass(),
            weighted_fiber_mass: weighted,
            min_fiber,
            max_fiber,
        };
        Ok((next, transition))
    }
}
