//! Numerical semigroups and the Weierstrass semigroups `H(P_∞^{(m)})` of the
//! Garcia–Stichtenoth tower.
//!
//! A [`NumericalSemigroup`] is stored as a membership bitmap over
//! `[0, c)` where `c` is its conductor; everything at or above `c` is a
//! member. The tower semigroups satisfy
//!
//! ```text
//! H_1 = Z_{>=0},    H_m = q·H_{m-1} ∪ Z_{>=c_m},    c_m = q^m - q^{ceil(m/2)}
//! ```
//!
//! and their gap counts reproduce the genera of the tower.

use bitvec::prelude::*;
use thiserror::Error;

/// Largest conductor a semigroup bitmap may hold.
pub const MAX_CONDUCTOR: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("q must be at least 2 (got {0})")]
    BadQ(u64),
    #[error("m must be at least {min} (got {m})")]
    BadLevel { m: u32, min: u32 },
    #[error("conductor for q={q}, m={m} exceeds the bitmap cap of {cap}")]
    TooLarge { q: u64, m: u32, cap: u64 },
    #[error("recomputed conductor {found} differs from the closed form {expected}")]
    ConductorMismatch { expected: u64, found: u64 },
    #[error("member set does not contain 0")]
    MissingZero,
}

/// A cofinite additive submonoid of the non-negative integers.
#[derive(Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    conductor: u64,
    window: BitVec,
}

impl std::fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let shown: Vec<u64> = self.small_members().take(16).collect();
        f.debug_struct("NumericalSemigroup")
            .field("conductor", &self.conductor)
            .field("small_members", &shown)
            .finish()
    }
}

impl NumericalSemigroup {
    /// `Z_{>=0}`.
    pub fn naturals() -> Self {
        Self {
            conductor: 0,
            window: BitVec::new(),
        }
    }

    /// Builds the set whose members below `bound` are given by `window` and
    /// which contains every integer `>= bound`; the stored conductor is the
    /// true minimal one. Closure under addition is the caller's concern.
    pub fn from_window(mut window: BitVec) -> Result<Self, SemigroupError> {
        if !window.is_empty() && !window[0] {
            return Err(SemigroupError::MissingZero);
        }
        let conductor = window.last_zero().map_or(0, |i| i + 1);
        window.truncate(conductor);
        Ok(Self {
            conductor: conductor as u64,
            window,
        })
    }

    /// The semigroup generated by `gens`, computed by a sum sieve up to
    /// `limit` and assumed to contain every integer `>= limit`.
    pub fn generated_by(gens: &[u64], limit: u64) -> Result<Self, SemigroupError> {
        Self::from_window(closure_window(gens, limit))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= self.conductor || self.window[n as usize]
    }

    /// Number of gaps, i.e. non-members below the conductor.
    pub fn gap_count(&self) -> u64 {
        self.window.count_zeros() as u64
    }

    pub fn gaps(&self) -> impl Iterator<Item = u64> + '_ {
        self.window.iter_zeros().map(|i| i as u64)
    }

    /// Members below the conductor, ascending, starting with 0.
    pub fn small_members(&self) -> impl Iterator<Item = u64> + '_ {
        self.window.iter_ones().map(|i| i as u64)
    }

    /// Smallest positive member.
    pub fn multiplicity(&self) -> u64 {
        self.small_members()
            .find(|&n| n > 0)
            .unwrap_or(self.conductor.max(1))
    }

    /// The unique minimal generating set.
    ///
    /// A decomposition `n = a + b` of a member `n < c + γ_1` into positive
    /// members forces `a, b <= n - γ_1 < c`, so sieving sums of pairs of
    /// positive members below the conductor decides every candidate.
    pub fn minimal_generators(&self) -> GeneratorSet {
        let gamma1 = self.multiplicity();
        // Z_{>=0} has c = 0 and the single generator 1 = c + γ_1
        let limit = (self.conductor + gamma1).max(2);
        let mut decomposable: BitVec = bitvec![0; limit as usize];
        let small: Vec<u64> = self.small_members().filter(|&n| n > 0).collect();
        for (i, &a) in small.iter().enumerate() {
            for &b in &small[i..] {
                let s = a + b;
                if s >= limit {
                    break;
                }
                decomposable.set(s as usize, true);
            }
        }
        let gens = (1..limit)
            .filter(|&n| self.contains(n) && !decomposable[n as usize])
            .collect();
        GeneratorSet { gens }
    }
}

/// Members of `⟨gens⟩` below `limit`.
pub fn closure_window(gens: &[u64], limit: u64) -> BitVec {
    let mut reach: BitVec = bitvec![0; limit as usize];
    if limit == 0 {
        return reach;
    }
    reach.set(0, true);
    for n in 1..limit {
        let hit = gens
            .iter()
            .any(|&g| g > 0 && g <= n && reach[(n - g) as usize]);
        if hit {
            reach.set(n as usize, true);
        }
    }
    reach
}

/// Strictly increasing minimal generators `γ_1 < … < γ_ℓ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    gens: Vec<u64>,
}

impl GeneratorSet {
    pub fn as_slice(&self) -> &[u64] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn first(&self) -> Option<u64> {
        self.gens.first().copied()
    }

    pub fn last(&self) -> Option<u64> {
        self.gens.last().copied()
    }
}

fn check_q(q: u64) -> Result<(), SemigroupError> {
    if q < 2 {
        return Err(SemigroupError::BadQ(q));
    }
    Ok(())
}

/// `c_m = q^m - q^{ceil(m/2)}`, or `None` on overflow.
pub fn conductor_cm_checked(q: u64, m: u32) -> Option<u128> {
    let big = (q as u128).checked_pow(m)?;
    let small = (q as u128).checked_pow(m.div_ceil(2))?;
    Some(big - small)
}

/// `c_m = q^m - q^{ceil(m/2)}`.
pub fn conductor_cm(q: u64, m: u32) -> Result<u128, SemigroupError> {
    check_q(q)?;
    if m < 1 {
        return Err(SemigroupError::BadLevel { m, min: 1 });
    }
    conductor_cm_checked(q, m).ok_or(SemigroupError::TooLarge {
        q,
        m,
        cap: MAX_CONDUCTOR,
    })
}

/// `c_m` without any size limit.
pub fn conductor_cm_big(q: u64, m: u32) -> num_bigint::BigUint {
    let q = num_bigint::BigUint::from(q);
    q.pow(m) - q.pow(m.div_ceil(2))
}

/// `H(P_∞^{(m)})` from the level recursion.
pub fn weierstrass_semigroup(q: u64, m: u32) -> Result<NumericalSemigroup, SemigroupError> {
    let cm = conductor_cm(q, m)?;
    if cm > MAX_CONDUCTOR as u128 {
        return Err(SemigroupError::TooLarge {
            q,
            m,
            cap: MAX_CONDUCTOR,
        });
    }
    let mut h = NumericalSemigroup::naturals();
    for level in 2..=m {
        let c = conductor_cm_checked(q, level).expect("bounded by c_m") as u64;
        let mut window: BitVec = bitvec![0; c as usize];
        for n in (0..c).step_by(q as usize) {
            if h.contains(n / q) {
                window.set(n as usize, true);
            }
        }
        h = NumericalSemigroup::from_window(window)?;
        if h.conductor() != c {
            return Err(SemigroupError::ConductorMismatch {
                expected: c,
                found: h.conductor(),
            });
        }
    }
    Ok(h)
}

/// Outcome of checking `γ_1 = q^{m-1}` and `γ_ℓ <= c_m + q^{m-1} - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorBoundReport {
    pub q: u64,
    pub m: u32,
    pub conductor: u64,
    pub gamma_first: u64,
    pub gamma_last: u64,
    pub generator_count: usize,
    /// `c_m + q^{m-1} - 1`.
    pub gamma_last_bound: u64,
    pub gamma_first_ok: bool,
    pub gamma_last_ok: bool,
}

impl GeneratorBoundReport {
    pub fn passed(&self) -> bool {
        self.gamma_first_ok && self.gamma_last_ok
    }
}

pub fn check_generator_bounds(q: u64, m: u32) -> Result<GeneratorBoundReport, SemigroupError> {
    if m < 2 {
        return Err(SemigroupError::BadLevel { m, min: 2 });
    }
    let h = weierstrass_semigroup(q, m)?;
    let gens = h.minimal_generators();
    let expected_first = q.pow(m - 1);
    let conductor = h.conductor();
    let gamma_first = gens.first().expect("nonzero conductor");
    let gamma_last = gens.last().expect("nonzero conductor");
    let gamma_last_bound = conductor + expected_first - 1;
    Ok(GeneratorBoundReport {
        q,
        m,
        conductor,
        gamma_first,
        gamma_last,
        generator_count: gens.len(),
        gamma_last_bound,
        gamma_first_ok: gamma_first == expected_first,
        gamma_last_ok: gamma_last <= gamma_last_bound,
    })
}
