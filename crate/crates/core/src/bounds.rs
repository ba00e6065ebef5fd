//! Exact bounds on point counts and on the constant `D(q)`.
//!
//! `D(q)` is the limsup over `d` of `M_q(d)/d`, where `M_q(d)` is the largest
//! number of `F_q`-points on an irreducible projective curve of degree `d`
//! in a projective space of any dimension. Known facts about it:
//!
//! * `D(q) <= q - 1`, the `n → ∞` limit of the nondegenerate-curve bound
//!   coefficient `(q-1)(q^{n+1}-1) / (q(q^n-1) - n(q-1))`;
//! * `D(q) >= 1` for `q > 2` (the projective family in
//!   [`crate::homma_family`]);
//! * `D(r^2) >= (r^2 - r)/(r + 1)` (the tower in [`crate::gs_tower`]);
//! * `D(q) >= A(q)/2`, fed by lower bounds on Ihara's constant `A(q)`.
//!
//! All values are reduced rationals; literature decimals are kept verbatim.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::gf::{make_field, FieldContext, GfError, PrimePower};
use crate::projective::for_each_point;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error("n must be at least 2 (got {0})")]
    BadDimension(u32),
    #[error("degree d must be at least 1")]
    BadDegree,
    #[error("denominator q(q^n-1) - n(q-1) is not positive for q={q}, n={n}")]
    DegenerateDenominator { q: u64, n: u32 },
    #[error("coefficient for q={q} did not come within {eps} of q-1 for any n <= {n_max}")]
    NotConverged { q: u64, n_max: u32, eps: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Direction {
    Upper,
    Lower,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Upper => "upper",
            Direction::Lower => "lower",
        })
    }
}

/// A named bound on `D(q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRecord {
    pub name: &'static str,
    pub q: u64,
    pub direction: Direction,
    pub value: BigRational,
    pub source: String,
}

/// One row of the table of known lower bounds on `A(q)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AqTableEntry {
    pub q: u64,
    /// Truncated decimal, as printed in the literature.
    pub half_aq_lower: &'static str,
    pub reference: &'static str,
}

impl AqTableEntry {
    pub fn value(&self) -> BigRational {
        parse_decimal(self.half_aq_lower)
    }
}

const AQ_TABLE: [AqTableEntry; 12] = [
    AqTableEntry {
        q: 3,
        half_aq_lower: "0.2464",
        reference: "DM13",
    },
    AqTableEntry {
        q: 4,
        half_aq_lower: "0.5",
        reference: "Ihara,TVZ",
    },
    AqTableEntry {
        q: 5,
        half_aq_lower: "0.3636",
        reference: "Tem01,AM02",
    },
    AqTableEntry {
        q: 7,
        half_aq_lower: "0.4615",
        reference: "HS13",
    },
    AqTableEntry {
        q: 8,
        half_aq_lower: "0.75",
        reference: "Zink",
    },
    AqTableEntry {
        q: 11,
        half_aq_lower: "0.5714",
        reference: "HS13",
    },
    AqTableEntry {
        q: 13,
        half_aq_lower: "0.6",
        reference: "LM02",
    },
    AqTableEntry {
        q: 17,
        half_aq_lower: "0.8",
        reference: "LM02",
    },
    AqTableEntry {
        q: 19,
        half_aq_lower: "0.8",
        reference: "HS13",
    },
    AqTableEntry {
        q: 23,
        half_aq_lower: "0.9230",
        reference: "HS13",
    },
    AqTableEntry {
        q: 29,
        half_aq_lower: "0.9523",
        reference: "HS13",
    },
    AqTableEntry {
        q: 31,
        half_aq_lower: "0.9523",
        reference: "HS13",
    },
];

/// Outside the table, `A(q) >= 2` is known unless `q` is prime. Kept as a
/// note only: there is no formula to attach to it.
pub const AQ_REMARK: &str =
    "A(q) >= 2 is known for every q outside the table, possibly except when q is prime";

pub fn aq_table() -> &'static [AqTableEntry] {
    &AQ_TABLE
}

/// Exact value of a plain decimal literal such as `0.9230`.
pub fn parse_decimal(s: &str) -> BigRational {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits: BigInt = format!("{int}{frac}").parse().expect("decimal literal");
    let scale = BigInt::from(10u32).pow(frac.len() as u32);
    BigRational::new(digits, scale)
}

/// `⌊q + 1 + 2g√q⌋`, using `⌊2g√q⌋ = isqrt(4 g^2 q)`.
pub fn weil_bound(q: u64, g: u64) -> BigUint {
    let q = BigUint::from(q);
    let g = BigUint::from(g);
    let radicand = BigUint::from(4u32) * &g * &g * &q;
    q + BigUint::one() + radicand.sqrt()
}

/// `(d - 1) q + 1`.
pub fn sziklai_bound(q: u64, d: u64) -> Result<BigUint, BoundsError> {
    if d == 0 {
        return Err(BoundsError::BadDegree);
    }
    Ok(BigUint::from(d - 1) * BigUint::from(q) + BigUint::one())
}

/// `(q-1)(q^{n+1}-1) / (q(q^n-1) - n(q-1))`: the number of rational points
/// of a nondegenerate irreducible degree-`d` curve in `P^n` is at most this
/// coefficient times `d`.
pub fn homma_nondegenerate_coefficient(q: u64, n: u32) -> Result<BigRational, BoundsError> {
    if n < 2 {
        return Err(BoundsError::BadDimension(n));
    }
    let qb = BigInt::from(q);
    let one = BigInt::one();
    let num = (&qb - &one) * (qb.pow(n + 1) - &one);
    let den = &qb * (qb.pow(n) - &one) - BigInt::from(n) * (&qb - &one);
    if !den.is_positive() {
        return Err(BoundsError::DegenerateDenominator { q, n });
    }
    Ok(BigRational::new(num, den))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitReport {
    pub q: u64,
    pub n_max: u32,
    /// Smallest `n0` with `|coefficient(q, n) - (q-1)| < eps` for every
    /// `n0 <= n <= n_max`.
    pub n0: u32,
    pub distance_at_n0: BigRational,
}

/// Checks that the nondegenerate coefficient settles within `eps` of
/// `q - 1` before `n_max`, by exact comparison.
pub fn upper_limit_check(
    q: u64,
    n_max: u32,
    eps: &BigRational,
) -> Result<LimitReport, BoundsError> {
    if n_max < 2 {
        return Err(BoundsError::BadDimension(n_max));
    }
    let target = BigRational::from_integer(BigInt::from(q) - 1);
    let mut n0 = None;
    let mut dist0 = BigRational::zero();
    for n in (2..=n_max).rev() {
        let dist = (homma_nondegenerate_coefficient(q, n)? - &target).abs();
        if dist < *eps {
            n0 = Some(n);
            dist0 = dist;
        } else {
            break;
        }
    }
    match n0 {
        Some(n0) => Ok(LimitReport {
            q,
            n_max,
            n0,
            distance_at_n0: dist0,
        }),
        None => Err(BoundsError::NotConverged {
            q,
            n_max,
            eps: eps.to_string(),
        }),
    }
}

/// Every bound on `D(q)` that applies to this `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DqSummary {
    pub q: u64,
    pub records: Vec<BoundRecord>,
}

impl DqSummary {
    pub fn upper(&self) -> &BoundRecord {
        self.records
            .iter()
            .find(|r| r.direction == Direction::Upper)
            .expect("upper bound always present")
    }

    pub fn lower_records(&self) -> impl Iterator<Item = &BoundRecord> {
        self.records
            .iter()
            .filter(|r| r.direction == Direction::Lower)
    }

    /// The largest lower bound; `None` when nothing is known (`q = 2`).
    /// Ties go to the earliest record.
    pub fn best_lower(&self) -> Option<&BoundRecord> {
        self.lower_records().fold(None, |best, r| match best {
            Some(b) if b.value >= r.value => Some(b),
            _ => Some(r),
        })
    }
}

/// `1 / (1/(p^k - 1) + 1/(p^{k+1} - 1))`, the odd-power lower bound on
/// `A(p^{2k+1})/2`.
pub fn odd_power_half_aq(p: u64, k: u32) -> BigRational {
    let p = BigInt::from(p);
    let a = p.pow(k) - 1;
    let b = p.pow(k + 1) - 1;
    let sum = BigRational::new(1.into(), a) + BigRational::new(1.into(), b);
    sum.recip()
}

pub fn dq_bounds_summary(q: u64) -> Result<DqSummary, BoundsError> {
    let pp = PrimePower::from_q(q)?;
    let mut records = vec![BoundRecord {
        name: "nondegenerate_limit",
        q,
        direction: Direction::Upper,
        value: BigRational::from_integer((q - 1).into()),
        source: "limit of the nondegenerate-curve bound".into(),
    }];
    if q > 2 {
        records.push(BoundRecord {
            name: "projective_family",
            q,
            direction: Direction::Lower,
            value: BigRational::one(),
            source: "complete intersections X_l, q > 2".into(),
        });
    }
    if let Some(r) = pp.square_root() {
        let r = r.q();
        records.push(BoundRecord {
            name: "gs_tower",
            q,
            direction: Direction::Lower,
            value: BigRational::new((r * r - r).into(), (r + 1).into()),
            source: format!("Garcia-Stichtenoth tower over F_{r}^2"),
        });
    }
    if let Some(row) = AQ_TABLE.iter().find(|row| row.q == q) {
        records.push(BoundRecord {
            name: "half_aq_table",
            q,
            direction: Direction::Lower,
            value: row.value(),
            source: format!("A(q)/2 >= {} [{}]", row.half_aq_lower, row.reference),
        });
    }
    if pp.e() % 2 == 1 && pp.e() > 1 {
        let k = (pp.e() - 1) / 2;
        records.push(BoundRecord {
            name: "half_aq_odd_power",
            q,
            direction: Direction::Lower,
            value: odd_power_half_aq(pp.p(), k),
            source: format!("A(q)/2, q = {}^(2*{k}+1) [BBGS]", pp.p()),
        });
    }
    Ok(DqSummary { q, records })
}

/// `√q - 1`, exactly when `q` is a square, otherwise as a surd with a
/// rational upper cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SqrtBound {
    Exact(BigInt),
    Surd {
        radicand: u64,
        /// A rational `>= √radicand - 1`, within `10^-6`.
        cover: BigRational,
    },
}

impl SqrtBound {
    /// Exact value or rational cover.
    pub fn upper_value(&self) -> BigRational {
        match self {
            SqrtBound::Exact(v) => BigRational::from_integer(v.clone()),
            SqrtBound::Surd { cover, .. } => cover.clone(),
        }
    }
}

impl fmt::Display for SqrtBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SqrtBound::Exact(v) => write!(f, "{v}"),
            SqrtBound::Surd { radicand, cover } => write!(f, "sqrt({radicand})-1 <= {cover}"),
        }
    }
}

/// Upper bound `A(q) <= √q - 1`.
pub fn dvz_aq_upper(q: u64) -> Result<SqrtBound, BoundsError> {
    PrimePower::from_q(q)?;
    let root = q.sqrt();
    if root * root == q {
        return Ok(SqrtBound::Exact(BigInt::from(root) - 1));
    }
    let scale = BigUint::from(10u32).pow(6);
    let scaled = (BigUint::from(q) * &scale * &scale).sqrt() + BigUint::one();
    let cover = BigRational::new(scaled.into(), scale.into()) - BigRational::one();
    Ok(SqrtBound::Surd { radicand: q, cover })
}

/// The plane quartic
/// `(X+Y+Z)^4 + (XY+YZ+ZX)^2 + XYZ(X+Y+Z) = 0` evaluated at a point.
fn quartic_k(ctx: &FieldContext, pt: &[crate::gf::Fe]) -> crate::gf::Fe {
    let (x, y, z) = (pt[0], pt[1], pt[2]);
    let s = ctx.add(ctx.add(x, y), z);
    let e2 = ctx.add(ctx.add(ctx.mul(x, y), ctx.mul(y, z)), ctx.mul(z, x));
    let xyz = ctx.mul(ctx.mul(x, y), z);
    ctx.add(ctx.add(ctx.pow(s, 4), ctx.pow(e2, 2)), ctx.mul(xyz, s))
}

/// Points of `P^2(F_4)` visited and points lying on the quartic.
pub fn exceptional_quartic_scan() -> (u64, u64) {
    let ctx = make_field(2, 2).expect("F_4");
    let (mut visited, mut on_curve) = (0, 0);
    for_each_point(&ctx, 2, |pt| {
        visited += 1;
        if ctx.is_zero(quartic_k(&ctx, pt)) {
            on_curve += 1;
        }
        true
    });
    (visited, on_curve)
}

/// Rational points of the exceptional plane quartic over `F_4`.
pub fn count_exceptional_quartic() -> u64 {
    exceptional_quartic_scan().1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::prime_powers_up_to;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    /// Direct evaluation with i128 arithmetic and a hand-rolled gcd.
    fn coefficient_oracle(q: i128, n: u32) -> (i128, i128) {
        let num = (q - 1) * (q.pow(n + 1) - 1);
        let den = q * (q.pow(n) - 1) - n as i128 * (q - 1);
        let (mut a, mut b) = (num, den);
        while b != 0 {
            (a, b) = (b, a % b);
        }
        (num / a, den / a)
    }

    #[test]
    fn weil_examples() {
        assert_eq!(weil_bound(4, 1), 9u32.into());
        assert_eq!(weil_bound(2, 0), 3u32.into());
        assert_eq!(weil_bound(2, 3), 11u32.into());
    }

    #[test]
    fn sziklai_examples() {
        assert_eq!(sziklai_bound(4, 4).unwrap(), 13u32.into());
        assert_eq!(sziklai_bound(3, 1).unwrap(), 1u32.into());
        assert_eq!(sziklai_bound(5, 10).unwrap(), 46u32.into());
        assert_eq!(sziklai_bound(5, 0), Err(BoundsError::BadDegree));
    }

    #[test]
    fn coefficient_oracle_values() {
        assert_eq!(coefficient_oracle(4, 2), (7, 2));
        assert_eq!(coefficient_oracle(2, 2), (7, 4));
        assert_eq!(coefficient_oracle(3, 3), (20, 9));
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(homma_nondegenerate_coefficient(4, 2).unwrap(), rat(7, 2));
        assert_eq!(homma_nondegenerate_coefficient(2, 2).unwrap(), rat(7, 4));
        assert_eq!(homma_nondegenerate_coefficient(3, 3).unwrap(), rat(20, 9));
        assert_eq!(
            homma_nondegenerate_coefficient(3, 1),
            Err(BoundsError::BadDimension(1))
        );
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 27] {
            for n in 2..=12 {
                let (a, b) = coefficient_oracle(q as i128, n);
                assert_eq!(
                    homma_nondegenerate_coefficient(q, n).unwrap(),
                    BigRational::new(a.into(), b.into())
                );
            }
        }
    }

    #[test]
    fn coefficient_below_q_and_decreasing() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16] {
            let qr = BigRational::from_integer(q.into());
            let vals: Vec<BigRational> = (2..=40)
                .map(|n| homma_nondegenerate_coefficient(q, n).unwrap())
                .collect();
            assert!(vals.iter().all(|v| *v < qr));
            assert!(vals.windows(2).all(|w| w[1] < w[0]), "q={q}");
        }
    }

    #[test]
    fn limit_examples() {
        let eps = rat(1, 1_000_000_000);
        let r = upper_limit_check(3, 60, &eps).unwrap();
        assert!(r.n0 <= 60);
        let r = upper_limit_check(2, 60, &eps).unwrap();
        assert!(r.distance_at_n0 < eps);
        let tiny = rat(1, 1_000_000_000_000);
        assert!(matches!(
            upper_limit_check(5, 2, &tiny),
            Err(BoundsError::NotConverged { .. })
        ));
    }

    #[test]
    fn summary_examples() {
        let s = dq_bounds_summary(9).unwrap();
        assert_eq!(s.best_lower().unwrap().value, rat(3, 2));
        assert_eq!(s.upper().value, rat(8, 1));

        let s = dq_bounds_summary(4).unwrap();
        let lowers: Vec<BigRational> = s.lower_records().map(|r| r.value.clone()).collect();
        assert_eq!(lowers, vec![rat(1, 1), rat(2, 3), rat(1, 2)]);
        assert_eq!(s.best_lower().unwrap().value, rat(1, 1));
        assert_eq!(s.upper().value, rat(3, 1));

        let s = dq_bounds_summary(2).unwrap();
        assert!(s.best_lower().is_none());
        assert_eq!(s.upper().value, rat(1, 1));

        assert_eq!(
            dq_bounds_summary(10),
            Err(BoundsError::Field(GfError::NotPrimePower(10)))
        );
    }

    #[test]
    fn odd_power_record_matches_table_for_eight() {
        assert_eq!(odd_power_half_aq(2, 1), parse_decimal("0.75"));
        let s = dq_bounds_summary(32).unwrap();
        let r = s
            .lower_records()
            .find(|r| r.name == "half_aq_odd_power")
            .unwrap();
        // q = 2^5: 1/(1/3 + 1/7) = 21/10
        assert_eq!(r.value, rat(21, 10));
        assert!(dq_bounds_summary(2)
            .unwrap()
            .lower_records()
            .all(|r| r.name != "half_aq_odd_power"));
    }

    #[test]
    fn best_lower_never_exceeds_upper() {
        for pp in prime_powers_up_to(1024) {
            let s = dq_bounds_summary(pp.q()).unwrap();
            if let Some(b) = s.best_lower() {
                assert!(b.value <= s.upper().value, "q={}", pp.q());
            }
        }
    }

    #[test]
    fn table_rows() {
        let t = aq_table();
        assert_eq!(t.len(), 12);
        let get = |q| t.iter().find(|r| r.q == q).unwrap().half_aq_lower;
        assert_eq!(get(3), "0.2464");
        assert_eq!(get(8), "0.75");
        assert_eq!(get(23), "0.9230");
        assert_eq!(t[9].value(), rat(923, 1000));
    }

    #[test]
    fn dvz_examples() {
        assert_eq!(dvz_aq_upper(4).unwrap(), SqrtBound::Exact(1.into()));
        assert_eq!(dvz_aq_upper(9).unwrap(), SqrtBound::Exact(2.into()));
        match dvz_aq_upper(2).unwrap() {
            SqrtBound::Surd { radicand, cover } => {
                assert_eq!(radicand, 2);
                // cover + 1 >= √2 and within 10^-6
                let c1 = &cover + BigRational::one();
                assert!(&c1 * &c1 >= BigRational::from_integer(2.into()));
                let below = &c1 - rat(1, 1_000_000);
                assert!(&below * &below < BigRational::from_integer(2.into()));
            }
            other => panic!("expected surd, got {other:?}"),
        }
        assert!(dvz_aq_upper(6).is_err());
    }

    #[test]
    fn exceptional_quartic() {
        let (visited, on_curve) = exceptional_quartic_scan();
        assert_eq!(visited, 21);
        assert_eq!(on_curve, 14);
        assert!(BigUint::from(on_curve) > sziklai_bound(4, 4).unwrap());
    }
}
