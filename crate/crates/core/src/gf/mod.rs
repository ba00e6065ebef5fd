//! Small finite fields `F_{p^e}` with deterministic construction.
//!
//! A field is modelled as `F_p[x]/(f)` where `f` is the lexicographically
//! smallest monic irreducible polynomial of degree `e`, comparing
//! coefficients from the constant term upwards. An element is a coefficient
//! vector `(c_0, …, c_{e-1})` with `0 <= c_i < p`; [`Fe`] stores it packed as
//! the base-`p` integer `c_0 + c_1 p + … + c_{e-1} p^{e-1}`, so equality of
//! elements is coefficient-wise equality.
//!
//! Multiplication goes through discrete log / antilog tables built once per
//! context from a primitive element. The schoolbook polynomial product is
//! kept for table construction and as a test oracle.

mod poly;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Largest field any context may model.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("exponent must be at least 1")]
    ZeroExponent,
    #[error("field of size {p}^{e} exceeds the enumeration cap of {cap}")]
    FieldTooLarge { p: u64, e: u32, cap: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("coefficient {coeff} out of range for characteristic {p}")]
    BadCoefficient { coeff: u64, p: u64 },
    #[error("expected {expected} coefficients, got {got}")]
    BadLength { expected: usize, got: usize },
    #[error("F_{sub_q} is not the index-2 subfield of F_{field_q}")]
    IncompatibleSubfield { sub_q: u64, field_q: u64 },
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A prime power `q = p^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimePower {
    p: u64,
    e: u32,
    q: u64,
}

impl PrimePower {
    pub fn new(p: u64, e: u32) -> Result<Self, GfError> {
        if !is_prime(p) {
            return Err(GfError::NonPrime(p));
        }
        if e == 0 {
            return Err(GfError::ZeroExponent);
        }
        let q = p.checked_pow(e).ok_or(GfError::FieldTooLarge {
            p,
            e,
            cap: u64::MAX,
        })?;
        Ok(Self { p, e, q })
    }

    /// Factors `q` as `p^e`.
    pub fn from_q(q: u64) -> Result<Self, GfError> {
        let factors = prime_factors(q);
        if factors.len() != 1 {
            return Err(GfError::NotPrimePower(q));
        }
        let p = factors[0];
        let mut e = 0;
        let mut rest = q;
        while rest > 1 {
            rest /= p;
            e += 1;
        }
        Ok(Self { p, e, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `Some(r)` when `q = r^2`.
    pub fn square_root(&self) -> Option<PrimePower> {
        self.e.is_multiple_of(2).then(|| PrimePower {
            p: self.p,
            e: self.e / 2,
            q: self.p.pow(self.e / 2),
        })
    }

    /// `q^2` as a prime power.
    pub fn squared(&self) -> Result<PrimePower, GfError> {
        PrimePower::new(self.p, self.e * 2)
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}

/// All prime powers `q` with `2 <= q <= limit`, ascending.
pub fn prime_powers_up_to(limit: u64) -> Vec<PrimePower> {
    (2..=limit)
        .filter_map(|q| PrimePower::from_q(q).ok())
        .collect()
}

/// A field element in packed coefficient form. Only meaningful together
/// with the [`FieldContext`] that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(u32);

impl Fe {
    /// Position of the element in the context's enumeration order.
    pub fn index(self) -> u32 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow(u64),
    Inv,
    Neg,
}

/// An explicit model of `F_{p^e}`.
#[derive(Clone)]
pub struct FieldContext {
    pp: PrimePower,
    modulus: Vec<u64>,
    primitive: Fe,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("q", &self.pp.q)
            .field("modulus", &self.modulus)
            .finish()
    }
}

/// Builds `F_{p^e}` with the default size cap.
pub fn make_field(p: u64, e: u32) -> Result<FieldContext, GfError> {
    make_field_capped(p, e, MAX_FIELD_SIZE)
}

/// Builds `F_{p^e}`, rejecting fields larger than `min(cap, MAX_FIELD_SIZE)`.
pub fn make_field_capped(p: u64, e: u32, cap: u64) -> Result<FieldContext, GfError> {
    let pp = PrimePower::new(p, e).map_err(|err| match err {
        GfError::FieldTooLarge { .. } => GfError::FieldTooLarge {
            p,
            e,
            cap: cap.min(MAX_FIELD_SIZE),
        },
        other => other,
    })?;
    FieldContext::with_cap(pp, cap)
}

impl FieldContext {
    pub fn new(pp: PrimePower) -> Result<Self, GfError> {
        Self::with_cap(pp, MAX_FIELD_SIZE)
    }

    pub fn with_cap(pp: PrimePower, cap: u64) -> Result<Self, GfError> {
        let cap = cap.min(MAX_FIELD_SIZE);
        if pp.q > cap {
            return Err(GfError::FieldTooLarge {
                p: pp.p,
                e: pp.e,
                cap,
            });
        }
        let modulus = smallest_irreducible(pp.p, pp.e as usize);
        let mut ctx = FieldContext {
            pp,
            modulus,
            primitive: Fe(1),
            exp: Vec::new(),
            log: Vec::new(),
        };
        ctx.build_tables();
        Ok(ctx)
    }

    fn build_tables(&mut self) {
        let q = self.pp.q;
        let order = q - 1;
        let factors = prime_factors(order);
        let primitive = (1..q as u32)
            .map(Fe)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| self.pow_reference(g, order / r) != Fe(1))
            })
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = Fe(1);
        for i in 0..order as u32 {
            exp.push(cur.0);
            log[cur.0 as usize] = i;
            cur = self.mul_reference(cur, primitive);
        }
        debug_assert_eq!(cur, Fe(1));
        self.primitive = primitive;
        self.exp = exp;
        self.log = log;
    }

    pub fn prime_power(&self) -> PrimePower {
        self.pp
    }

    pub fn p(&self) -> u64 {
        self.pp.p
    }

    pub fn e(&self) -> u32 {
        self.pp.e
    }

    pub fn q(&self) -> u64 {
        self.pp.q
    }

    /// Monic modulus, coefficients low degree first (length `e + 1`).
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The generator of the multiplicative group used for the log tables.
    pub fn primitive_element(&self) -> Fe {
        self.primitive
    }

    pub fn zero(&self) -> Fe {
        Fe(0)
    }

    pub fn one(&self) -> Fe {
        Fe(1)
    }

    /// The class of `x` in `F_p[x]/(f)`; for a prime field this is `0`.
    pub fn x(&self) -> Fe {
        if self.pp.e == 1 {
            Fe(0)
        } else {
            Fe(self.pp.p as u32)
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Fe {
        Fe(n.rem_euclid(self.pp.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Fe, GfError> {
        let e = self.pp.e as usize;
        if coeffs.len() != e {
            return Err(GfError::BadLength {
                expected: e,
                got: coeffs.len(),
            });
        }
        let p = self.pp.p;
        let mut idx = 0u64;
        for &c in coeffs.iter().rev() {
            if c >= p {
                return Err(GfError::BadCoefficient { coeff: c, p });
            }
            idx = idx * p + c;
        }
        Ok(Fe(idx as u32))
    }

    pub fn coeffs(&self, a: Fe) -> Vec<u64> {
        let p = self.pp.p;
        let mut idx = a.0 as u64;
        (0..self.pp.e)
            .map(|_| {
                let c = idx % p;
                idx /= p;
                c
            })
            .collect()
    }

    /// Element with the given enumeration index, if in range.
    pub fn element(&self, index: u64) -> Option<Fe> {
        (index < self.pp.q).then_some(Fe(index as u32))
    }

    /// Every element, in index order (`0` first, `1` second).
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.pp.q as u32).map(Fe)
    }

    pub fn is_zero(&self, a: Fe) -> bool {
        a.0 == 0
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let p = self.pp.p;
        if p == 2 {
            return Fe(a.0 ^ b.0);
        }
        if self.pp.e == 1 {
            return Fe(((a.0 as u64 + b.0 as u64) % p) as u32);
        }
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let (mut out, mut place) = (0u64, 1u64);
        for _ in 0..self.pp.e {
            out += (x % p + y % p) % p * place;
            x /= p;
            y /= p;
            place *= p;
        }
        Fe(out as u32)
    }

    pub fn neg(&self, a: Fe) -> Fe {
        let p = self.pp.p;
        if p == 2 {
            return a;
        }
        let (mut x, mut out, mut place) = (a.0 as u64, 0u64, 1u64);
        for _ in 0..self.pp.e {
            out += (p - x % p) % p * place;
            x /= p;
            place *= p;
        }
        Fe(out as u32)
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe(0);
        }
        let order = self.exp.len();
        let s = self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize;
        Fe(self.exp[s % order])
    }

    pub fn inv(&self, a: Fe) -> Result<Fe, GfError> {
        if a.0 == 0 {
            return Err(GfError::DivisionByZero);
        }
        let order = self.exp.len();
        let l = self.log[a.0 as usize] as usize;
        Ok(Fe(self.exp[(order - l) % order]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^k` with `0^0 = 1`.
    pub fn pow(&self, a: Fe, k: u64) -> Fe {
        if k == 0 {
            return Fe(1);
        }
        if a.0 == 0 {
            return Fe(0);
        }
        let order = self.exp.len() as u64;
        let l = self.log[a.0 as usize] as u64;
        Fe(self.exp[((l as u128 * k as u128) % order as u128) as usize])
    }

    /// Frobenius `a ↦ a^p`.
    pub fn frobenius(&self, a: Fe) -> Fe {
        self.pow(a, self.pp.p)
    }

    /// Single entry point for the binary and unary operations; `b` is
    /// ignored by the unary ones.
    pub fn apply(&self, op: FieldOp, a: Fe, b: Fe) -> Result<Fe, GfError> {
        Ok(match op {
            FieldOp::Add => self.add(a, b),
            FieldOp::Sub => self.sub(a, b),
            FieldOp::Mul => self.mul(a, b),
            FieldOp::Div => self.div(a, b)?,
            FieldOp::Pow(k) => self.pow(a, k),
            FieldOp::Inv => self.inv(a)?,
            FieldOp::Neg => self.neg(a),
        })
    }

    fn mul_reference(&self, a: Fe, b: Fe) -> Fe {
        let p = self.pp.p;
        let prod = poly::mul_mod(&self.coeffs(a), &self.coeffs(b), &self.modulus, p);
        let mut idx = 0u64;
        for &c in prod.iter().rev() {
            idx = idx * p + c;
        }
        Fe(idx as u32)
    }

    /// Square-and-multiply over the schoolbook product.
    fn pow_reference(&self, a: Fe, mut k: u64) -> Fe {
        let mut acc = Fe(1);
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_reference(acc, base);
            }
            base = self.mul_reference(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn display(&self, a: Fe) -> String {
        if self.pp.e == 1 {
            return a.0.to_string();
        }
        let terms: Vec<String> = self
            .coeffs(a)
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}

fn smallest_irreducible(p: u64, e: usize) -> Vec<u64> {
    let count = p.pow(e as u32);
    for t in 0..count {
        // c_0 is the most significant digit of t
        let mut f = vec![0u64; e + 1];
        let mut rest = t;
        for i in (0..e).rev() {
            f[i] = rest % p;
            rest /= p;
        }
        f[e] = 1;
        if poly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

/// Solutions of `y^k = c`, by enumerating the whole field.
pub fn solve_power_residue(ctx: &FieldContext, c: Fe, k: u64) -> Vec<Fe> {
    ctx.elements().filter(|&y| ctx.pow(y, k) == c).collect()
}

/// Solutions of `x^q + x = c` in `F_{q^2}`, by enumerating the whole field.
pub fn solve_artin_schreier(ctx: &FieldContext, sub_q: u64, c: Fe) -> Result<Vec<Fe>, GfError> {
    check_subfield(ctx, sub_q)?;
    Ok(ctx
        .elements()
        .filter(|&x| ctx.add(ctx.pow(x, sub_q), x) == c)
        .collect())
}

fn check_subfield(ctx: &FieldContext, sub_q: u64) -> Result<(), GfError> {
    if sub_q.checked_mul(sub_q) != Some(ctx.q()) {
        return Err(GfError::IncompatibleSubfield {
            sub_q,
            field_q: ctx.q(),
        });
    }
    Ok(())
}

/// Preimages of every value under a map `F → F`, computed with one pass
/// over the field.
#[derive(Debug, Clone)]
pub struct PreimageTable {
    fibers: BTreeMap<Fe, Vec<Fe>>,
}

impl PreimageTable {
    pub fn build(ctx: &FieldContext, f: impl Fn(Fe) -> Fe) -> Self {
        let mut fibers: BTreeMap<Fe, Vec<Fe>> = BTreeMap::new();
        for x in ctx.elements() {
            fibers.entry(f(x)).or_default().push(x);
        }
        Self { fibers }
    }

    /// Table for `x ↦ x^q + x` on `F_{q^2}`.
    pub fn artin_schreier(ctx: &FieldContext, sub_q: u64) -> Result<Self, GfError> {
        check_subfield(ctx, sub_q)?;
        Ok(Self::build(ctx, |x| ctx.add(ctx.pow(x, sub_q), x)))
    }

    pub fn fiber(&self, c: Fe) -> &[Fe] {
        self.fibers.get(&c).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Values with a nonempty preimage.
    pub fn image(&self) -> impl Iterator<Item = Fe> + '_ {
        self.fibers.keys().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f4() -> FieldContext {
        make_field(2, 2).unwrap()
    }

    #[test]
    fn f4_modulus_is_x2_x_1() {
        assert_eq!(f4().modulus(), &[1, 1, 1]);
    }

    #[test]
    fn prime_field_modulus_is_x() {
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(f3.modulus(), &[0, 1]);
        assert_eq!(f3.q(), 3);
    }

    #[test]
    fn smallest_moduli_in_low_to_high_order() {
        // F_8: x^3+x^2+1 ([1,0,1,1]) precedes x^3+x+1 ([1,1,0,1])
        assert_eq!(make_field(2, 3).unwrap().modulus(), &[1, 0, 1, 1]);
        // F_9: x^2+1 is irreducible over F_3 and has c_0 = 1, c_1 = 0
        assert_eq!(make_field(3, 2).unwrap().modulus(), &[1, 0, 1]);
        // F_16: x^4+1 is (x+1)^4, next is x^4+x^3+1
        assert_eq!(make_field(2, 4).unwrap().modulus(), &[1, 0, 0, 1, 1]);
    }

    #[test]
    fn rejects_non_prime_and_oversize() {
        assert_eq!(make_field(4, 1).unwrap_err(), GfError::NonPrime(4));
        assert!(matches!(
            make_field(2, 21),
            Err(GfError::FieldTooLarge { .. })
        ));
        assert!(matches!(
            make_field_capped(2, 8, 100),
            Err(GfError::FieldTooLarge { cap: 100, .. })
        ));
        assert_eq!(make_field(2, 0).unwrap_err(), GfError::ZeroExponent);
    }

    #[test]
    fn prime_power_factoring() {
        let pp = PrimePower::from_q(729).unwrap();
        assert_eq!((pp.p(), pp.e()), (3, 6));
        assert_eq!(PrimePower::from_q(12), Err(GfError::NotPrimePower(12)));
        assert_eq!(PrimePower::from_q(1), Err(GfError::NotPrimePower(1)));
        assert_eq!(pp.square_root().unwrap().q(), 27);
        assert!(PrimePower::from_q(8).unwrap().square_root().is_none());
        let powers: Vec<u64> = prime_powers_up_to(32).iter().map(|p| p.q()).collect();
        assert_eq!(
            powers,
            vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]
        );
    }

    #[test]
    fn f4_small_identities() {
        let f = f4();
        let w = f.x();
        let w2 = f.mul(w, w);
        assert_eq!(f.mul(w, w2), f.one());
        assert_eq!(f.add(w, w), f.zero());
        assert_eq!(f.pow(w, 3), f.one());
        // ω² = ω + 1
        assert_eq!(w2, f.add(w, f.one()));
    }

    #[test]
    fn f3_inverse_of_two() {
        let f = make_field(3, 1).unwrap();
        assert_eq!(f.inv(f.from_int(2)).unwrap(), f.from_int(2));
        assert_eq!(f.inv(f.zero()), Err(GfError::DivisionByZero));
        assert_eq!(
            f.apply(FieldOp::Div, f.one(), f.zero()),
            Err(GfError::DivisionByZero)
        );
    }

    #[test]
    fn coefficient_round_trip_and_validation() {
        let f = make_field(3, 3).unwrap();
        for a in f.elements() {
            assert_eq!(f.from_coeffs(&f.coeffs(a)).unwrap(), a);
        }
        assert!(matches!(
            f.from_coeffs(&[0, 3, 0]),
            Err(GfError::BadCoefficient { .. })
        ));
        assert!(matches!(
            f.from_coeffs(&[0, 1]),
            Err(GfError::BadLength { .. })
        ));
    }

    #[test]
    fn table_multiplication_matches_schoolbook() {
        for &(p, e) in &[
            (2u64, 1u32),
            (2, 3),
            (2, 5),
            (3, 2),
            (3, 3),
            (5, 2),
            (7, 1),
            (13, 2),
        ] {
            let f = make_field(p, e).unwrap();
            for a in f.elements() {
                for b in f.elements().step_by(3) {
                    assert_eq!(f.mul(a, b), f.mul_reference(a, b), "p={p} e={e}");
                }
            }
        }
    }

    #[test]
    fn fermat_and_frobenius_additivity() {
        for &(p, e) in &[(2u64, 4u32), (3, 3), (5, 2), (11, 1), (7, 2)] {
            let f = make_field(p, e).unwrap();
            for x in f.elements() {
                assert_eq!(f.pow(x, f.q()), x);
                if !f.is_zero(x) {
                    assert_eq!(f.pow(x, f.q() - 1), f.one());
                }
                for y in f.elements().step_by(5) {
                    assert_eq!(
                        f.frobenius(f.add(x, y)),
                        f.add(f.frobenius(x), f.frobenius(y))
                    );
                }
            }
        }
    }

    #[test]
    fn power_residue_examples() {
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(solve_power_residue(&f3, f3.zero(), 2), vec![f3.zero()]);
        assert!(solve_power_residue(&f3, f3.from_int(2), 2).is_empty());
        let f = f4();
        let w = f.x();
        let mut expected = vec![f.one(), w, f.mul(w, w)];
        expected.sort();
        assert_eq!(solve_power_residue(&f, f.one(), 3), expected);
    }

    #[test]
    fn power_residue_q_minus_one_shape() {
        for &(p, e) in &[(3u64, 1u32), (2, 3), (5, 1), (3, 2)] {
            let f = make_field(p, e).unwrap();
            let k = f.q() - 1;
            for c in f.elements() {
                let sols = solve_power_residue(&f, c, k);
                if c == f.zero() {
                    assert_eq!(sols, vec![f.zero()]);
                } else if c == f.one() {
                    assert_eq!(sols.len() as u64, f.q() - 1);
                    assert!(!sols.contains(&f.zero()));
                } else {
                    assert!(sols.is_empty());
                }
            }
        }
    }

    #[test]
    fn power_residue_independent_of_enumeration_order() {
        let f = make_field(3, 3).unwrap();
        for k in [1u64, 2, 13, 26] {
            for c in f.elements() {
                let mut reversed: Vec<Fe> = (0..f.q())
                    .rev()
                    .map(|i| f.element(i).unwrap())
                    .filter(|&y| f.pow_reference(y, k) == c)
                    .collect();
                reversed.sort();
                assert_eq!(solve_power_residue(&f, c, k), reversed);
            }
        }
    }

    #[test]
    fn artin_schreier_examples() {
        let f = f4();
        let w = f.x();
        let w2 = f.mul(w, w);
        assert_eq!(
            solve_artin_schreier(&f, 2, f.zero()).unwrap(),
            vec![f.zero(), f.one()]
        );
        let mut expected = vec![w, w2];
        expected.sort();
        assert_eq!(solve_artin_schreier(&f, 2, f.one()).unwrap(), expected);
        assert!(solve_artin_schreier(&f, 2, w).unwrap().is_empty());
        assert_eq!(
            solve_artin_schreier(&f, 3, w),
            Err(GfError::IncompatibleSubfield {
                sub_q: 3,
                field_q: 4
            })
        );
    }

    #[test]
    fn artin_schreier_fibers_are_empty_or_full() {
        for &(p, e) in &[(2u64, 2u32), (3, 2), (2, 4), (5, 2), (2, 6), (7, 2)] {
            let f = make_field(p, e).unwrap();
            let sub_q = p.pow(e / 2);
            let table = PreimageTable::artin_schreier(&f, sub_q).unwrap();
            let mut total = 0u64;
            for c in f.elements() {
                let sols = solve_artin_schreier(&f, sub_q, c).unwrap();
                assert!(sols.is_empty() || sols.len() as u64 == sub_q);
                assert_eq!(sols.as_slice(), table.fiber(c));
                total += sols.len() as u64;
            }
            assert_eq!(total, f.q());
        }
    }

    fn field_strategy() -> impl Strategy<Value = (u64, u32)> {
        prop::sample::select(vec![
            (2u64, 1u32),
            (2, 4),
            (2, 7),
            (3, 1),
            (3, 4),
            (5, 3),
            (7, 2),
            (31, 1),
            (4093, 1),
        ])
    }

    proptest! {
        #[test]
        fn field_axioms((p, e) in field_strategy(), ia in any::<u64>(), ib in any::<u64>(), ic in any::<u64>()) {
            let f = make_field(p, e).unwrap();
            let a = f.element(ia % f.q()).unwrap();
            let b = f.element(ib % f.q()).unwrap();
            let c = f.element(ic % f.q()).unwrap();
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
            prop_assert_eq!(f.sub(f.add(a, b), b), a);
            if !f.is_zero(b) {
                prop_assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
            }
        }
    }
}
