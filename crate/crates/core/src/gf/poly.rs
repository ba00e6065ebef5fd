//! Dense polynomials over a prime field `F_p`, coefficients low degree first.
//!
//! Only what irreducibility screening needs: reduction, modular
//! multiplication and powering, and gcd.

pub(crate) type Poly = Vec<u64>;

pub(crate) fn trim(f: &mut Poly) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

pub(crate) fn degree(f: &[u64]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Remainder of `f` modulo a nonzero `g`.
pub(crate) fn rem(f: &[u64], g: &[u64], p: u64) -> Poly {
    let dg = degree(g).expect("division by the zero polynomial");
    let lead_inv = inv_mod(g[dg], p);
    let mut r: Poly = f.to_vec();
    trim(&mut r);
    while let Some(dr) = degree(&r) {
        if dr < dg {
            break;
        }
        let factor = r[dr] * lead_inv % p;
        let shift = dr - dg;
        for (i, &gc) in g[..=dg].iter().enumerate() {
            let sub = factor * gc % p;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        trim(&mut r);
    }
    r
}

pub(crate) fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ac) in a.iter().enumerate() {
        if ac == 0 {
            continue;
        }
        for (j, &bc) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ac * bc) % p;
        }
    }
    rem(&prod, m, p)
}

pub(crate) fn pow_poly_mod(base: &[u64], mut exp: u64, m: &[u64], p: u64) -> Poly {
    let mut acc: Poly = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(&acc, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    let mut out: Poly = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let mut x: Poly = a.to_vec();
    let mut y: Poly = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while degree(&y).is_some() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// Rabin's test for a monic `f` of degree `e` over `F_p`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let e = match degree(f) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if e == 1 {
        return true;
    }
    let x: Poly = vec![0, 1];
    // x^(p^k) mod f, for k = 0..=e
    let mut frob = Vec::with_capacity(e + 1);
    let mut cur = rem(&x, f, p);
    frob.push(cur.clone());
    for _ in 0..e {
        cur = pow_poly_mod(&cur, p, f, p);
        frob.push(cur.clone());
    }
    if sub(&frob[e], &x, p).iter().any(|&c| c != 0) {
        return false;
    }
    for r in super::prime_factors(e as u64) {
        let k = e / r as usize;
        let g = gcd(&sub(&frob[k], &x, p), f, p);
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Irreducibility by trial division against every monic polynomial of
    /// degree at most deg(f)/2.
    fn irreducible_by_trial_division(f: &[u64], p: u64) -> bool {
        let e = degree(f).unwrap();
        for d in 1..=e / 2 {
            for idx in 0..p.pow(d as u32) {
                let mut g: Poly = (0..d).map(|i| idx / p.pow(i as u32) % p).collect();
                g.push(1);
                if degree(&rem(f, &g, p)).is_none() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn rabin_matches_trial_division() {
        for &(p, e) in &[
            (2u64, 2usize),
            (2, 3),
            (2, 4),
            (2, 6),
            (3, 2),
            (3, 3),
            (3, 4),
            (5, 2),
            (5, 3),
        ] {
            for idx in 0..p.pow(e as u32) {
                let mut f: Poly = (0..e).map(|i| idx / p.pow(i as u32) % p).collect();
                f.push(1);
                assert_eq!(
                    is_irreducible(&f, p),
                    irreducible_by_trial_division(&f, p),
                    "p={p} f={f:?}"
                );
            }
        }
    }

    #[test]
    fn product_of_degree_two_and_three_is_reducible() {
        // (x^2+x+1)(x^3+x+1) satisfies x^64 = x mod f; only the gcd step rejects it
        let a = [1, 1, 1];
        let b = [1, 1, 0, 1];
        let mut prod = vec![0u64; 6];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % 2;
            }
        }
        assert!(!is_irreducible(&prod, 2));
    }
}
