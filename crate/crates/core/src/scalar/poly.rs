//! Dense univariate polynomials over `Z`, stored low degree first.
//!
//! These are bare helpers used by [`QScalar`](super::QScalar); a slice with no
//! trailing zeros is the canonical form and the empty slice is zero.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type Coeffs = Vec<BigInt>;

pub(crate) fn trim(p: &mut Coeffs) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn is_one(p: &[BigInt]) -> bool {
    p.len() == 1 && p[0].is_one()
}

pub(crate) fn add(a: &[BigInt], b: &[BigInt]) -> Coeffs {
    let mut out: Coeffs = Vec::with_capacity(a.len().max(b.len()));
    for i in 0..a.len().max(b.len()) {
        let x = match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        };
        out.push(x);
    }
    trim(&mut out);
    out
}

pub(crate) fn neg(a: &[BigInt]) -> Coeffs {
    a.iter().map(|c| -c).collect()
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Coeffs {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &[BigInt], c: &BigInt) -> Coeffs {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

/// Multiplies by `q^k`.
pub(crate) fn shift(a: &[BigInt], k: usize) -> Coeffs {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); k];
    out.extend_from_slice(a);
    out
}

/// Number of trailing zero coefficients at the low end (the `q`-adic valuation).
pub(crate) fn low_order(a: &[BigInt]) -> usize {
    a.iter().take_while(|c| c.is_zero()).count()
}

pub(crate) fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub(crate) fn div_scalar_exact(a: &[BigInt], c: &BigInt) -> Coeffs {
    a.iter().map(|x| x / c).collect()
}

pub(crate) fn primitive_part(a: &[BigInt]) -> Coeffs {
    let c = content(a);
    if c.is_zero() || c.is_one() {
        a.to_vec()
    } else {
        div_scalar_exact(a, &c)
    }
}

/// Pseudo-remainder of `a` by `b` (`b` nonzero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Coeffs {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        // r <- lb * r - lr * q^(dr-db) * b
        for c in r.iter_mut() {
            *c *= lb;
        }
        let off = dr - db;
        for (i, c) in b.iter().enumerate() {
            r[off + i] -= &lr * c;
        }
        trim(&mut r);
    }
    r
}

/// Greatest common divisor in `Z[q]`, normalized with positive leading coefficient.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Coeffs {
    if a.is_empty() {
        return normalize_sign(b.to_vec());
    }
    if b.is_empty() {
        return normalize_sign(a.to_vec());
    }
    let ca = content(a);
    let cb = content(b);
    let c = ca.gcd(&cb);
    let mut x = primitive_part(a);
    let mut y = primitive_part(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            x = vec![BigInt::one()];
            break;
        }
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive_part(&r);
    }
    normalize_sign(scale(&primitive_part(&x), &c))
}

fn normalize_sign(mut p: Coeffs) -> Coeffs {
    if p.last().is_some_and(|c| c.is_negative()) {
        p = neg(&p);
    }
    p
}

/// Exact division in `Z[q]`; returns `None` when `b` does not divide `a`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Coeffs> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let (qc, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let off = dr - db;
        for (i, c) in b.iter().enumerate() {
            r[off + i] -= &qc * c;
        }
        quot[off] = qc;
        trim(&mut r);
    }
    if r.is_empty() {
        trim(&mut quot);
        Some(quot)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Coeffs {
        let mut out: Coeffs = v.iter().map(|&x| BigInt::from(x)).collect();
        trim(&mut out);
        out
    }

    #[test]
    fn gcd_of_shared_linear_factor() {
        // (q-1)(q+2) and (q-1)(q+3)
        let a = mul(&p(&[-1, 1]), &p(&[2, 1]));
        let b = mul(&p(&[-1, 1]), &p(&[3, 1]));
        assert_eq!(gcd(&a, &b), p(&[-1, 1]));
    }

    #[test]
    fn gcd_keeps_integer_content() {
        assert_eq!(gcd(&p(&[4, 6]), &p(&[6, 9])), p(&[2, 3]));
        assert_eq!(gcd(&p(&[4]), &p(&[6])), p(&[2]));
    }

    #[test]
    fn exact_division() {
        let a = mul(&p(&[1, 1]), &p(&[-1, 0, 3]));
        assert_eq!(div_exact(&a, &p(&[1, 1])), Some(p(&[-1, 0, 3])));
        assert_eq!(div_exact(&a, &p(&[2, 1])), None);
    }
}
