//! Marker counts in leading terms and recovery of `Γ_q`-monomial exponents.
//!
//! The marker `X(r, s) = t̄_sr` (`s < r`) occurs in `lt(d_ab)` exactly when
//! `a − b = r − s`, `b ≥ s` and `a ≥ r`, so a single count does not isolate
//! one generator; differences along the diagonal `(r+m, s+m)` do.

use std::collections::BTreeMap;

use super::degree::leading_term;
use super::DckError;
use crate::gtsub::d_gen;
use crate::uq::{AlgebraElement, PbwMonomial, Roots};

/// Exponent of `t̄_sr` in the leading term of `a`, `1 ≤ s < r ≤ N`.
pub fn count_marker(a: &AlgebraElement, r: usize, s: usize) -> Result<u32, DckError> {
    let (m, _) = leading_term(a)?;
    marker_in_monomial(&m, r, s)
}

pub fn marker_in_monomial(m: &PbwMonomial, r: usize, s: usize) -> Result<u32, DckError> {
    let roots = Roots::new(m.n());
    let pos = roots
        .pos(s, r)
        .ok_or_else(|| DckError::OutOfRange(format!("marker X({r},{s}) needs 1 <= s < r <= N")))?;
    // E_{β_sr} is a scalar multiple of K_s t̄_sr, so the exponents agree
    Ok(m.k[pos])
}

/// `K`-exponents of the triangular monomial matching a PBW monomial:
/// each `F_{β_ij}` carries a `K_i^{-1}` and each `E_{β_ij}` a `K_i`.
pub fn triangular_k_part(m: &PbwMonomial) -> Vec<i32> {
    let roots = Roots::new(m.n());
    let mut mu = m.lambda.clone();
    for b in roots.iter() {
        mu[b.i - 1] += m.k[b.pos] as i32 - m.r[b.pos] as i32;
    }
    mu
}

/// Exponents `{k_rs}` of `Π d_rs^{k_rs}`, keyed by `(r, s)`.
pub type GammaExponents = BTreeMap<(usize, usize), i64>;

pub fn gamma_monomial(n: usize, exps: &GammaExponents) -> Result<AlgebraElement, DckError> {
    let mut acc = AlgebraElement::one(n);
    for (&(r, s), &k) in exps {
        if k == 0 {
            continue;
        }
        if k < 0 && r != s {
            return Err(DckError::OutOfRange(format!("negative power of d_{r}{s}")));
        }
        let d = d_gen(n, r, s)?.value;
        acc = acc.try_mul(&d.pow(k as i32)?)?;
    }
    Ok(acc)
}

/// Recovers the exponents of a `Γ_q` monomial from its leading monomial.
pub fn decode_gamma_exponents(n: usize, lt: &PbwMonomial) -> GammaExponents {
    let count = |s: usize, r: usize| -> i64 {
        if r > n {
            0
        } else {
            marker_in_monomial(lt, r, s).unwrap_or(0) as i64
        }
    };
    let mut out = GammaExponents::new();
    for r in 1..=n {
        for s in 1..r {
            out.insert((r, s), count(s, r) - count(s + 1, r + 1));
        }
    }
    // μ_i = −Σ_{r ≥ i} k_rr
    let mu = triangular_k_part(lt);
    for r in 1..=n {
        let next = if r < n { mu[r] } else { 0 };
        out.insert((r, r), (next - mu[r - 1]) as i64);
    }
    out
}
