use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::group::{num_vars, var_index, x_var, GroupElem, MonoidElem};
use super::GaloisError;
use crate::scalar::{LaurentPoly, QScalar};

/// `e_j(X_r1², …, X_rr²)`.
pub fn x_sym(n: usize, r: usize, j: usize) -> LaurentPoly {
    let squares: Vec<LaurentPoly> = (1..=r).map(|i| x_var(n, r, i).pow(2)).collect();
    LaurentPoly::elementary_symmetric(num_vars(n), &squares, j)
}

/// `(X_r1 ⋯ X_rr)^k`.
pub fn x_rr_pow(n: usize, r: usize, k: i32) -> LaurentPoly {
    let mut exps = vec![0; num_vars(n)];
    for i in 1..=r {
        exps[var_index(r, i)] = k;
    }
    LaurentPoly::monomial(num_vars(n), exps, QScalar::one())
}

/// Generators of `Λ^G` and the splitting polynomial of `L` over its fixed field.
#[derive(Clone, Debug)]
pub struct InvariantGenerators {
    pub n: usize,
    /// `x_rs = e_s(X_r1², …, X_rr²)` for `s < r`, and `x_rr = X_r1 ⋯ X_rr`.
    pub x: BTreeMap<(usize, usize), LaurentPoly>,
    /// `x_rr^{-1}`, indexed by `r − 1`.
    pub x_inv: Vec<LaurentPoly>,
    /// Coefficients of `p(x) = ∏_j ∏_i (x² − X_ji²) · (x − X_j1 ⋯ X_jj)`, constant term first.
    pub p: Vec<LaurentPoly>,
}

impl InvariantGenerators {
    pub fn x(&self, r: usize, s: usize) -> &LaurentPoly {
        &self.x[&(r, s)]
    }

    /// Every generator, including the coefficients of `p`, with a label.
    pub fn all(&self) -> Vec<(String, LaurentPoly)> {
        let mut out: Vec<(String, LaurentPoly)> = self
            .x
            .iter()
            .map(|(&(r, s), v)| (format!("x[{r},{s}]"), v.clone()))
            .collect();
        for (i, v) in self.x_inv.iter().enumerate() {
            out.push((format!("x[{r},{r}]^-1", r = i + 1), v.clone()));
        }
        for (k, v) in self.p.iter().enumerate() {
            out.push((format!("p[x^{k}]"), v.clone()));
        }
        out
    }
}

fn poly_mul(a: &[LaurentPoly], b: &[LaurentPoly], nv: usize) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::zero(nv); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

pub fn invariant_generators(n: usize) -> InvariantGenerators {
    let nv = num_vars(n);
    let mut x = BTreeMap::new();
    let mut x_inv = Vec::new();
    for r in 1..=n {
        for s in 1..r {
            x.insert((r, s), x_sym(n, r, s));
        }
        x.insert((r, r), x_rr_pow(n, r, 1));
        x_inv.push(x_rr_pow(n, r, -1));
    }
    let mut p = vec![LaurentPoly::one(nv)];
    for j in 1..=n {
        for i in 1..=j {
            let sq = x_var(n, j, i).pow(2);
            p = poly_mul(&p, &[-&sq, LaurentPoly::zero(nv), LaurentPoly::one(nv)], nv);
        }
        p = poly_mul(&p, &[-&x_rr_pow(n, j, 1), LaurentPoly::one(nv)], nv);
    }
    InvariantGenerators { n, x, x_inv, p }
}

/// Labels of invariant generators moved by some generator of `G`.
pub fn non_invariant(inv: &InvariantGenerators) -> Vec<String> {
    let gens = GroupElem::generators(inv.n);
    inv.all()
        .into_iter()
        .filter(|(_, v)| gens.iter().any(|(_, g)| g.act_poly(v) != *v))
        .map(|(name, _)| name)
        .collect()
}

/// The subgroup of `M` fixing a point of `Specm Λ`, by generators.
#[derive(Clone, Debug, Serialize)]
pub struct Stabilizer {
    pub generators: Vec<MonoidElem>,
}

impl Stabilizer {
    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Largest multiple of `δ^{mi}` tried when searching for a stabilizing power.
const ORDER_SEARCH: i32 = 64;

/// `{x ∈ M : x · point = point}`. Each coordinate is rescaled independently,
/// so the stabilizer is generated by the smallest `k δ^{mi}` fixing the point.
pub fn stabilizer_m(n: usize, point: &[QScalar]) -> Result<Stabilizer, GaloisError> {
    if point.len() != num_vars(n) {
        return Err(GaloisError::InvalidPoint(format!(
            "expected {} coordinates, got {}",
            num_vars(n),
            point.len()
        )));
    }
    if let Some(pos) = point.iter().position(|v| v.is_zero()) {
        return Err(GaloisError::InvalidPoint(format!(
            "coordinate {pos} is zero"
        )));
    }
    let mut generators = Vec::new();
    for m in 1..n {
        for i in 1..=m {
            let v = &point[var_index(m, i)];
            if let Some(k) = (1..=ORDER_SEARCH).find(|&k| &(v * &QScalar::q_pow(-k)) == v) {
                generators.push(MonoidElem::delta(n, m, i)?.scale(k));
            }
        }
    }
    Ok(Stabilizer { generators })
}

/// Random points with nonzero coordinates `± a/b · q^k`, sometimes shifted by 1.
pub fn sample_points(n: usize, count: usize, seed: u64) -> Vec<Vec<QScalar>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..num_vars(n))
                .map(|_| loop {
                    let a = rng.gen_range(-9i64..=9);
                    let b = rng.gen_range(1i64..=5);
                    let k = rng.gen_range(-3..=3);
                    let mut v =
                        &QScalar::monomial(a, k) * &QScalar::from_int(b).inv().expect("nonzero");
                    if rng.gen_bool(0.3) {
                        v = &v + &QScalar::one();
                    }
                    if !v.is_zero() {
                        break v;
                    }
                })
                .collect()
        })
        .collect()
}
