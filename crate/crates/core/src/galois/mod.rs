//! `U_q(gl_N)` inside the skew monoid ring `L ∗ M`, where `L` is the field of
//! fractions of `Λ = C[X_mi^{±1}]`, `M ≅ Z^{N(N−1)/2}` rescales the variables
//! by powers of `q`, and `G = ∏ W_m` (type `D` Weyl groups) acts by signed
//! permutations within each level.

mod group;
mod invariants;
mod phi;
mod skew;

pub use group::{
    act_g, act_m, num_vars, var_index, var_names, x_var, x_var_pow, GroupElem, Level, MonoidElem,
};
pub use invariants::{
    invariant_generators, non_invariant, sample_points, stabilizer_m, x_rr_pow, x_sym,
    InvariantGenerators, Stabilizer,
};
pub use phi::{
    a_coefficient, a_coefficient_in, a_zero, algebra_generators, check_conjugation,
    check_g_invariance, check_generator_invariance, check_relations_under_phi, phi_gamma_check,
    phi_gen, phi_gen_in, relations, xi_inverse, ConjugationResult, GammaResult, InvarianceResult,
    PhiForm, PhiGenerator, PhiImages, PhiMap, Relation, RelationResult, MAX_N,
};
pub use skew::SkewElement;

#[cfg(test)]
mod tests;

use serde::Serialize;

use crate::gtsub::GtError;
use crate::scalar::ScalarError;
use crate::uq::UqError;

#[derive(Debug, thiserror::Error)]
pub enum GaloisError {
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("invalid group element: {0}")]
    InvalidGroupElem(String),
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("only single-term elements are inverted")]
    NotInvertible,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Uq(#[from] UqError),
    #[error(transparent)]
    Gt(#[from] GtError),
}

/// Everything checked about the embedding at one rank.
#[derive(Clone, Debug, Serialize)]
pub struct GaloisReport {
    #[serde(rename = "N")]
    pub n: usize,
    pub form: PhiForm,
    pub relations: Vec<RelationResult>,
    pub invariance: Vec<InvarianceResult>,
    pub conjugation: Vec<ConjugationResult>,
    pub gamma: Vec<GammaResult>,
    pub invariant_generators_fixed: bool,
}

impl GaloisReport {
    pub fn all_pass(&self) -> bool {
        self.relations.iter().all(|r| r.residue_is_zero)
            && self.invariance.iter().all(|r| r.invariant)
            && self.conjugation.iter().all(|r| r.preserved)
            && self.gamma.iter().all(GammaResult::holds)
            && self.invariant_generators_fixed
    }
}

/// Runs every check at rank `n`. With `direct`, `φ(d_rs)` is additionally
/// computed through the generator images.
pub fn embed_check(n: usize, form: PhiForm, direct: bool) -> Result<GaloisReport, GaloisError> {
    let relations = check_relations_under_phi(n, form)?;
    let invariance = check_generator_invariance(n, form)?;
    let conjugation = check_conjugation(n)?;
    let map = if direct {
        Some(PhiMap::new(n, form)?)
    } else {
        None
    };
    let mut gamma = Vec::new();
    for r in 1..=n {
        for s in 1..=r {
            gamma.push(phi_gamma_check(r, s, n, map.as_ref())?);
        }
    }
    Ok(GaloisReport {
        n,
        form,
        relations,
        invariance,
        conjugation,
        gamma,
        invariant_generators_fixed: non_invariant(&invariant_generators(n)).is_empty(),
    })
}
