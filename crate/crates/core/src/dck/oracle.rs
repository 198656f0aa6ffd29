//! Combinatorial leading-term oracle for `d_rs` and the checks built on it.

use rayon::prelude::*;
use serde::Serialize;

use super::degree::{leading_term, DegreeVector};
use super::DckError;
use crate::gtsub::{d_gen, d_terms, term_admissible, DTerm};
use crate::perm::Perm;
use crate::uq::{Generator, PbwMonomial, Roots};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermRecord {
    pub sigma: Perm,
    pub ht: usize,
    pub c_less: usize,
    pub c_greater: usize,
    pub derangement: bool,
}

pub fn perm_stats(sigma: &Perm) -> PermRecord {
    PermRecord {
        sigma: sigma.clone(),
        ht: sigma.height(),
        c_less: sigma.drops(),
        c_greater: sigma.jumps(),
        derangement: sigma.is_derangement(),
    }
}

/// Degree of a product of triangular generators, read off letter by letter:
/// `t_ij` (`i > j`) contributes `F_{β_ji}`, `t̄_ij` (`i < j`) contributes
/// `E_{β_ij}`, diagonal letters contribute nothing. Relies on the graded
/// algebra being a domain, so that degrees add.
pub fn word_degree(n: usize, word: &[Generator]) -> DegreeVector {
    let roots = Roots::new(n);
    let mut d = DegreeVector::zero(roots.len());
    for g in word {
        match *g {
            Generator::T(i, j) if i > j => {
                d.rdeg[roots.pos(j, i).expect("root")] += 1;
                d.ht += (i - j) as u64;
            }
            Generator::Tb(i, j) if i < j => {
                d.kdeg[roots.pos(i, j).expect("root")] += 1;
                d.ht += (j - i) as u64;
            }
            _ => {}
        }
    }
    d
}

/// The `(σ, k)` term of `d_rs` of maximal degree, found by exhaustive search.
/// Two distinct terms sharing the maximal degree is an error.
pub fn brute_force_leading_term(r: usize, s: usize) -> Result<DTerm, DckError> {
    if r == 0 || s > r || r > 8 {
        return Err(DckError::OutOfRange(format!("r={r}, s={s}")));
    }
    let terms = d_terms(r, s);
    let best = terms
        .par_iter()
        .map(|t| (word_degree(r, &t.generators()), t, 1usize))
        .reduce_with(|a, b| match a.0.cmp(&b.0) {
            std::cmp::Ordering::Greater => a,
            std::cmp::Ordering::Less => b,
            std::cmp::Ordering::Equal => {
                // keep the lexicographically first term so the report is stable
                let t = if (&a.1.sigma, &a.1.k) <= (&b.1.sigma, &b.1.k) {
                    a.1
                } else {
                    b.1
                };
                (a.0, t, a.2 + b.2)
            }
        })
        .ok_or_else(|| DckError::OutOfRange(format!("d_{r}{s} has no terms")))?;
    if best.2 > 1 {
        return Err(DckError::OracleTie {
            r,
            s,
            count: best.2,
        });
    }
    Ok(best.1.clone())
}

pub fn brute_force_leading_perm(r: usize, s: usize) -> Result<Perm, DckError> {
    brute_force_leading_term(r, s).map(|t| t.sigma)
}

/// The term of `d_rs` singled out by `σ = (1 2 … r)^s`.
pub fn theorem_term(r: usize, s: usize) -> DTerm {
    let sigma = Perm::cycle_power(r, s);
    let k: Vec<u8> = if s == r {
        vec![1; r]
    } else {
        (1..=r).map(|j| u8::from(sigma.apply(j) < j)).collect()
    };
    d_terms(r, s)
        .into_iter()
        .find(|t| t.sigma == sigma && t.k == k)
        .expect("cyclic term is admissible")
}

/// The PBW monomial of the leading term of a single `(σ, k)` summand.
pub fn term_leading_monomial(n: usize, t: &DTerm) -> Result<PbwMonomial, DckError> {
    Ok(leading_term(&t.element(n)?)?.0)
}

#[derive(Clone, Debug, Serialize)]
pub struct LtPair {
    pub r: usize,
    pub s: usize,
    pub theorem_perm: Perm,
    pub oracle_perm: Perm,
    #[serde(rename = "match")]
    pub matches: bool,
    pub lt_monomial: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LtReport {
    #[serde(rename = "N")]
    pub n: usize,
    pub pairs: Vec<LtPair>,
}

impl LtReport {
    pub fn all_match(&self) -> bool {
        self.pairs.iter().all(|p| p.matches)
    }
}

fn check_pair(n: usize, r: usize, s: usize) -> Result<LtPair, DckError> {
    let d = d_gen(n, r, s)?.value;
    let (lt, coeff) = leading_term(&d)?;
    let th = theorem_term(r, s);
    let oracle = brute_force_leading_term(r, s)?;
    let th_mono = term_leading_monomial(n, &th)?;
    let oracle_mono = term_leading_monomial(n, &oracle)?;
    let mut problems = Vec::new();
    if coeff.is_zero() {
        problems.push("zero leading coefficient".to_string());
    }
    if lt != th_mono {
        problems.push(format!("lt(d) = {lt}, cyclic term gives {th_mono}"));
    }
    if lt != oracle_mono {
        problems.push(format!("lt(d) = {lt}, oracle term gives {oracle_mono}"));
    }
    if th.sigma != oracle.sigma {
        problems.push(format!(
            "cyclic σ = {}, oracle σ = {}",
            th.sigma, oracle.sigma
        ));
    }
    Ok(LtPair {
        r,
        s,
        theorem_perm: th.sigma,
        oracle_perm: oracle.sigma,
        matches: problems.is_empty(),
        lt_monomial: lt.to_string(),
        detail: (!problems.is_empty()).then(|| problems.join("; ")),
    })
}

/// Checks every `1 ≤ s ≤ r ≤ n`.
pub fn verify_lt_theorem(n: usize) -> Result<LtReport, DckError> {
    if n == 0 || n > 5 {
        return Err(DckError::OutOfRange(format!("N={n}")));
    }
    let idx: Vec<(usize, usize)> = (1..=n).flat_map(|r| (1..=r).map(move |s| (r, s))).collect();
    let pairs = idx
        .par_iter()
        .map(|&(r, s)| check_pair(n, r, s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LtReport { n, pairs })
}

/// Summary of the height and derangement statements for one `(r, s)`.
#[derive(Clone, Debug, Serialize)]
pub struct HeightRecord {
    pub r: usize,
    pub s: usize,
    pub max_height: usize,
    pub expected: usize,
    pub maximal_terms: usize,
    pub all_derangements: bool,
}

impl HeightRecord {
    /// For `s ∈ {0, r}` the only term is the identity permutation, so the
    /// derangement condition is vacuous there.
    pub fn holds(&self) -> bool {
        let trivial = self.s == 0 || self.s == self.r;
        self.max_height == self.expected && (trivial || self.all_derangements)
    }
}

/// For `d_rs`: the maximal height over admissible permutations, and whether
/// every degree-maximal term uses a derangement.
pub fn height_check(r: usize, s: usize) -> HeightRecord {
    let perms = Perm::all(r);
    let max_height = perms
        .par_iter()
        .filter(|p| term_admissible(p, s, r))
        .map(|p| p.height())
        .max()
        .unwrap_or(0);
    let terms = d_terms(r, s);
    let degs: Vec<DegreeVector> = terms
        .par_iter()
        .map(|t| word_degree(r, &t.generators()))
        .collect();
    let top = degs.iter().max().cloned();
    let maximal: Vec<&DTerm> = terms
        .iter()
        .zip(&degs)
        .filter(|(_, d)| Some(*d) == top.as_ref())
        .map(|(t, _)| t)
        .collect();
    HeightRecord {
        r,
        s,
        max_height,
        expected: 2 * s * (r - s),
        maximal_terms: maximal.len(),
        all_derangements: maximal.iter().all(|t| t.sigma.is_derangement()),
    }
}
