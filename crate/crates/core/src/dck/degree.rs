use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use super::DckError;
use crate::scalar::QScalar;
use crate::uq::{AlgebraElement, PbwMonomial, Roots};

/// Total degree of a PBW monomial: height, `F`-exponents and `E`-exponents.
///
/// Comparison: `ht` first, then `rdeg` from the last root down to the first,
/// then `kdeg` from the first root up to the last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DegreeVector {
    pub ht: u64,
    pub rdeg: Vec<u32>,
    pub kdeg: Vec<u32>,
}

impl DegreeVector {
    pub fn zero(m: usize) -> Self {
        DegreeVector {
            ht: 0,
            rdeg: vec![0; m],
            kdeg: vec![0; m],
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        DegreeVector {
            ht: self.ht + other.ht,
            rdeg: self
                .rdeg
                .iter()
                .zip(&other.rdeg)
                .map(|(a, b)| a + b)
                .collect(),
            kdeg: self
                .kdeg
                .iter()
                .zip(&other.kdeg)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Index of the first significant component where `self` and `other`
    /// differ, as `("ht" | "rdeg" | "kdeg", root position)`.
    pub fn first_difference(&self, other: &Self) -> Option<(&'static str, usize)> {
        if self.ht != other.ht {
            return Some(("ht", 0));
        }
        for p in (0..self.rdeg.len()).rev() {
            if self.rdeg[p] != other.rdeg[p] {
                return Some(("rdeg", p));
            }
        }
        (0..self.kdeg.len())
            .find(|&p| self.kdeg[p] != other.kdeg[p])
            .map(|p| ("kdeg", p))
    }
}

impl Ord for DegreeVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ht
            .cmp(&other.ht)
            .then_with(|| self.rdeg.iter().rev().cmp(other.rdeg.iter().rev()))
            .then_with(|| self.kdeg.cmp(&other.kdeg))
    }
}

impl PartialOrd for DegreeVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ht={} rdeg={:?} kdeg={:?}",
            self.ht, self.rdeg, self.kdeg
        )
    }
}

pub fn total_degree(m: &PbwMonomial) -> DegreeVector {
    let roots = Roots::new(m.n());
    let ht = roots
        .iter()
        .map(|b| (m.r[b.pos] + m.k[b.pos]) as u64 * b.height() as u64)
        .sum();
    DegreeVector {
        ht,
        rdeg: m.r.clone(),
        kdeg: m.k.clone(),
    }
}

/// All terms of `a` of maximal degree, in PBW order.
pub fn leading_part(a: &AlgebraElement) -> Result<Vec<(PbwMonomial, QScalar)>, DckError> {
    let terms = a.terms();
    let top = terms
        .iter()
        .map(|(m, _)| total_degree(m))
        .max()
        .ok_or(DckError::Zero)?;
    Ok(terms
        .into_iter()
        .filter(|(m, _)| total_degree(m) == top)
        .collect())
}

/// The unique monomial of maximal degree, with its coefficient.
pub fn leading_term(a: &AlgebraElement) -> Result<(PbwMonomial, QScalar), DckError> {
    let mut top = leading_part(a)?;
    if top.len() > 1 {
        return Err(DckError::Tie {
            first: top[0].0.to_string(),
            second: top[1].0.to_string(),
        });
    }
    Ok(top.pop().unwrap())
}
