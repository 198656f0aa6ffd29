use std::collections::BTreeMap;
use std::fmt;

use super::group::{act_g, act_m, num_vars, var_names, GroupElem, MonoidElem};
use super::GaloisError;
use crate::scalar::{LaurentPoly, QScalar, RatFun};

/// An element `Σ λ_x · x` of the skew monoid ring `L ∗ M`, with the product
/// `(λ₁x₁)(λ₂x₂) = λ₁ · x₁(λ₂) · (x₁ + x₂)`.
#[derive(Clone, Debug)]
pub struct SkewElement {
    n: usize,
    terms: BTreeMap<MonoidElem, RatFun>,
}

impl SkewElement {
    pub fn zero(n: usize) -> Self {
        SkewElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::term(RatFun::one(num_vars(n)), MonoidElem::zero(n))
    }

    /// `λ · x`.
    pub fn term(coeff: RatFun, x: MonoidElem) -> Self {
        let n = x.n();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(x, coeff);
        }
        SkewElement { n, terms }
    }

    /// `λ · e`.
    pub fn from_coeff(n: usize, coeff: RatFun) -> Self {
        Self::term(coeff, MonoidElem::zero(n))
    }

    pub fn from_laurent(n: usize, p: LaurentPoly) -> Self {
        Self::from_coeff(n, RatFun::from_laurent(p))
    }

    pub fn scalar(n: usize, c: QScalar) -> Self {
        Self::from_coeff(n, RatFun::constant(num_vars(n), c))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MonoidElem, &RatFun)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, x: &MonoidElem) -> RatFun {
        self.terms
            .get(x)
            .cloned()
            .unwrap_or_else(|| RatFun::zero(num_vars(self.n)))
    }

    /// The coefficient of `e` when that is the only term.
    pub fn as_coeff(&self) -> Option<RatFun> {
        match self.terms.len() {
            0 => Some(RatFun::zero(num_vars(self.n))),
            1 => {
                let (x, c) = self.terms.iter().next().unwrap();
                x.is_zero().then(|| c.clone())
            }
            _ => None,
        }
    }

    fn check(&self, other: &Self) -> Result<(), GaloisError> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(GaloisError::RankMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    fn accumulate(
        terms: &mut BTreeMap<MonoidElem, RatFun>,
        x: MonoidElem,
        c: RatFun,
    ) -> Result<(), GaloisError> {
        if c.is_zero() {
            return Ok(());
        }
        match terms.remove(&x) {
            Some(old) => {
                let sum = old.try_add(&c)?;
                if !sum.is_zero() {
                    terms.insert(x, sum);
                }
            }
            None => {
                terms.insert(x, c);
            }
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, GaloisError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (x, c) in &other.terms {
            Self::accumulate(&mut terms, x.clone(), c.clone())?;
        }
        Ok(SkewElement { n: self.n, terms })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, GaloisError> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        SkewElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (x.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        SkewElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(x, v)| (x.clone(), v.scale(c)))
                .collect(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, GaloisError> {
        self.check(other)?;
        let mut terms = BTreeMap::new();
        for (x1, c1) in &self.terms {
            for (x2, c2) in &other.terms {
                let c = c1.try_mul(&act_m(x1, c2))?;
                Self::accumulate(&mut terms, x1.add(x2), c)?;
            }
        }
        Ok(SkewElement { n: self.n, terms })
    }

    /// `a b − b a`.
    pub fn commutator(&self, other: &Self) -> Result<Self, GaloisError> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    pub fn pow(&self, k: i32) -> Result<Self, GaloisError> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one(self.n);
        for _ in 0..k.unsigned_abs() {
            acc = acc.try_mul(&base)?;
        }
        Ok(acc)
    }

    /// Inverse of a single term `λ x`: `x^{-1}(λ^{-1}) · (−x)`.
    pub fn inverse(&self) -> Result<Self, GaloisError> {
        if self.terms.len() != 1 {
            return Err(GaloisError::NotInvertible);
        }
        let (x, c) = self.terms.iter().next().unwrap();
        let inv = c.inv()?;
        Ok(Self::term(act_m(&x.neg(), &inv), x.neg()))
    }

    /// `g(Σ λ_x x) = Σ g(λ_x) · g x g^{-1}`.
    pub fn act_g(&self, g: &GroupElem) -> Result<Self, GaloisError> {
        let mut terms = BTreeMap::new();
        for (x, c) in &self.terms {
            Self::accumulate(&mut terms, g.conjugate(x), act_g(g, c))?;
        }
        Ok(SkewElement { n: self.n, terms })
    }

    /// Exact equality: the difference has no terms.
    pub fn equals(&self, other: &Self) -> Result<bool, GaloisError> {
        Ok(self.try_sub(other)?.is_zero())
    }
}

impl fmt::Display for SkewElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = var_names(self.n);
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(x, c)| format!("({})*{}", c.display_with(&names), x))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
