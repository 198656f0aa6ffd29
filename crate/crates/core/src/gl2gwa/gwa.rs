//! The generalized Weyl algebra `R(σ, t)` with `R = C[K_1^{±1}, K_2^{±1}][t]`.
//!
//! Conventions: `X₊ a = σ(a) X₊`, `X₋ a = σ^{-1}(a) X₋`, `X₋ X₊ = t`,
//! `X₊ X₋ = σ(t)`, where `σ(K_1) = q^{-1} K_1`, `σ(K_2) = q K_2` and
//! `σ(t) = t + (K_1 K_2^{-1} − K_1^{-1} K_2)/(q − q^{-1})`.

use std::collections::BTreeMap;
use std::fmt;

use super::GwaError;
use crate::scalar::{LaurentPoly, QScalar};

/// Variables of `R`: `K_1`, `K_2`, `t`.
pub const NVARS: usize = 3;
pub const K1: usize = 0;
pub const K2: usize = 1;
pub const T: usize = 2;

pub fn base_names() -> Vec<String> {
    vec!["K[1]".into(), "K[2]".into(), "t".into()]
}

pub fn k_monomial(a: i32, b: i32) -> LaurentPoly {
    LaurentPoly::monomial(NVARS, vec![a, b, 0], QScalar::one())
}

pub fn t_var() -> LaurentPoly {
    LaurentPoly::var(NVARS, T)
}

/// `σ^j((K_1 K_2^{-1} − K_1^{-1} K_2)/(q − q^{-1}))`.
fn sigma_pow_c(j: i32) -> LaurentPoly {
    let d = QScalar::q_diff().inv().expect("q − q^{-1} ≠ 0");
    let a = k_monomial(1, -1).scale(&(&QScalar::q_pow(-2 * j) * &d));
    let b = k_monomial(-1, 1).scale(&(&QScalar::q_pow(2 * j) * &d));
    &a - &b
}

/// `σ^k(t) − t`.
fn t_shift(k: i32) -> LaurentPoly {
    let mut s = LaurentPoly::zero(NVARS);
    if k > 0 {
        for j in 0..k {
            s = &s + &sigma_pow_c(j);
        }
    } else {
        for j in 1..=-k {
            s = &s - &sigma_pow_c(-j);
        }
    }
    s
}

/// Checks that `a` lies in `R`: no negative powers of `t`.
pub fn check_base(a: &LaurentPoly) -> Result<(), GwaError> {
    if a.nvars() != NVARS {
        return Err(GwaError::NotInBase(format!("{} variables", a.nvars())));
    }
    if a.terms().any(|(e, _)| e[T] < 0) {
        return Err(GwaError::NotInBase("negative power of t".into()));
    }
    Ok(())
}

/// `σ^k(a)` for `a ∈ R`.
pub fn sigma_pow(a: &LaurentPoly, k: i32) -> LaurentPoly {
    if k == 0 {
        return a.clone();
    }
    let shifted_t = &t_var() + &t_shift(k);
    let mut out = LaurentPoly::zero(NVARS);
    for (e, c) in a.terms() {
        let scale = &QScalar::q_pow(k * (e[K2] - e[K1])) * c;
        let k_part = LaurentPoly::monomial(NVARS, vec![e[K1], e[K2], 0], scale);
        out = &out + &(&k_part * &shifted_t.pow(e[T] as u32));
    }
    out
}

pub fn sigma(a: &LaurentPoly) -> LaurentPoly {
    sigma_pow(a, 1)
}

/// `X^n` stands for `X₊^n` (`n > 0`), `X₋^{-n}` (`n < 0`) or `1`.
/// An element is `Σ_n a_n X^n` with `a_n ∈ R` written on the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GwaElement {
    terms: BTreeMap<i32, LaurentPoly>,
}

/// Letters of a word in the generalized Weyl algebra.
#[derive(Clone, Debug)]
pub enum GwaLetter {
    Base(LaurentPoly),
    Plus,
    Minus,
}

impl GwaElement {
    pub fn zero() -> Self {
        GwaElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::base(LaurentPoly::one(NVARS))
    }

    pub fn base(a: LaurentPoly) -> Self {
        Self::term(a, 0)
    }

    /// `a X^n`.
    pub fn term(a: LaurentPoly, n: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !a.is_zero() {
            terms.insert(n, a);
        }
        GwaElement { terms }
    }

    pub fn x_plus() -> Self {
        Self::term(LaurentPoly::one(NVARS), 1)
    }

    pub fn x_minus() -> Self {
        Self::term(LaurentPoly::one(NVARS), -1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &LaurentPoly)> {
        self.terms.iter().map(|(n, a)| (*n, a))
    }

    pub fn coefficient(&self, n: i32) -> LaurentPoly {
        self.terms
            .get(&n)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(NVARS))
    }

    /// The element as a member of `R`, if it has no `X₊`/`X₋` part.
    pub fn as_base(&self) -> Option<LaurentPoly> {
        match self.terms.len() {
            0 => Some(LaurentPoly::zero(NVARS)),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    fn accumulate(terms: &mut BTreeMap<i32, LaurentPoly>, n: i32, a: LaurentPoly) {
        if a.is_zero() {
            return;
        }
        let sum = match terms.remove(&n) {
            Some(old) => &old + &a,
            None => a,
        };
        if !sum.is_zero() {
            terms.insert(n, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (n, a) in &other.terms {
            Self::accumulate(&mut terms, *n, a.clone());
        }
        GwaElement { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-QScalar::one()))
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        let mut terms = BTreeMap::new();
        for (n, a) in &self.terms {
            Self::accumulate(&mut terms, *n, a.scale(c));
        }
        GwaElement { terms }
    }

    /// `X^m X^n = c · X^{m+n}` with `c ∈ R`.
    fn x_product(m: i32, n: i32) -> LaurentPoly {
        let mut c = LaurentPoly::one(NVARS);
        if m > 0 && n < 0 {
            // X₊^m X₋^k = σ^m(t) X₊^{m−1} X₋^{k−1}
            for j in 0..m.min(-n) {
                c = &c * &sigma_pow(&t_var(), m - j);
            }
        } else if m < 0 && n > 0 {
            // X₋^k X₊^n = σ^{-(k−1)}(t) X₋^{k−1} X₊^{n−1}
            let k = -m;
            for j in 0..k.min(n) {
                c = &c * &sigma_pow(&t_var(), -(k - 1 - j));
            }
        }
        c
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                let c = &(a * &sigma_pow(b, *m)) * &Self::x_product(*m, *n);
                Self::accumulate(&mut terms, m + n, c);
            }
        }
        GwaElement { terms }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Normal form `Σ a_n X₊^n + b_0 + Σ c_n X₋^n` of a word.
pub fn gwa_normal_form(word: &[GwaLetter]) -> Result<GwaElement, GwaError> {
    let mut acc = GwaElement::one();
    for l in word {
        let next = match l {
            GwaLetter::Base(a) => {
                check_base(a)?;
                GwaElement::base(a.clone())
            }
            GwaLetter::Plus => GwaElement::x_plus(),
            GwaLetter::Minus => GwaElement::x_minus(),
        };
        acc = acc.mul(&next);
    }
    Ok(acc)
}

impl fmt::Display for GwaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = base_names();
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(n, a)| {
                let x = match *n {
                    0 => String::new(),
                    1 => "*X+".into(),
                    -1 => "*X-".into(),
                    n if n > 0 => format!("*X+^{n}"),
                    n => format!("*X-^{}", -n),
                };
                format!("({}){x}", a.display_with(&names))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
