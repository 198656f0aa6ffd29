use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{QScalar, ScalarError};

/// A Laurent polynomial in a fixed number of commuting variables with
/// coefficients in `Q(q)`.
///
/// Terms are kept in a `BTreeMap` keyed by exponent vector, so iteration is in
/// lexicographic order and the last entry is the lex-leading term. No zero
/// coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, QScalar>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: QScalar) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, QScalar::one())
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        Self::var_pow(nvars, idx, 1)
    }

    pub fn var_pow(nvars: usize, idx: usize, k: i32) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = k;
        Self::monomial(nvars, e, QScalar::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<i32>, c: QScalar) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &QScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i32]) -> QScalar {
        self.terms.get(exps).cloned().unwrap_or_else(QScalar::zero)
    }

    /// The constant value, when the polynomial has only an exponent-zero term.
    pub fn as_constant(&self) -> Option<QScalar> {
        match self.terms.len() {
            0 => Some(QScalar::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn as_monomial(&self) -> Option<(&Vec<i32>, &QScalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Lex-leading term.
    pub fn leading(&self) -> Option<(&Vec<i32>, &QScalar)> {
        self.terms.iter().next_back()
    }

    fn check(&self, other: &Self) -> Result<(), ScalarError> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(ScalarError::VariableMismatch {
                left: self.nvars,
                right: other.nvars,
            })
        }
    }

    fn add_term(&mut self, e: Vec<i32>, c: QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check(other)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `X^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse of a single-term polynomial.
    pub fn monomial_inverse(&self) -> Option<Self> {
        let (e, c) = self.as_monomial()?;
        let ci = c.inv().ok()?;
        Some(Self::monomial(
            self.nvars,
            e.iter().map(|x| -x).collect(),
            ci,
        ))
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_exponents(&self) -> Vec<i32> {
        let mut m: Option<Vec<i32>> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(cur) => cur.iter().zip(e).map(|(a, b)| *a.min(b)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.nvars])
    }

    /// True when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    /// Exact quotient `self / divisor` in the Laurent ring, or `None` when the
    /// division is not exact. The divisor must be a polynomial without a
    /// monomial factor (every variable appears with exponent zero somewhere).
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let (lead_e, lead_c) = divisor.leading()?;
        let lead_inv = lead_c.inv().ok()?;
        let base = self.min_exponents();
        let mut rem = self.shift(&base.iter().map(|x| -x).collect::<Vec<_>>());
        let mut quot = Self::zero(self.nvars);
        while let Some((re, rc)) = rem.leading() {
            let qe: Vec<i32> = re.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            if qe.iter().any(|&x| x < 0) {
                return None;
            }
            let qc = rc * &lead_inv;
            let step = divisor.shift(&qe).scale(&qc);
            rem = &rem - &step;
            quot.add_term(qe, qc);
        }
        Some(quot.shift(&base))
    }

    /// Applies `X_j -> sign_j * X_{target_j}` to every variable.
    pub fn substitute_signed(&self, target: &[usize], negate: &[bool]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.nvars];
            let mut odd = false;
            for (j, &x) in e.iter().enumerate() {
                ne[target[j]] += x;
                if negate[j] && x % 2 != 0 {
                    odd = !odd;
                }
            }
            out.add_term(ne, if odd { -c } else { c.clone() });
        }
        out
    }

    /// Applies `X_j -> q^{powers_j} X_j`.
    pub fn scale_vars(&self, powers: &[i32]) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let k: i32 = e.iter().zip(powers).map(|(a, b)| a * b).sum();
                    (e.clone(), c * &QScalar::q_pow(k))
                })
                .collect(),
        }
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] != 0 {
                let mut ne = e.clone();
                ne[var] -= 1;
                out.add_term(ne, c * &QScalar::from_int(e[var] as i64));
            }
        }
        out
    }

    /// Evaluates at a point of `(Q(q)^*)^n`.
    pub fn eval(&self, point: &[QScalar]) -> Result<QScalar, ScalarError> {
        let mut acc = QScalar::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k != 0 {
                    t = &t * &x.pow(k)?;
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Elementary symmetric polynomial of degree `k` in the given values.
    pub fn elementary_symmetric(nvars: usize, values: &[LaurentPoly], k: usize) -> Self {
        // e_k via the recurrence e_k(x_1..x_n) = e_k(x_1..x_{n-1}) + x_n e_{k-1}(x_1..x_{n-1})
        let mut e = vec![Self::zero(nvars); k + 1];
        e[0] = Self::one(nvars);
        for v in values {
            for j in (1..=k).rev() {
                let t = &e[j - 1] * v;
                e[j] = &e[j] + &t;
            }
        }
        e.swap_remove(k)
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayWith { p: self, names }
    }
}

struct DisplayWith<'a> {
    p: &'a LaurentPoly,
    names: &'a [String],
}

impl fmt::Display for DisplayWith<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.p.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(j, &k)| {
                    if k == 1 {
                        self.names[j].clone()
                    } else {
                        format!("{}^{}", self.names[j], k)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else if c.is_compound() {
                write!(f, "({c})*{}", mono.join("*"))?;
            } else {
                write!(f, "{c}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|j| format!("x{j}")).collect();
        let shown = self.display_with(&names).to_string();
        f.write_str(&shown)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs)
            .expect("Laurent polynomials over different variable sets")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs)
            .expect("Laurent polynomials over different variable sets")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs)
            .expect("Laurent polynomials over different variable sets")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_law_for_inverse_variable() {
        let x = LaurentPoly::var(3, 1);
        let xi = LaurentPoly::var_pow(3, 1, -1);
        assert_eq!(&x * &xi, LaurentPoly::one(3));
    }

    #[test]
    fn elementary_symmetric_of_squares() {
        let a = LaurentPoly::var_pow(3, 1, 2);
        let b = LaurentPoly::var_pow(3, 2, 2);
        let e = LaurentPoly::elementary_symmetric(3, &[a.clone(), b.clone()], 1);
        assert_eq!(e, &a + &b);
    }

    #[test]
    fn annihilation() {
        let x = LaurentPoly::var(3, 0);
        let y = LaurentPoly::var(3, 2);
        assert!((&(&x - &x) * &y).is_zero());
    }

    #[test]
    fn mismatched_universes_are_rejected() {
        let a = LaurentPoly::var(2, 0);
        let b = LaurentPoly::var(3, 0);
        assert_eq!(
            a.try_mul(&b),
            Err(ScalarError::VariableMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn exact_division_by_binomial() {
        let x = LaurentPoly::var(2, 0);
        let y = LaurentPoly::var(2, 1);
        let f = &x - &y;
        let g = &(&x + &y) * &f;
        assert_eq!(g.div_exact(&f), Some(&x + &y));
        let h = &g + &LaurentPoly::one(2);
        assert_eq!(h.div_exact(&f), None);
    }
}
