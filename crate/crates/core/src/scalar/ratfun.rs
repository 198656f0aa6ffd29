use std::fmt;

use super::{LaurentPoly, QScalar, ScalarError};

/// An element of the fraction field of a Laurent polynomial ring.
///
/// The denominator is kept as a product of powers of normalized factors: each
/// factor is a genuine polynomial with no monomial content and a lex-leading
/// coefficient of 1. Factors are never split further, so two factors may share
/// a common divisor; correctness only relies on exact division, and equality
/// is decided by cross-multiplication.
#[derive(Clone)]
pub struct RatFun {
    num: LaurentPoly,
    den: Vec<(LaurentPoly, u32)>,
}

/// Splits `f` into a monomial unit and a normalized core, `f = unit * core`.
fn normalize_factor(f: &LaurentPoly) -> (LaurentPoly, Option<LaurentPoly>) {
    let n = f.nvars();
    if let Some((e, c)) = f.as_monomial() {
        return (LaurentPoly::monomial(n, e.clone(), c.clone()), None);
    }
    let base = f.min_exponents();
    let shifted = f.shift(&base.iter().map(|x| -x).collect::<Vec<_>>());
    let lead = shifted.leading().expect("nonzero").1.clone();
    let core = shifted.scale(&lead.inv().expect("nonzero leading coefficient"));
    (LaurentPoly::monomial(n, base, lead), Some(core))
}

impl RatFun {
    pub fn from_laurent(p: LaurentPoly) -> Self {
        RatFun {
            num: p,
            den: Vec::new(),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_laurent(LaurentPoly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_laurent(LaurentPoly::one(nvars))
    }

    pub fn constant(nvars: usize, c: QScalar) -> Self {
        Self::from_laurent(LaurentPoly::constant(nvars, c))
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if num.nvars() != den.nvars() {
            return Err(ScalarError::VariableMismatch {
                left: num.nvars(),
                right: den.nvars(),
            });
        }
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::from_laurent(num).mul_inner(&Self::from_laurent(den).inv()?))
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is a unit, i.e. the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.is_laurent().then_some(&self.num)
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> LaurentPoly {
        let mut d = LaurentPoly::one(self.nvars());
        for (f, e) in &self.den {
            d = &d * &f.pow(*e);
        }
        d
    }

    fn reduce(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        for (f, e) in self.den.iter_mut() {
            while *e > 0 {
                match self.num.div_exact(f) {
                    Some(quot) => {
                        self.num = quot;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|(_, e)| *e > 0);
        self.den.sort();
        self
    }

    fn merge_factor(den: &mut Vec<(LaurentPoly, u32)>, f: LaurentPoly, e: u32) {
        match den.iter_mut().find(|(g, _)| *g == f) {
            Some((_, x)) => *x += e,
            None => den.push((f, e)),
        }
    }

    fn check(&self, other: &Self) -> Result<(), ScalarError> {
        if self.nvars() == other.nvars() {
            Ok(())
        } else {
            Err(ScalarError::VariableMismatch {
                left: self.nvars(),
                right: other.nvars(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let mut lcd: Vec<(LaurentPoly, u32)> = self.den.clone();
        for (f, e) in &other.den {
            match lcd.iter_mut().find(|(g, _)| g == f) {
                Some((_, x)) => *x = (*x).max(*e),
                None => lcd.push((f.clone(), *e)),
            }
        }
        let lift = |x: &RatFun| {
            let mut p = x.num.clone();
            for (f, e) in &lcd {
                let own = x.den.iter().find(|(g, _)| g == f).map_or(0, |(_, k)| *k);
                if *e > own {
                    p = &p * &f.pow(e - own);
                }
            }
            p
        };
        let num = &lift(self) + &lift(other);
        Ok(RatFun { num, den: lcd }.reduce())
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.try_add(&other.neg())
    }

    fn mul_inner(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars());
        }
        // Cancel across before multiplying so intermediate numerators stay small.
        let a = RatFun {
            num: self.num.clone(),
            den: other.den.clone(),
        }
        .reduce();
        let b = RatFun {
            num: other.num.clone(),
            den: self.den.clone(),
        }
        .reduce();
        let mut den = a.den;
        for (f, e) in b.den {
            Self::merge_factor(&mut den, f, e);
        }
        den.sort();
        RatFun {
            num: &a.num * &b.num,
            den,
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check(other)?;
        Ok(self.mul_inner(other))
    }

    pub fn neg(&self) -> Self {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars());
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let (unit, core) = normalize_factor(&self.num);
        let unit_inv = unit.monomial_inverse().expect("monomial unit");
        let num = &unit_inv * &self.denominator();
        let den = core.map(|c| vec![(c, 1)]).unwrap_or_default();
        Ok(RatFun { num, den }.reduce())
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ScalarError> {
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.nvars());
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul_inner(&base);
        }
        Ok(acc)
    }

    /// Applies a variable substitution that maps every Laurent polynomial to a
    /// Laurent polynomial and is a ring automorphism (signed permutations and
    /// `q`-power rescalings).
    pub fn map_vars(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        let mut num = f(&self.num);
        let mut den = Vec::new();
        for (g, e) in &self.den {
            let (unit, core) = normalize_factor(&f(g));
            let unit_inv = unit.monomial_inverse().expect("monomial unit");
            num = &num * &unit_inv.pow(*e);
            if let Some(c) = core {
                Self::merge_factor(&mut den, c, *e);
            }
        }
        RatFun { num, den }.reduce()
    }

    /// If `self` equals `c * other` for a scalar `c`, returns `c`.
    pub fn scalar_ratio(&self, other: &Self) -> Option<QScalar> {
        if other.is_zero() {
            return None;
        }
        let quot = self.try_div(other).ok()?;
        quot.as_laurent()?.as_constant()
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        RatDisplay { r: self, names }
    }
}

struct RatDisplay<'a> {
    r: &'a RatFun,
    names: &'a [String],
}

impl fmt::Display for RatDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r.is_laurent() {
            return write!(f, "{}", self.r.num.display_with(self.names));
        }
        write!(
            f,
            "({})/({})",
            self.r.num.display_with(self.names),
            self.r.denominator().display_with(self.names)
        )
    }
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        self.nvars() == other.nvars() && self.try_sub(other).map(|d| d.is_zero()).unwrap_or(false)
    }
}

impl Eq for RatFun {}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.denominator())
        }
    }
}

impl std::ops::Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        self.try_add(rhs)
            .expect("rational functions over different variable sets")
    }
}

impl std::ops::Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self.try_sub(rhs)
            .expect("rational functions over different variable sets")
    }
}

impl std::ops::Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        self.try_mul(rhs)
            .expect("rational functions over different variable sets")
    }
}

impl std::ops::Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> LaurentPoly {
        LaurentPoly::var(3, i)
    }
    fn xi(i: usize) -> LaurentPoly {
        LaurentPoly::var_pow(3, i, -1)
    }

    #[test]
    fn cancels_common_factor() {
        let num = &x(0).pow(2) - &xi(0).pow(2);
        let den = &x(0) - &xi(0);
        let r = RatFun::new(num, den).unwrap();
        assert!(r.is_laurent());
        assert_eq!(r, RatFun::from_laurent(&x(0) + &xi(0)));
    }

    #[test]
    fn inverse_of_binomial() {
        let a = &(&x(1) * &xi(2)) - &(&xi(1) * &x(2));
        let r = RatFun::from_laurent(a);
        let prod = &r * &r.inv().unwrap();
        assert_eq!(prod, RatFun::one(3));
        assert!(prod.is_laurent());
    }

    #[test]
    fn fraction_equivalence() {
        let p = RatFun::from_laurent(&x(0) + &x(1));
        let r = RatFun::from_laurent(&x(1) - &x(2));
        let s = RatFun::from_laurent(&x(2) + &LaurentPoly::constant(3, QScalar::q_pow(1)));
        let lhs = p.try_div(&r).unwrap();
        let rhs = (&s * &p).try_div(&(&s * &r)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(
            RatFun::zero(2).inv().unwrap_err(),
            ScalarError::DivisionByZero
        );
    }

    #[test]
    fn sums_over_distinct_denominators() {
        let a = RatFun::from_laurent(&x(0) - &x(1)).inv().unwrap();
        let b = RatFun::from_laurent(&x(0) + &x(1)).inv().unwrap();
        let sum = &a + &b;
        let expect = RatFun::new(
            x(0).scale(&QScalar::from_int(2)),
            &x(0).pow(2) - &x(1).pow(2),
        )
        .unwrap();
        assert_eq!(sum, expect);
    }
}
