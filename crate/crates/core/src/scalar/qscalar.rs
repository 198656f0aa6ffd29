use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{self, Coeffs};
use super::ScalarError;

/// An exact element of `Q(q)`, the field of rational functions in a formal
/// transcendental `q`.
///
/// The value is `q^val * num(q) / den(q)` where neither `num` nor `den` is
/// divisible by `q`, the two are coprime in `Z[q]`, and `den` has a positive
/// leading coefficient. Those conditions make the representation canonical, so
/// structural equality is field equality. Laurent polynomials (`den == 1`) take
/// a fast path through every operation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QScalar {
    val: i32,
    num: Coeffs,
    den: Coeffs,
}

fn one_poly() -> Coeffs {
    vec![BigInt::one()]
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar {
            val: 0,
            num: Vec::new(),
            den: one_poly(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        QScalar {
            val: 0,
            num: vec![n],
            den: one_poly(),
        }
    }

    /// `q^k`.
    pub fn q_pow(k: i32) -> Self {
        QScalar {
            val: k,
            num: one_poly(),
            den: one_poly(),
        }
    }

    /// `c * q^k`.
    pub fn monomial(c: i64, k: i32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        QScalar {
            val: k,
            num: vec![BigInt::from(c)],
            den: one_poly(),
        }
    }

    /// The quantum difference `q - q^{-1}`.
    pub fn q_diff() -> Self {
        Self::laurent(-1, &[-1, 0, 1])
    }

    /// `q^low * (c_0 + c_1 q + c_2 q^2 + ...)`.
    pub fn laurent(low: i32, coeffs: &[i64]) -> Self {
        let num: Coeffs = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        Self::from_parts(low, num, one_poly())
    }

    /// Builds `q^val * num / den` from arbitrary integer polynomials and
    /// canonicalizes. Panics if `den` is zero.
    pub(crate) fn from_parts(val: i32, mut num: Coeffs, mut den: Coeffs) -> Self {
        poly::trim(&mut num);
        poly::trim(&mut den);
        assert!(!den.is_empty(), "QScalar with zero denominator");
        if num.is_empty() {
            return Self::zero();
        }
        let mut val = val;
        let ln = poly::low_order(&num);
        if ln > 0 {
            num.drain(..ln);
            val += ln as i32;
        }
        let ld = poly::low_order(&den);
        if ld > 0 {
            den.drain(..ld);
            val -= ld as i32;
        }
        if den.len() == 1 {
            let d = den[0].clone();
            if !d.is_one() {
                let g = poly::content(&num).gcd(&d);
                let mut d = d / &g;
                let mut n = poly::div_scalar_exact(&num, &g);
                if d.is_negative() {
                    d = -d;
                    n = poly::neg(&n);
                }
                num = n;
                den = vec![d];
            }
        } else {
            let g = poly::gcd(&num, &den);
            if !poly::is_one(&g) {
                num = poly::div_exact(&num, &g).expect("gcd divides numerator");
                den = poly::div_exact(&den, &g).expect("gcd divides denominator");
            }
            if den.last().is_some_and(|c| c.is_negative()) {
                num = poly::neg(&num);
                den = poly::neg(&den);
            }
        }
        QScalar { val, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.val == 0 && poly::is_one(&self.num) && poly::is_one(&self.den)
    }

    /// True when the value lies in `Z[q, q^{-1}]`.
    pub fn is_laurent(&self) -> bool {
        poly::is_one(&self.den)
    }

    /// Returns `(c, k)` when the value is `c * q^k` for an integer `c`.
    pub fn as_monomial(&self) -> Option<(BigInt, i32)> {
        if self.num.len() == 1 && self.is_laurent() {
            Some((self.num[0].clone(), self.val))
        } else {
            None
        }
    }

    /// The exponent of the lowest power of `q` in a Laurent expansion at zero.
    pub fn order_at_zero(&self) -> Option<i32> {
        if self.is_zero() {
            None
        } else {
            Some(self.val)
        }
    }

    /// Degree at infinity: `deg(numerator) - deg(denominator)`.
    pub fn degree(&self) -> Option<i32> {
        if self.is_zero() {
            None
        } else {
            Some(self.val + (self.num.len() as i32 - 1) - (self.den.len() as i32 - 1))
        }
    }

    /// Numerator and denominator as polynomials in `q` (no negative powers).
    pub fn numer_denom(&self) -> (Coeffs, Coeffs) {
        if self.val >= 0 {
            (poly::shift(&self.num, self.val as usize), self.den.clone())
        } else {
            (
                self.num.clone(),
                poly::shift(&self.den, (-self.val) as usize),
            )
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.last().is_some_and(|c| c.is_negative()) {
            num = poly::neg(&num);
            den = poly::neg(&den);
        }
        if den.len() == 1 && !den[0].is_one() {
            return Ok(Self::from_parts(-self.val, num, den));
        }
        Ok(QScalar {
            val: -self.val,
            num,
            den,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let v = self.val.min(other.val);
        let a = poly::shift(&self.num, (self.val - v) as usize);
        let b = poly::shift(&other.num, (other.val - v) as usize);
        if self.is_laurent() && other.is_laurent() {
            return Self::from_parts(v, poly::add(&a, &b), one_poly());
        }
        if self.den == other.den {
            return Self::from_parts(v, poly::add(&a, &b), self.den.clone());
        }
        let num = poly::add(&poly::mul(&a, &other.den), &poly::mul(&b, &self.den));
        Self::from_parts(v, num, poly::mul(&self.den, &other.den))
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_laurent() && other.is_laurent() {
            return QScalar {
                val: self.val + other.val,
                num: poly::mul(&self.num, &other.num),
                den: one_poly(),
            };
        }
        Self::from_parts(
            self.val + other.val,
            poly::mul(&self.num, &other.num),
            poly::mul(&self.den, &other.den),
        )
    }
}

impl Default for QScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for QScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            val: self.val,
            num: poly::neg(&self.num),
            den: self.den.clone(),
        }
    }
}

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&QScalar> for &QScalar {
            type Output = QScalar;
            fn $m(self, rhs: &QScalar) -> QScalar {
                let f: fn(&QScalar, &QScalar) -> QScalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<QScalar> for QScalar {
            type Output = QScalar;
            fn $m(self, rhs: QScalar) -> QScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QScalar> for QScalar {
            type Output = QScalar;
            fn $m(self, rhs: &QScalar) -> QScalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<QScalar> for &QScalar {
            type Output = QScalar;
            fn $m(self, rhs: QScalar) -> QScalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_ref(b));
forward_binop!(Sub, sub, |a, b| a.add_ref(&-b));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));

impl AddAssign<&QScalar> for QScalar {
    fn add_assign(&mut self, rhs: &QScalar) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&QScalar> for QScalar {
    fn sub_assign(&mut self, rhs: &QScalar) {
        *self = self.add_ref(&-rhs);
    }
}

impl MulAssign<&QScalar> for QScalar {
    fn mul_assign(&mut self, rhs: &QScalar) {
        *self = self.mul_ref(rhs);
    }
}

/// A total order used only to make printed sums deterministic.
impl PartialOrd for QScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.val, &self.num, &self.den).cmp(&(other.val, &other.num, &other.den))
    }
}

pub(crate) fn write_poly(f: &mut fmt::Formatter<'_>, p: &[BigInt]) -> fmt::Result {
    if p.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (k, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { "-" } else { "+" })?;
        }
        first = false;
        match k {
            0 => write!(f, "{mag}")?,
            _ => {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if k == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{k}")?;
                }
            }
        }
    }
    Ok(())
}

impl QScalar {
    /// True when the printed form needs parentheses to be used as a factor.
    pub fn is_compound(&self) -> bool {
        let (n, d) = self.numer_denom();
        !poly::is_one(&d) || n.iter().filter(|c| !c.is_zero()).count() > 1
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.numer_denom();
        if poly::is_one(&d) {
            write_poly(f, &n)
        } else {
            write!(f, "(")?;
            write_poly(f, &n)?;
            write!(f, ")/(")?;
            write_poly(f, &d)?;
            write!(f, ")")
        }
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QScalar({self})")
    }
}

impl FromStr for QScalar {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse::parse_scalar(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QScalar {
        QScalar::q_pow(1)
    }

    #[test]
    fn quantum_difference_times_sum() {
        let qi = QScalar::q_pow(-1);
        let lhs = (q() - &qi) * (q() + &qi);
        assert_eq!(lhs, QScalar::q_pow(2) - QScalar::q_pow(-2));
    }

    #[test]
    fn partial_fractions_recombine() {
        let one = QScalar::one();
        let a = (q() - &one).inv().unwrap();
        let b = (q() + &one).inv().unwrap();
        let expect = QScalar::monomial(2, 1)
            .checked_div(&(QScalar::q_pow(2) - &one))
            .unwrap();
        assert_eq!(a + b, expect);
        assert_eq!(expect.to_string(), "(2*q)/(q^2-1)");
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(QScalar::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn canonical_sign_and_content() {
        let a = QScalar::from_parts(
            0,
            vec![BigInt::from(-2)],
            vec![BigInt::from(-4), BigInt::from(-6)],
        );
        let b = QScalar::from_parts(
            0,
            vec![BigInt::from(1)],
            vec![BigInt::from(2), BigInt::from(3)],
        );
        assert_eq!(a, b);
        assert_eq!(b.to_string(), "(1)/(3*q+2)");
    }

    #[test]
    fn display_of_laurent_values() {
        assert_eq!(QScalar::q_diff().to_string(), "(q^2-1)/(q)");
        assert_eq!(QScalar::laurent(0, &[-1, 0, 1]).to_string(), "q^2-1");
        assert_eq!(QScalar::monomial(-3, 0).to_string(), "-3");
    }

    #[test]
    fn degree_and_order() {
        let x = QScalar::q_diff().inv().unwrap();
        assert_eq!(x.degree(), Some(-1));
        assert_eq!(x.order_at_zero(), Some(1));
    }
}
