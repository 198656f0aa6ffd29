//! A small recursive-descent parser shared by the scalar and algebra text grammars.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' '-'? INT)?
//! primary := INT | IDENT ('[' INT (',' INT)* ']')? | '(' expr ')'
//! ```
//! Whitespace is insignificant.

use num_bigint::BigInt;

use super::{QScalar, ScalarError};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ScalarError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((start, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()[],".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ScalarError::Parse {
                pos: i,
                msg: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

/// Values an expression can evaluate to.
pub trait ExprValue: Sized + Clone {
    fn from_int(n: BigInt) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, other: &Self) -> Result<Self, String>;
    fn pow(&self, k: i64) -> Result<Self, String>;
}

/// Resolves an identifier (with optional bracketed integer indices) to a value.
pub trait AtomResolver<T> {
    fn resolve(&self, name: &str, indices: &[i64]) -> Result<T, String>;
}

impl<T, F> AtomResolver<T> for F
where
    F: Fn(&str, &[i64]) -> Result<T, String>,
{
    fn resolve(&self, name: &str, indices: &[i64]) -> Result<T, String> {
        self(name, indices)
    }
}

struct Parser<'a, T, R: AtomResolver<T>> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    atoms: &'a R,
    _t: std::marker::PhantomData<T>,
}

impl<T: ExprValue, R: AtomResolver<T>> Parser<'_, T, R> {
    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn err<V>(&self, msg: impl Into<String>) -> Result<V, ScalarError> {
        Err(ScalarError::Parse {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn peek_sym(&self, c: char) -> bool {
        matches!(self.toks.get(self.pos), Some((_, Tok::Sym(x))) if *x == c)
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ScalarError> {
        if self.peek_sym(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn int(&mut self) -> Result<i64, ScalarError> {
        let neg = if self.peek_sym('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.toks.get(self.pos) {
            Some((_, Tok::Int(n))) => {
                let v: i64 = match i64::try_from(n.clone()) {
                    Ok(v) => v,
                    Err(_) => return self.err("integer out of range"),
                };
                self.pos += 1;
                Ok(if neg { -v } else { v })
            }
            _ => self.err("expected integer"),
        }
    }

    fn expr(&mut self) -> Result<T, ScalarError> {
        let mut acc = self.term()?;
        loop {
            if self.peek_sym('+') {
                self.pos += 1;
                acc = acc.add(&self.term()?);
            } else if self.peek_sym('-') {
                self.pos += 1;
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<T, ScalarError> {
        let mut acc = self.unary()?;
        loop {
            if self.peek_sym('*') {
                self.pos += 1;
                acc = acc.mul(&self.unary()?);
            } else if self.peek_sym('/') {
                self.pos += 1;
                let at = self.here();
                let d = self.unary()?;
                acc = acc
                    .div(&d)
                    .map_err(|msg| ScalarError::Parse { pos: at, msg })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<T, ScalarError> {
        if self.peek_sym('-') {
            self.pos += 1;
            Ok(self.unary()?.neg())
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<T, ScalarError> {
        let at = self.here();
        let base = self.primary()?;
        if self.peek_sym('^') {
            self.pos += 1;
            let k = self.int()?;
            base.pow(k)
                .map_err(|msg| ScalarError::Parse { pos: at, msg })
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<T, ScalarError> {
        let at = self.here();
        match self.toks.get(self.pos).cloned() {
            Some((_, Tok::Int(n))) => {
                self.pos += 1;
                Ok(T::from_int(n))
            }
            Some((_, Tok::Ident(name))) => {
                self.pos += 1;
                let mut idx = Vec::new();
                if self.peek_sym('[') {
                    self.pos += 1;
                    idx.push(self.int()?);
                    while self.peek_sym(',') {
                        self.pos += 1;
                        idx.push(self.int()?);
                    }
                    self.expect_sym(']')?;
                }
                self.atoms
                    .resolve(&name, &idx)
                    .map_err(|msg| ScalarError::Parse { pos: at, msg })
            }
            Some((_, Tok::Sym('('))) => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect_sym(')')?;
                Ok(v)
            }
            _ => self.err("expected a value"),
        }
    }
}

/// Parses `src` into a value of type `T`, resolving identifiers with `atoms`.
pub fn parse_with<T: ExprValue, R: AtomResolver<T>>(
    src: &str,
    atoms: &R,
) -> Result<T, ScalarError> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        end: src.chars().count(),
        toks,
        pos: 0,
        atoms,
        _t: std::marker::PhantomData,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

impl ExprValue for QScalar {
    fn from_int(n: BigInt) -> Self {
        QScalar::from_bigint(n)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, other: &Self) -> Result<Self, String> {
        self.checked_div(other).map_err(|e| e.to_string())
    }
    fn pow(&self, k: i64) -> Result<Self, String> {
        let k = i32::try_from(k).map_err(|_| "exponent out of range".to_string())?;
        QScalar::pow(self, k).map_err(|e| e.to_string())
    }
}

/// Parses the scalar grammar: `q`, integers, `+ - * / ^` and parentheses.
pub fn parse_scalar(src: &str) -> Result<QScalar, ScalarError> {
    parse_with(src, &|name: &str, idx: &[i64]| {
        if name == "q" && idx.is_empty() {
            Ok(QScalar::q_pow(1))
        } else {
            Err(format!("unknown scalar atom '{name}'"))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_printed_fractions() {
        let x: QScalar = "(q^2-1)/(q)".parse().unwrap();
        assert_eq!(x, QScalar::q_diff());
        let y: QScalar = "2*q/(q^2 - 1)".parse().unwrap();
        assert_eq!(y.to_string(), "(2*q)/(q^2-1)");
    }

    #[test]
    fn negative_exponents_and_unary_minus() {
        let x: QScalar = "-q^-2 + 3".parse().unwrap();
        assert_eq!(x, QScalar::from_int(3) - QScalar::q_pow(-2));
    }

    #[test]
    fn rejects_garbage() {
        assert!("q +".parse::<QScalar>().is_err());
        assert!("x".parse::<QScalar>().is_err());
        assert!("1/(q-q)".parse::<QScalar>().is_err());
        assert!("q $ 2".parse::<QScalar>().is_err());
    }
}
