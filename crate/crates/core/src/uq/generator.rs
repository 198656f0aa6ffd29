use std::fmt;

use serde::{Deserialize, Serialize};

use super::{AlgebraElement, UqError};
use crate::uq::roots::Roots;

/// A named generator of `U_q(gl_N)`, in either presentation. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    E(usize),
    F(usize),
    K(usize),
    Kinv(usize),
    /// Root vector `E_{β_ij}`, `i < j`.
    Ebeta(usize, usize),
    /// Root vector `F_{β_ij}`, `i < j`.
    Fbeta(usize, usize),
    /// `t_ij`; zero unless `i ≥ j`.
    T(usize, usize),
    /// `t̄_ij`; zero unless `i ≤ j`.
    Tb(usize, usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::E(i) => write!(f, "E[{i}]"),
            Generator::F(i) => write!(f, "F[{i}]"),
            Generator::K(i) => write!(f, "K[{i}]"),
            Generator::Kinv(i) => write!(f, "Kinv[{i}]"),
            Generator::Ebeta(i, j) => write!(f, "Ebeta[{i},{j}]"),
            Generator::Fbeta(i, j) => write!(f, "Fbeta[{i},{j}]"),
            Generator::T(i, j) => write!(f, "t[{i},{j}]"),
            Generator::Tb(i, j) => write!(f, "tb[{i},{j}]"),
        }
    }
}

impl Generator {
    pub fn is_rtt(&self) -> bool {
        matches!(self, Generator::T(..) | Generator::Tb(..))
    }

    /// The generator as an element of `U_q(gl_n)`.
    pub fn element(&self, n: usize) -> Result<AlgebraElement, UqError> {
        if n == 0 {
            return Err(UqError::InvalidRank(0));
        }
        let roots = Roots::new(n);
        let bad = || Err(UqError::InvalidGenerator(format!("{self} for N={n}")));
        let in_range = |i: usize| (1..=n).contains(&i);
        let root = |i: usize, j: usize| roots.pos(i, j);
        let mut m = PbwMonomial::one(n);
        match *self {
            Generator::E(i) | Generator::F(i) if !(1..n).contains(&i) => return bad(),
            Generator::E(i) => m.k[root(i, i + 1).unwrap()] = 1,
            Generator::F(i) => m.r[root(i, i + 1).unwrap()] = 1,
            Generator::Ebeta(i, j) | Generator::Fbeta(i, j) if root(i, j).is_none() => {
                return bad()
            }
            Generator::Ebeta(i, j) => m.k[root(i, j).unwrap()] = 1,
            Generator::Fbeta(i, j) => m.r[root(i, j).unwrap()] = 1,
            Generator::K(i) | Generator::Kinv(i) if !in_range(i) => return bad(),
            Generator::K(i) => m.lambda[i - 1] = 1,
            Generator::Kinv(i) => m.lambda[i - 1] = -1,
            Generator::T(i, j) | Generator::Tb(i, j) if !(in_range(i) && in_range(j)) => {
                return bad()
            }
            Generator::T(i, j) | Generator::Tb(i, j) => return Ok(rtt_element(n, *self, i, j)),
        }
        AlgebraElement::monomial(n, &m)
    }
}

fn rtt_element(n: usize, g: Generator, i: usize, j: usize) -> AlgebraElement {
    use super::mono::TMono;
    use super::rules::Sym;
    let roots = Roots::new(n);
    let sym = Sym {
        a: i,
        b: j,
        bar: matches!(g, Generator::Tb(..)),
    };
    match sym.letter(&roots) {
        None => AlgebraElement::zero(n),
        Some(letter) => {
            let mut mono = TMono::one(n);
            letter.add_to(&mut mono, 1);
            AlgebraElement::from_t_terms(n, [(mono, crate::scalar::QScalar::one())])
        }
    }
}

/// An ordered PBW monomial `F_{β_1}^{r_1}⋯F_{β_M}^{r_M} K_1^{λ_1}⋯K_N^{λ_N} E_{β_1}^{k_1}⋯E_{β_M}^{k_M}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PbwMonomial {
    pub r: Vec<u32>,
    pub lambda: Vec<i32>,
    pub k: Vec<u32>,
}

impl PbwMonomial {
    pub fn one(n: usize) -> Self {
        let m = n * (n - 1) / 2;
        PbwMonomial {
            r: vec![0; m],
            lambda: vec![0; n],
            k: vec![0; m],
        }
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub(crate) fn check(&self, n: usize) -> Result<(), UqError> {
        let m = n * (n - 1) / 2;
        if self.lambda.len() != n || self.r.len() != m || self.k.len() != m {
            return Err(UqError::InvalidMonomial(n));
        }
        Ok(())
    }

    pub fn is_k_only(&self) -> bool {
        self.r.iter().chain(&self.k).all(|&x| x == 0)
    }

    pub fn to_element(&self) -> Result<AlgebraElement, UqError> {
        AlgebraElement::monomial(self.n(), self)
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_element() {
            Ok(e) => {
                // coefficient is 1 by construction
                write!(f, "{e}")
            }
            Err(_) => write!(f, "{:?}", self),
        }
    }
}

/// Evaluates a word `g_1^{e_1} ⋯ g_k^{e_k}` into PBW normal form. Negative
/// exponents are allowed only on `K`-type generators.
pub fn normal_form(n: usize, word: &[(Generator, i32)]) -> Result<AlgebraElement, UqError> {
    let mut acc = AlgebraElement::one(n);
    for (g, e) in word {
        acc = acc.try_mul(&g.element(n)?.pow(*e)?)?;
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    ChevalleyToRtt,
    RttToChevalley,
}

/// A generator's image in the other presentation.
#[derive(Clone, Debug)]
pub struct Translation {
    pub element: AlgebraElement,
    /// The image written over the target generator family; parses back to
    /// `element`.
    pub text: String,
}

pub fn translate(n: usize, g: Generator, dir: Direction) -> Result<Translation, UqError> {
    let element = g.element(n)?;
    let text = match dir {
        Direction::ChevalleyToRtt => element.to_rtt_string(),
        Direction::RttToChevalley => element.to_string(),
    };
    Ok(Translation { element, text })
}

/// All PBW monomials with every exponent bounded by `bound` in absolute value,
/// in lexicographic order of `(r, λ, k)`.
pub fn enumerate_basis(n: usize, bound: u32) -> Vec<PbwMonomial> {
    let m = n * (n - 1) / 2;
    let b = bound as i32;
    let nonneg: Vec<Vec<i32>> = cartesian(m, 0, b);
    let signed: Vec<Vec<i32>> = cartesian(n, -b, b);
    let mut out = Vec::with_capacity(nonneg.len() * nonneg.len() * signed.len());
    for r in &nonneg {
        for lambda in &signed {
            for k in &nonneg {
                out.push(PbwMonomial {
                    r: r.iter().map(|&x| x as u32).collect(),
                    lambda: lambda.clone(),
                    k: k.iter().map(|&x| x as u32).collect(),
                });
            }
        }
    }
    out
}

fn cartesian(len: usize, lo: i32, hi: i32) -> Vec<Vec<i32>> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}
