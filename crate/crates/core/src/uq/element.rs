use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::engine::{accumulate, Engine};
use super::mono::TMono;
use super::{Generator, PbwMonomial, UqError};
use crate::scalar::parse::{parse_with, ExprValue};
use crate::scalar::{LaurentPoly, QScalar};

/// An element of `U_q(gl_N)`, a finite linear combination of PBW monomials.
///
/// Internally the coefficients are stored against the triangular (`t`, `K`,
/// `t̄`) monomials, which are in bijection with the Chevalley PBW monomials up
/// to explicit nonzero scalars; [`AlgebraElement::terms`] reports the
/// Chevalley expansion.
#[derive(Clone)]
pub struct AlgebraElement {
    engine: Arc<Engine>,
    terms: HashMap<TMono, QScalar>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.engine.n == other.engine.n && self.terms == other.terms
    }
}

impl Eq for AlgebraElement {}

/// Above this many term pairs a product is split across threads.
const PAR_THRESHOLD: usize = 64;

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement {
            engine: Engine::get(n),
            terms: HashMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::from_scalar(n, QScalar::one())
    }

    pub fn from_scalar(n: usize, c: QScalar) -> Self {
        let mut e = Self::zero(n);
        if !c.is_zero() {
            e.terms.insert(TMono::one(n), c);
        }
        e
    }

    pub(crate) fn from_t_terms(
        n: usize,
        terms: impl IntoIterator<Item = (TMono, QScalar)>,
    ) -> Self {
        let mut out = HashMap::new();
        for (m, c) in terms {
            accumulate(&mut out, m, c);
        }
        AlgebraElement {
            engine: Engine::get(n),
            terms: out,
        }
    }

    /// Terms in a fixed order (by internal monomial).
    pub(crate) fn sorted_t_terms(&self) -> Vec<(&TMono, &QScalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn n(&self) -> usize {
        self.engine.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The PBW monomial `F^r K^λ E^k` with coefficient 1.
    pub fn monomial(n: usize, m: &PbwMonomial) -> Result<Self, UqError> {
        let engine = Engine::get(n);
        m.check(n)?;
        let (c, t) = chevalley_to_t(&engine, m);
        Ok(Self::from_t_terms(n, [(t, c)]))
    }

    pub fn generator(n: usize, g: Generator) -> Result<Self, UqError> {
        g.element(n)
    }

    /// The Chevalley PBW expansion, sorted by monomial.
    pub fn terms(&self) -> Vec<(PbwMonomial, QScalar)> {
        let mut v: Vec<(PbwMonomial, QScalar)> = self
            .terms
            .iter()
            .map(|(t, c)| {
                let (s, m) = t_to_chevalley(&self.engine, t);
                (m, c * &s)
            })
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> QScalar {
        if m.check(self.n()).is_err() {
            return QScalar::zero();
        }
        let (c, t) = chevalley_to_t(&self.engine, m);
        match self.terms.get(&t) {
            // a_t · t = (a_t / c) · F^r K^λ E^k
            Some(x) => x.checked_div(&c).expect("nonzero conversion factor"),
            None => QScalar::zero(),
        }
    }

    fn check_rank(&self, other: &Self) -> Result<(), UqError> {
        if self.n() == other.n() {
            Ok(())
        } else {
            Err(UqError::RankMismatch {
                left: self.n(),
                right: other.n(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, UqError> {
        self.check_rank(other)?;
        let mut out = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut out, m.clone(), c.clone());
        }
        Ok(AlgebraElement {
            engine: self.engine.clone(),
            terms: out,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, UqError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, UqError> {
        self.check_rank(other)?;
        let engine = &self.engine;
        let pairs = self.terms.len() * other.terms.len();
        let terms = if pairs > PAR_THRESHOLD {
            let left: Vec<_> = self.terms.iter().collect();
            left.par_iter()
                .fold(HashMap::new, |mut acc, (a, ca)| {
                    for (b, cb) in &other.terms {
                        engine.mul_mono_into(a, b, &(*ca * cb), &mut acc);
                    }
                    acc
                })
                .reduce(HashMap::new, |mut x, y| {
                    if x.len() < y.len() {
                        return merge(y, x);
                    }
                    for (m, c) in y {
                        accumulate(&mut x, m, c);
                    }
                    x
                })
        } else {
            let mut acc = HashMap::new();
            for (a, ca) in &self.terms {
                for (b, cb) in &other.terms {
                    engine.mul_mono_into(a, b, &(ca * cb), &mut acc);
                }
            }
            acc
        };
        Ok(AlgebraElement {
            engine: self.engine.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            engine: self.engine.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.n());
        }
        AlgebraElement {
            engine: self.engine.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// `ab − ba`.
    pub fn commutator(&self, other: &Self) -> Result<Self, UqError> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// The scalar value, if this element is a multiple of 1.
    pub fn as_scalar(&self) -> Option<QScalar> {
        match self.terms.len() {
            0 => Some(QScalar::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.0.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Inverse of an invertible element, i.e. a nonzero multiple of some `K^λ`.
    pub fn inverse(&self) -> Result<Self, UqError> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_k_only() {
                let inv_m = TMono(m.0.iter().map(|x| -x).collect());
                let ci = c.inv().map_err(|_| UqError::NotInvertible)?;
                return Ok(Self::from_t_terms(self.n(), [(inv_m, ci)]));
            }
        }
        Err(UqError::NotInvertible)
    }

    pub fn pow(&self, k: i32) -> Result<Self, UqError> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one(self.n());
        let mut p = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&p)?;
            }
            e >>= 1;
            if e > 0 {
                p = p.try_mul(&p)?;
            }
        }
        Ok(acc)
    }

    /// The part spanned by monomials with no `E` and no `F` factors.
    pub fn k_part(&self) -> Self {
        AlgebraElement {
            engine: self.engine.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.is_k_only())
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The element as a Laurent polynomial in `K_1, …, K_N`, if it has no `E`
    /// or `F` part.
    pub fn to_k_laurent(&self) -> Option<LaurentPoly> {
        let n = self.n();
        let mut out = LaurentPoly::zero(n);
        for (m, c) in &self.terms {
            if !m.is_k_only() {
                return None;
            }
            out = &out + &LaurentPoly::monomial(n, m.k().to_vec(), c.clone());
        }
        Some(out)
    }

    pub fn from_k_laurent(p: &LaurentPoly) -> Self {
        let n = p.nvars();
        let zeros = vec![0; n * (n - 1) / 2];
        Self::from_t_terms(
            n,
            p.terms()
                .map(|(e, c)| (TMono::from_parts(&zeros, e, &zeros), c.clone()))
                .collect::<Vec<_>>(),
        )
    }

    /// Re-embeds an element of `U_q(gl_n)` into `U_q(gl_target)`, `target ≥ n`,
    /// by generator-index inclusion.
    pub fn embed(&self, target: usize) -> Result<Self, UqError> {
        let n = self.n();
        if target < n {
            return Err(UqError::InvalidRank(target));
        }
        if target == n {
            return Ok(self.clone());
        }
        let big = Engine::get(target);
        let terms = self.terms.iter().map(|(m, c)| {
            let mut l = vec![0; big.m()];
            let mut u = vec![0; big.m()];
            let mut k = vec![0; target];
            for r in self.engine.roots.iter() {
                let p = big.roots.pos(r.i, r.j).expect("root of the smaller rank");
                l[p] = m.l()[r.pos];
                u[p] = m.u()[r.pos];
            }
            k[..n].copy_from_slice(m.k());
            (TMono::from_parts(&l, &k, &u), c.clone())
        });
        Ok(Self::from_t_terms(target, terms.collect::<Vec<_>>()))
    }

    pub fn parse(n: usize, src: &str) -> Result<Self, UqError> {
        if n == 0 {
            return Err(UqError::InvalidRank(0));
        }
        let resolve = |name: &str, idx: &[i64]| -> Result<Parsed, String> {
            let u = |i: usize| -> Result<usize, String> {
                usize::try_from(idx[i]).map_err(|_| format!("negative index in {name}"))
            };
            let g = match (name, idx.len()) {
                ("q", 0) => return Ok(Parsed::Scalar(QScalar::q_pow(1))),
                ("E", 1) => Generator::E(u(0)?),
                ("F", 1) => Generator::F(u(0)?),
                ("K", 1) => Generator::K(u(0)?),
                ("Kinv", 1) => Generator::Kinv(u(0)?),
                ("t", 2) => Generator::T(u(0)?, u(1)?),
                ("tb", 2) => Generator::Tb(u(0)?, u(1)?),
                ("Ebeta", 2) => Generator::Ebeta(u(0)?, u(1)?),
                ("Fbeta", 2) => Generator::Fbeta(u(0)?, u(1)?),
                _ => return Err(format!("unknown atom '{name}' with {} indices", idx.len())),
            };
            g.element(n).map(Parsed::Elem).map_err(|e| e.to_string())
        };
        Ok(parse_with(src, &resolve)?.promote(n))
    }

    /// Renders the element over the triangular generators `t`, `K`, `tb`.
    pub fn to_rtt_string(&self) -> String {
        let e = &self.engine;
        let terms = self.sorted_t_terms();
        let rendered: Vec<(QScalar, String)> = terms
            .into_iter()
            .rev()
            .map(|(m, c)| {
                let mut f = Vec::new();
                for r in e.roots.iter() {
                    push_factor(&mut f, &format!("t[{},{}]", r.j, r.i), m.l()[r.pos]);
                }
                for (i, &x) in m.k().iter().enumerate() {
                    push_factor(&mut f, &format!("K[{}]", i + 1), x);
                }
                for r in e.roots.iter() {
                    push_factor(&mut f, &format!("tb[{},{}]", r.i, r.j), m.u()[r.pos]);
                }
                (c.clone(), f.join("*"))
            })
            .collect();
        join_terms(&rendered)
    }
}

fn merge(mut x: HashMap<TMono, QScalar>, y: HashMap<TMono, QScalar>) -> HashMap<TMono, QScalar> {
    for (m, c) in y {
        accumulate(&mut x, m, c);
    }
    x
}

fn push_factor(out: &mut Vec<String>, name: &str, e: i32) {
    match e {
        0 => {}
        1 => out.push(name.to_string()),
        _ => out.push(format!("{name}^{e}")),
    }
}

/// Joins `(coefficient, monomial)` pairs into text that parses back.
fn join_terms(terms: &[(QScalar, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (idx, (c, m)) in terms.iter().enumerate() {
        let text = if m.is_empty() {
            let t = c.to_string();
            if c.is_compound() && !t.starts_with('(') {
                format!("({t})")
            } else {
                t
            }
        } else if c.is_one() {
            m.clone()
        } else if (-c).is_one() {
            format!("-{m}")
        } else {
            let t = c.to_string();
            if c.is_compound() && !t.starts_with('(') {
                format!("({t})*{m}")
            } else {
                format!("{t}*{m}")
            }
        };
        if idx == 0 {
            s.push_str(&text);
        } else if let Some(rest) = text.strip_prefix('-') {
            s.push_str(" - ");
            s.push_str(rest);
        } else {
            s.push_str(" + ");
            s.push_str(&text);
        }
    }
    s
}

impl fmt::Display for AlgebraElement {
    /// Chevalley PBW normal form, highest monomials first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.engine;
        let rendered: Vec<(QScalar, String)> = self
            .terms()
            .into_iter()
            .rev()
            .map(|(m, c)| {
                let mut fs = Vec::new();
                for r in e.roots.iter() {
                    let name = if r.j == r.i + 1 {
                        format!("F[{}]", r.i)
                    } else {
                        format!("Fbeta[{},{}]", r.i, r.j)
                    };
                    push_factor(&mut fs, &name, m.r[r.pos] as i32);
                }
                for (i, &x) in m.lambda.iter().enumerate() {
                    push_factor(&mut fs, &format!("K[{}]", i + 1), x);
                }
                for r in e.roots.iter() {
                    let name = if r.j == r.i + 1 {
                        format!("E[{}]", r.i)
                    } else {
                        format!("Ebeta[{},{}]", r.i, r.j)
                    };
                    push_factor(&mut fs, &name, m.k[r.pos] as i32);
                }
                (c, fs.join("*"))
            })
            .collect();
        f.write_str(&join_terms(&rendered))
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement[N={}]({self})", self.n())
    }
}

/// Parse-time value: scalars stay scalars until they meet an algebra element,
/// which supplies the rank.
#[derive(Clone)]
enum Parsed {
    Scalar(QScalar),
    Elem(AlgebraElement),
}

impl Parsed {
    fn promote(&self, n: usize) -> AlgebraElement {
        match self {
            Parsed::Scalar(c) => AlgebraElement::from_scalar(n, c.clone()),
            Parsed::Elem(e) => e.clone(),
        }
    }

    fn binary(
        &self,
        other: &Self,
        fs: impl Fn(&QScalar, &QScalar) -> QScalar,
        fe: impl Fn(&AlgebraElement, &AlgebraElement) -> AlgebraElement,
    ) -> Self {
        match (self, other) {
            (Parsed::Scalar(a), Parsed::Scalar(b)) => Parsed::Scalar(fs(a, b)),
            (Parsed::Elem(a), b) => Parsed::Elem(fe(a, &b.promote(a.n()))),
            (a, Parsed::Elem(b)) => Parsed::Elem(fe(&a.promote(b.n()), b)),
        }
    }
}

impl ExprValue for Parsed {
    fn from_int(n: BigInt) -> Self {
        Parsed::Scalar(QScalar::from_bigint(n))
    }
    fn add(&self, other: &Self) -> Self {
        self.binary(other, |a, b| a + b, |a, b| a + b)
    }
    fn sub(&self, other: &Self) -> Self {
        self.binary(other, |a, b| a - b, |a, b| a - b)
    }
    fn mul(&self, other: &Self) -> Self {
        self.binary(other, |a, b| a * b, |a, b| a * b)
    }
    fn neg(&self) -> Self {
        match self {
            Parsed::Scalar(c) => Parsed::Scalar(-c),
            Parsed::Elem(e) => Parsed::Elem(AlgebraElement::neg(e)),
        }
    }
    fn div(&self, other: &Self) -> Result<Self, String> {
        let c = match other {
            Parsed::Scalar(c) => c.clone(),
            Parsed::Elem(e) => e
                .as_scalar()
                .ok_or_else(|| "division is only defined by scalars".to_string())?,
        };
        let ci = c.inv().map_err(|e| e.to_string())?;
        Ok(match self {
            Parsed::Scalar(a) => Parsed::Scalar(a * &ci),
            Parsed::Elem(e) => Parsed::Elem(e.scale(&ci)),
        })
    }
    fn pow(&self, k: i64) -> Result<Self, String> {
        let k = i32::try_from(k).map_err(|_| "exponent out of range".to_string())?;
        match self {
            Parsed::Scalar(c) => c.pow(k).map(Parsed::Scalar).map_err(|e| e.to_string()),
            Parsed::Elem(e) => AlgebraElement::pow(e, k)
                .map(Parsed::Elem)
                .map_err(|e| e.to_string()),
        }
    }
}

impl std::ops::Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_add(rhs).expect("elements of different ranks")
    }
}

impl std::ops::Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_sub(rhs).expect("elements of different ranks")
    }
}

impl std::ops::Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_mul(rhs).expect("elements of different ranks")
    }
}

impl std::ops::Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement::neg(self)
    }
}

/// `F_β = c_F · t_ji K_i^{-1}` with `c_F = −1/(q−q^{-1})`.
fn coeff_f() -> QScalar {
    -QScalar::q_diff().inv().expect("nonzero")
}

/// `E_β = c_E · K_i t̄_ij` with `c_E = (−1)^{i−j+1}/(q−q^{-1})`.
fn coeff_e(i: usize, j: usize) -> QScalar {
    let c = QScalar::q_diff().inv().expect("nonzero");
    if (j - i + 1) % 2 == 0 {
        c
    } else {
        -c
    }
}

/// `F^r K^λ E^k = c · (t-monomial)`; returns `(c, t-monomial)`.
pub(crate) fn chevalley_to_t(engine: &Engine, m: &PbwMonomial) -> (QScalar, TMono) {
    let n = engine.n;
    let mut coeff = QScalar::one();
    let mut qexp = 0i32;
    let mut kvec: Vec<i32> = m.lambda.clone();
    let mut pend = vec![0i32; n];
    let cf = coeff_f();
    for r in engine.roots.iter() {
        let w = engine.weight(r.pos);
        for _ in 0..m.r[r.pos] {
            // K^pend · t_β = q^{-(pend, w_β)} t_β · K^pend
            qexp -= super::mono::dot(&pend, w);
            pend[r.i - 1] -= 1;
            coeff = &coeff * &cf;
        }
    }
    for (x, p) in kvec.iter_mut().zip(&pend) {
        *x += p;
    }
    let mut uw = vec![0i32; n];
    for r in engine.roots.iter() {
        let w = engine.weight(r.pos);
        let ce = coeff_e(r.i, r.j);
        for _ in 0..m.k[r.pos] {
            // t̄-block · K_i = q^{-(e_i, wt)} K_i · t̄-block
            qexp -= uw[r.i - 1];
            kvec[r.i - 1] += 1;
            for (a, b) in uw.iter_mut().zip(w) {
                *a += b;
            }
            coeff = &coeff * &ce;
        }
    }
    let l: Vec<i32> = m.r.iter().map(|&x| x as i32).collect();
    let u: Vec<i32> = m.k.iter().map(|&x| x as i32).collect();
    (
        &coeff * &QScalar::q_pow(qexp),
        TMono::from_parts(&l, &kvec, &u),
    )
}

/// `t-monomial = c · F^r K^λ E^k`; returns `(c, Chevalley monomial)`.
pub(crate) fn t_to_chevalley(engine: &Engine, t: &TMono) -> (QScalar, PbwMonomial) {
    let mut lambda = t.k().to_vec();
    for r in engine.roots.iter() {
        lambda[r.i - 1] += t.l()[r.pos] - t.u()[r.pos];
    }
    let m = PbwMonomial {
        r: t.l().iter().map(|&x| x as u32).collect(),
        lambda,
        k: t.u().iter().map(|&x| x as u32).collect(),
    };
    let (c, back) = chevalley_to_t(engine, &m);
    debug_assert_eq!(&back, t);
    (c.inv().expect("nonzero conversion scalar"), m)
}
