//! The embedding `φ : U_q(gl_N) → (L ∗ M)^G` and the checks built on it.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::group::{num_vars, var_index, x_var, x_var_pow, GroupElem, MonoidElem};
use super::invariants::{x_rr_pow, x_sym};
use super::skew::SkewElement;
use super::GaloisError;
use crate::gtsub::{d_gen, hc_project};
use crate::scalar::linalg::Matrix;
use crate::scalar::{LaurentPoly, QScalar, RatFun};
use crate::uq::{AlgebraElement, Generator, PbwMonomial, Roots};

/// Largest rank for which the relation and invariance checks are run.
pub const MAX_N: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PhiGenerator {
    /// `E_m^+`.
    EPlus(usize),
    /// `E_m^-`.
    EMinus(usize),
    K(usize),
    Kinv(usize),
}

impl std::fmt::Display for PhiGenerator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PhiGenerator::EPlus(m) => write!(f, "E+[{m}]"),
            PhiGenerator::EMinus(m) => write!(f, "E-[{m}]"),
            PhiGenerator::K(m) => write!(f, "K[{m}]"),
            PhiGenerator::Kinv(m) => write!(f, "Kinv[{m}]"),
        }
    }
}

/// `X_kj X_mi^{-1} − X_kj^{-1} X_mi`.
fn pair_factor(n: usize, k: usize, j: usize, m: usize, i: usize) -> LaurentPoly {
    let a = &x_var(n, k, j) * &x_var_pow(n, m, i, -1);
    let b = &x_var_pow(n, k, j, -1) * &x_var(n, m, i);
    &a - &b
}

/// Which coefficients `A_mi^±` enter `φ(E_m^±)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PhiForm {
    /// The rational functions `A_mi^±` exactly as written. Each is odd in
    /// `X_mi`, so for `N ≥ 3` the images of `E_m^±` (`m ≥ 2`) change sign under
    /// the sign changes of level `m` in `G`.
    Printed,
    /// `A_mi^+ · q X_mi` and `A_mi^- · X_mi^{-1}`. This is conjugation by a formal
    /// unit `u` with `u / δ^{mi}(u) = X_mi`, so every relation still holds and
    /// the images of `Γ_q` are unchanged, while the coefficients become even in `X_mi`.
    #[default]
    Balanced,
}

/// `A_mi^±` as written: the prefactor is `−(q − q^{-1})^{-2}` for `+` and `1` for `−`.
pub fn a_coefficient(n: usize, m: usize, i: usize, plus: bool) -> Result<RatFun, GaloisError> {
    if m == 0 || m >= n || i == 0 || i > m {
        return Err(GaloisError::InvalidIndex(format!("A_({m},{i}) for N={n}")));
    }
    let nv = num_vars(n);
    let (other, prefactor) = if plus {
        let d = QScalar::q_diff();
        (m + 1, -(d.pow(-2)?))
    } else {
        (m - 1, QScalar::one())
    };
    let mut num = LaurentPoly::constant(nv, prefactor);
    for j in 1..=other {
        num = &num * &pair_factor(n, other, j, m, i);
    }
    let mut a = RatFun::from_laurent(num);
    for j in (1..=m).filter(|&j| j != i) {
        // one factor at a time keeps the denominator factored
        a = a.try_div(&RatFun::from_laurent(pair_factor(n, m, j, m, i)))?;
    }
    Ok(a)
}

/// `A_m^0 = q^m ∏_i X_mi ∏_i X_{m−1,i}^{-1}`.
pub fn a_zero(n: usize, m: usize) -> LaurentPoly {
    let mut p = LaurentPoly::constant(num_vars(n), QScalar::q_pow(m as i32));
    for i in 1..=m {
        p = &p * &x_var(n, m, i);
    }
    for i in 1..m {
        p = &p * &x_var_pow(n, m - 1, i, -1);
    }
    p
}

/// The coefficient used for `φ(E_m^±)` in the given form.
pub fn a_coefficient_in(
    form: PhiForm,
    n: usize,
    m: usize,
    i: usize,
    plus: bool,
) -> Result<RatFun, GaloisError> {
    let a = a_coefficient(n, m, i, plus)?;
    Ok(match form {
        PhiForm::Printed => a,
        PhiForm::Balanced => {
            let f = if plus {
                x_var(n, m, i).scale(&QScalar::q_pow(1))
            } else {
                x_var_pow(n, m, i, -1)
            };
            a.try_mul(&RatFun::from_laurent(f))?
        }
    })
}

/// `φ(E_m^±) = Σ_{i ≤ m} (±δ^{mi}) A_mi^±`, `φ(K_m^{±1}) = (A_m^0)^{±1} e`.
pub fn phi_gen(which: PhiGenerator, n: usize) -> Result<SkewElement, GaloisError> {
    phi_gen_in(PhiForm::default(), which, n)
}

pub fn phi_gen_in(
    form: PhiForm,
    which: PhiGenerator,
    n: usize,
) -> Result<SkewElement, GaloisError> {
    match which {
        PhiGenerator::EPlus(m) | PhiGenerator::EMinus(m) => {
            let plus = matches!(which, PhiGenerator::EPlus(_));
            if m == 0 || m >= n {
                return Err(GaloisError::InvalidIndex(format!("{which} for N={n}")));
            }
            let mut acc = SkewElement::zero(n);
            for i in 1..=m {
                let d = MonoidElem::delta(n, m, i)?;
                let shift = if plus { d } else { d.neg() };
                // the shift acts first: (±δ) · A = (±δ)(A) · (±δ)
                let a = SkewElement::from_coeff(n, a_coefficient_in(form, n, m, i, plus)?);
                acc =
                    acc.try_add(&SkewElement::term(RatFun::one(num_vars(n)), shift).try_mul(&a)?)?;
            }
            Ok(acc)
        }
        PhiGenerator::K(m) | PhiGenerator::Kinv(m) => {
            if m == 0 || m > n {
                return Err(GaloisError::InvalidIndex(format!("{which} for N={n}")));
            }
            let a = a_zero(n, m);
            let a = if matches!(which, PhiGenerator::Kinv(_)) {
                a.monomial_inverse().expect("monomial")
            } else {
                a
            };
            Ok(SkewElement::from_laurent(n, a))
        }
    }
}

pub fn algebra_generators(n: usize) -> Vec<PhiGenerator> {
    let mut out = Vec::new();
    for m in 1..n {
        out.push(PhiGenerator::EPlus(m));
        out.push(PhiGenerator::EMinus(m));
    }
    for m in 1..=n {
        out.push(PhiGenerator::K(m));
        out.push(PhiGenerator::Kinv(m));
    }
    out
}

/// Images of all Chevalley generators for one rank.
pub struct PhiImages {
    n: usize,
    form: PhiForm,
    images: HashMap<PhiGenerator, SkewElement>,
}

impl PhiImages {
    pub fn new(n: usize, form: PhiForm) -> Result<Self, GaloisError> {
        let images = algebra_generators(n)
            .into_par_iter()
            .map(|g| phi_gen_in(form, g, n).map(|v| (g, v)))
            .collect::<Result<_, _>>()?;
        Ok(PhiImages { n, form, images })
    }

    pub fn form(&self) -> PhiForm {
        self.form
    }

    pub fn get(&self, g: PhiGenerator) -> &SkewElement {
        &self.images[&g]
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// One defining relation of `U_q(gl_N)`, written as `lhs − rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    KInverse(usize),
    KCommute(usize, usize),
    /// `K_i E_j^± K_i^{-1} = q^{±(δ_ij − δ_{i,j+1})} E_j^±`.
    KConj {
        i: usize,
        j: usize,
        plus: bool,
    },
    /// `[E_i^+, E_j^-] = δ_ij (K_i K_{i+1}^{-1} − K_{i+1} K_i^{-1}) / (q − q^{-1})`.
    Commutator(usize, usize),
    /// `[E_i^±, E_j^±] = 0` for `|i − j| > 1`.
    Far {
        i: usize,
        j: usize,
        plus: bool,
    },
    /// `(E_i^±)² E_j^± − (q + q^{-1}) E_i^± E_j^± E_i^± + E_j^± (E_i^±)² = 0`, `|i − j| = 1`.
    Serre {
        i: usize,
        j: usize,
        plus: bool,
    },
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sign = |p: &bool| if *p { '+' } else { '-' };
        match self {
            Relation::KInverse(i) => write!(f, "K[{i}]*Kinv[{i}] = 1"),
            Relation::KCommute(i, j) => write!(f, "[K[{i}], K[{j}]] = 0"),
            Relation::KConj { i, j, plus } => write!(f, "K[{i}] E{}[{j}] Kinv[{i}]", sign(plus)),
            Relation::Commutator(i, j) => write!(f, "[E+[{i}], E-[{j}]]"),
            Relation::Far { i, j, plus } => write!(f, "[E{s}[{i}], E{s}[{j}]] = 0", s = sign(plus)),
            Relation::Serre { i, j, plus } => write!(f, "Serre E{}[{i}],[{j}]", sign(plus)),
        }
    }
}

pub fn relations(n: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    for i in 1..=n {
        out.push(Relation::KInverse(i));
        for j in i + 1..=n {
            out.push(Relation::KCommute(i, j));
        }
    }
    for plus in [true, false] {
        for i in 1..=n {
            for j in 1..n {
                out.push(Relation::KConj { i, j, plus });
            }
        }
    }
    for i in 1..n {
        for j in 1..n {
            out.push(Relation::Commutator(i, j));
        }
    }
    for plus in [true, false] {
        for i in 1..n {
            for j in 1..n {
                if i.abs_diff(j) > 1 && i < j {
                    out.push(Relation::Far { i, j, plus });
                }
                if i.abs_diff(j) == 1 {
                    out.push(Relation::Serre { i, j, plus });
                }
            }
        }
    }
    out
}

impl Relation {
    /// `φ(lhs) − φ(rhs)`.
    pub fn residue(&self, phi: &PhiImages) -> Result<SkewElement, GaloisError> {
        let n = phi.n();
        let e = |m: usize, plus: bool| {
            phi.get(if plus {
                PhiGenerator::EPlus(m)
            } else {
                PhiGenerator::EMinus(m)
            })
        };
        let k = |i: usize| phi.get(PhiGenerator::K(i));
        let kinv = |i: usize| phi.get(PhiGenerator::Kinv(i));
        match *self {
            Relation::KInverse(i) => k(i).try_mul(kinv(i))?.try_sub(&SkewElement::one(n)),
            Relation::KCommute(i, j) => k(i).commutator(k(j)),
            Relation::KConj { i, j, plus } => {
                let lhs = k(i).try_mul(e(j, plus))?.try_mul(kinv(i))?;
                let ex = i32::from(i == j) - i32::from(i == j + 1);
                let ex = if plus { ex } else { -ex };
                lhs.try_sub(&e(j, plus).scale(&QScalar::q_pow(ex)))
            }
            Relation::Commutator(i, j) => {
                let lhs = e(i, true).commutator(e(j, false))?;
                if i != j {
                    return Ok(lhs);
                }
                let a = k(i).try_mul(kinv(i + 1))?;
                let b = k(i + 1).try_mul(kinv(i))?;
                let d = QScalar::q_diff().inv()?;
                lhs.try_sub(&a.try_sub(&b)?.scale(&d))
            }
            Relation::Far { i, j, plus } => e(i, plus).commutator(e(j, plus)),
            Relation::Serre { i, j, plus } => {
                let (a, b) = (e(i, plus), e(j, plus));
                let aa = a.try_mul(a)?;
                let t1 = aa.try_mul(b)?;
                let t2 = a.try_mul(b)?.try_mul(a)?;
                let t3 = b.try_mul(&aa)?;
                let c = &QScalar::q_pow(1) + &QScalar::q_pow(-1);
                t1.try_sub(&t2.scale(&c))?.try_add(&t3)
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationResult {
    pub name: String,
    pub residue_is_zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residue: Option<String>,
}

pub fn check_relations_under_phi(
    n: usize,
    form: PhiForm,
) -> Result<Vec<RelationResult>, GaloisError> {
    check_rank(n)?;
    let phi = PhiImages::new(n, form)?;
    relations(n)
        .par_iter()
        .map(|rel| {
            let res = rel.residue(&phi)?;
            Ok(RelationResult {
                name: rel.to_string(),
                residue_is_zero: res.is_zero(),
                residue: (!res.is_zero()).then(|| res.to_string()),
            })
        })
        .collect()
}

fn check_rank(n: usize) -> Result<(), GaloisError> {
    if n == 0 || n > MAX_N {
        return Err(GaloisError::InvalidIndex(format!(
            "N={n} (supported: 1..={MAX_N})"
        )));
    }
    Ok(())
}

/// True iff every generator of `G` fixes `a`.
pub fn check_g_invariance(a: &SkewElement) -> Result<bool, GaloisError> {
    Ok(failing_generators(a)?.is_empty())
}

fn failing_generators(a: &SkewElement) -> Result<Vec<String>, GaloisError> {
    let mut bad = Vec::new();
    for (name, g) in GroupElem::generators(a.n()) {
        if !a.act_g(&g)?.equals(a)? {
            bad.push(name);
        }
    }
    Ok(bad)
}

#[derive(Clone, Debug, Serialize)]
pub struct InvarianceResult {
    pub generator: String,
    pub invariant: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub moved_by: Vec<String>,
}

pub fn check_generator_invariance(
    n: usize,
    form: PhiForm,
) -> Result<Vec<InvarianceResult>, GaloisError> {
    check_rank(n)?;
    let phi = PhiImages::new(n, form)?;
    algebra_generators(n)
        .par_iter()
        .map(|&g| {
            let moved_by = failing_generators(phi.get(g))?;
            Ok(InvarianceResult {
                generator: g.to_string(),
                invariant: moved_by.is_empty(),
                moved_by,
            })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugationResult {
    pub group_generator: String,
    pub delta: String,
    pub image: String,
    pub preserved: bool,
}

/// For every generator `g` of `G` and every `δ^{mi}`: `g ∘ δ^{mi} ∘ g^{-1}`
/// agrees with `δ^{m ζ_m(i)}` on every variable.
pub fn check_conjugation(n: usize) -> Result<Vec<ConjugationResult>, GaloisError> {
    let mut out = Vec::new();
    for (name, g) in GroupElem::generators(n) {
        let ginv = g.inverse();
        for m in 1..n {
            for i in 1..=m {
                let d = MonoidElem::delta(n, m, i)?;
                let image = g.conjugate(&d);
                let preserved = (1..=n).all(|k| {
                    (1..=k).all(|j| {
                        let x = x_var(n, k, j);
                        g.act_poly(&d.act_poly(&ginv.act_poly(&x))) == image.act_poly(&x)
                    })
                });
                out.push(ConjugationResult {
                    group_generator: name.clone(),
                    delta: d.to_string(),
                    image: image.to_string(),
                    preserved,
                });
            }
        }
    }
    Ok(out)
}

/// `E_β` or `F_β` written in the simple generators of the same family, found by
/// solving for the coefficients of all orderings of the simple letters.
fn root_vector_in_simple(
    n: usize,
    i: usize,
    j: usize,
    upper: bool,
) -> Result<Vec<(QScalar, Vec<usize>)>, GaloisError> {
    let target = if upper {
        Generator::Ebeta(i, j)
    } else {
        Generator::Fbeta(i, j)
    };
    let letters: Vec<usize> = (i..j).collect();
    if letters.len() == 1 {
        return Ok(vec![(QScalar::one(), letters)]);
    }
    let mut words = Vec::new();
    permutations(
        &letters,
        &mut Vec::new(),
        &mut vec![false; letters.len()],
        &mut words,
    );
    let letter = |a: usize| {
        if upper {
            Generator::E(a)
        } else {
            Generator::F(a)
        }
    };
    let mut columns = Vec::new();
    for w in &words {
        let mut acc = AlgebraElement::one(n);
        for &a in w {
            acc = acc.try_mul(&AlgebraElement::generator(n, letter(a))?)?;
        }
        columns.push(acc);
    }
    columns.push(AlgebraElement::generator(n, target)?);
    let mut rows: HashMap<PbwMonomial, usize> = HashMap::new();
    let mut entries = Vec::new();
    for (c, e) in columns.iter().enumerate() {
        for (m, x) in e.terms() {
            let next = rows.len();
            let r = *rows.entry(m).or_insert(next);
            entries.push((r, c, x));
        }
    }
    let mut mat = Matrix::zeros(rows.len(), columns.len());
    for (r, c, x) in entries {
        mat.set(r, c, x);
    }
    let last = columns.len() - 1;
    let sol = mat
        .nullspace()
        .into_iter()
        .find(|v| !v[last].is_zero())
        .ok_or_else(|| {
            GaloisError::Unsupported(format!("{target} is not spanned by simple words"))
        })?;
    let scale = -(sol[last].inv()?);
    Ok(words
        .into_iter()
        .zip(&sol)
        .filter(|(_, c)| !c.is_zero())
        .map(|(w, c)| (c * &scale, w))
        .collect())
}

fn permutations(
    items: &[usize],
    cur: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    if cur.len() == items.len() {
        out.push(cur.clone());
        return;
    }
    for k in 0..items.len() {
        if !used[k] {
            used[k] = true;
            cur.push(items[k]);
            permutations(items, cur, used, out);
            cur.pop();
            used[k] = false;
        }
    }
}

/// `φ` extended to arbitrary elements through the PBW expansion.
pub struct PhiMap {
    images: PhiImages,
    e_roots: Vec<SkewElement>,
    f_roots: Vec<SkewElement>,
}

impl PhiMap {
    pub fn new(n: usize, form: PhiForm) -> Result<Self, GaloisError> {
        check_rank(n)?;
        let images = PhiImages::new(n, form)?;
        let roots = Roots::new(n);
        let mut e_roots = Vec::new();
        let mut f_roots = Vec::new();
        for b in roots.iter() {
            for (upper, store) in [(true, &mut e_roots), (false, &mut f_roots)] {
                let mut acc = SkewElement::zero(n);
                for (c, w) in root_vector_in_simple(n, b.i, b.j, upper)? {
                    let mut t = SkewElement::one(n);
                    for a in w {
                        let g = if upper {
                            PhiGenerator::EPlus(a)
                        } else {
                            PhiGenerator::EMinus(a)
                        };
                        t = t.try_mul(images.get(g))?;
                    }
                    acc = acc.try_add(&t.scale(&c))?;
                }
                store.push(acc);
            }
        }
        Ok(PhiMap {
            images,
            e_roots,
            f_roots,
        })
    }

    pub fn n(&self) -> usize {
        self.images.n()
    }

    pub fn monomial(&self, m: &PbwMonomial) -> Result<SkewElement, GaloisError> {
        let n = self.n();
        let mut acc = SkewElement::one(n);
        for (p, &e) in m.r.iter().enumerate() {
            acc = acc.try_mul(&self.f_roots[p].pow(e as i32)?)?;
        }
        let mut kpart = LaurentPoly::one(num_vars(n));
        for (i, &e) in m.lambda.iter().enumerate() {
            let base = a_zero(n, i + 1);
            let base = if e < 0 {
                base.monomial_inverse().expect("monomial")
            } else {
                base
            };
            kpart = &kpart * &base.pow(e.unsigned_abs());
        }
        acc = acc.try_mul(&SkewElement::from_laurent(n, kpart))?;
        for (p, &e) in m.k.iter().enumerate() {
            acc = acc.try_mul(&self.e_roots[p].pow(e as i32)?)?;
        }
        Ok(acc)
    }

    pub fn apply(&self, a: &AlgebraElement) -> Result<SkewElement, GaloisError> {
        if a.n() != self.n() {
            return Err(GaloisError::RankMismatch {
                left: a.n(),
                right: self.n(),
            });
        }
        let parts = a
            .terms()
            .into_par_iter()
            .map(|(m, c)| Ok(self.monomial(&m)?.scale(&c)))
            .collect::<Result<Vec<_>, GaloisError>>()?;
        let mut acc = SkewElement::zero(self.n());
        for p in &parts {
            acc = acc.try_add(p)?;
        }
        Ok(acc)
    }
}

/// `ξ^{-1}`: `K_i ↦ q^i X_ri` on `K`-Laurent polynomials of level `r`.
pub fn xi_inverse(n: usize, r: usize, p: &LaurentPoly) -> LaurentPoly {
    let nv = num_vars(n);
    let mut out = LaurentPoly::zero(nv);
    for (e, c) in p.terms() {
        let mut exps = vec![0; nv];
        let mut qe = 0;
        for (i, &k) in e.iter().enumerate().take(r) {
            exps[var_index(r, i + 1)] = k;
            qe += (i as i32 + 1) * k;
        }
        out = &out + &LaurentPoly::monomial(nv, exps, c * &QScalar::q_pow(qe));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaResult {
    pub r: usize,
    pub s: usize,
    /// `ξ^{-1}(hc(d_rs))`.
    pub image: String,
    pub laurent: bool,
    pub invariant: bool,
    /// `j` with image `= c · x_rr^{-1} x_rj` (`x_r0 = 1`).
    pub x_index: Option<usize>,
    pub constant: Option<String>,
    /// Whether `φ(d_rs)` computed through the generators agrees with the image.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direct_match: Option<bool>,
}

impl GammaResult {
    pub fn holds(&self) -> bool {
        self.laurent && self.invariant && self.x_index.is_some() && self.direct_match != Some(false)
    }
}

/// Image of `d_rs` in `Λ_r` through the Harish-Chandra projection, and its
/// comparison with the invariants `x_rs`. With `phi` given, `φ(d_rs)` is also
/// computed through the generator images and compared.
pub fn phi_gamma_check(
    r: usize,
    s: usize,
    n: usize,
    phi: Option<&PhiMap>,
) -> Result<GammaResult, GaloisError> {
    check_rank(n)?;
    if r == 0 || r > n || s == 0 || s > r {
        return Err(GaloisError::InvalidIndex(format!("d_{r}{s} for N={n}")));
    }
    let d = d_gen(n, r, s)?.value;
    let hc = hc_project(&d, r)?
        .to_k_laurent()
        .expect("projection is K-only");
    let image = xi_inverse(n, r, &hc);
    let image_rat = RatFun::from_laurent(image.clone());
    let elem = SkewElement::from_coeff(n, image_rat.clone());
    let invariant = check_g_invariance(&elem)?;
    let mut x_index = None;
    let mut constant = None;
    for j in [s, r - s].into_iter().chain(0..=r) {
        // x_rr^{-1} e_j(X_r1², …, X_rr²)
        let candidate = RatFun::from_laurent(&x_rr_pow(n, r, -1) * &x_sym(n, r, j));
        if let Some(c) = image_rat.scalar_ratio(&candidate) {
            x_index = Some(j);
            constant = Some(c.to_string());
            break;
        }
    }
    let names = super::group::var_names(n);
    let shown = image.display_with(&names).to_string();
    let direct_match = match phi {
        Some(map) => Some(map.apply(&d)?.equals(&elem)?),
        None => None,
    };
    Ok(GammaResult {
        r,
        s,
        image: shown,
        laurent: image_rat.is_laurent(),
        invariant,
        x_index,
        constant,
        direct_match,
    })
}
