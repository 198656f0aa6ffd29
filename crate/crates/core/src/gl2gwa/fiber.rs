//! Gelfand-Tsetlin characters of `U_q(gl_2)` and the simple weight modules of
//! the generalized Weyl algebra that realize them.
//!
//! A character fixes a point `p = (k_1, k_2, τ)` of `Specm R`. The weight of
//! `X₊^n v` for `v` of weight `p` is `p_n = p ∘ σ^{-n}`, with `K_1 ↦ q^n k_1`,
//! `K_2 ↦ q^{-n} k_2` and `t ↦ τ(n) = σ^{-n}(t)(p)`. A break is an `n` with
//! `τ(n) = 0`: there `X₋ X₊` kills the weight space, and the orbit splits into
//! intervals, each the support of exactly one simple module.

use std::collections::BTreeMap;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize, Serializer};

use super::gwa::{sigma_pow, t_var, K1, K2, T};
use super::{gamma_images, GammaImages, GwaError};
use crate::gtsub::d_gen;
use crate::scalar::{LaurentPoly, QScalar};
use crate::uq::{AlgebraElement, PbwMonomial};

fn ser_scalar<S: Serializer>(v: &QScalar, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Values of `d_11`, `d_21`, `d_22`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GtCharacter {
    #[serde(serialize_with = "ser_scalar")]
    pub g11: QScalar,
    #[serde(serialize_with = "ser_scalar")]
    pub g21: QScalar,
    #[serde(serialize_with = "ser_scalar")]
    pub g22: QScalar,
}

#[derive(Deserialize)]
struct RawCharacter {
    g11: String,
    g21: String,
    g22: String,
}

impl GtCharacter {
    pub fn new(g11: QScalar, g21: QScalar, g22: QScalar) -> Result<Self, GwaError> {
        if g11.is_zero() || g22.is_zero() {
            return Err(GwaError::InvalidCharacter(
                "d_11 and d_22 are invertible".into(),
            ));
        }
        Ok(GtCharacter { g11, g21, g22 })
    }

    /// Parses `{"g11": "...", "g21": "...", "g22": "..."}` with scalar expressions.
    pub fn from_json(src: &str) -> Result<Self, GwaError> {
        let raw: RawCharacter =
            serde_json::from_str(src).map_err(|e| GwaError::InvalidCharacter(e.to_string()))?;
        Self::new(
            QScalar::from_str(&raw.g11)?,
            QScalar::from_str(&raw.g21)?,
            QScalar::from_str(&raw.g22)?,
        )
    }
}

/// `(K_1, K_2, t) ↦ (k1, k2, tau)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasePoint {
    #[serde(serialize_with = "ser_scalar")]
    pub k1: QScalar,
    #[serde(serialize_with = "ser_scalar")]
    pub k2: QScalar,
    #[serde(serialize_with = "ser_scalar")]
    pub tau: QScalar,
}

impl BasePoint {
    fn coords(&self) -> [QScalar; 3] {
        [self.k1.clone(), self.k2.clone(), self.tau.clone()]
    }

    pub fn eval(&self, a: &LaurentPoly) -> Result<QScalar, GwaError> {
        Ok(a.eval(&self.coords())?)
    }

    /// `p_n = p ∘ σ^{-n}`.
    pub fn shift(&self, n: i64) -> Result<BasePoint, GwaError> {
        Ok(BasePoint {
            k1: &self.k1 * &QScalar::q_pow(n as i32),
            k2: &self.k2 * &QScalar::q_pow(-n as i32),
            tau: tau_at(self, n)?,
        })
    }
}

/// `τ(n) = σ^{-n}(t)` evaluated at `p`.
pub fn tau_at(p: &BasePoint, n: i64) -> Result<QScalar, GwaError> {
    p.eval(&sigma_pow(&t_var(), -(n as i32)))
}

/// `(A, B, C)` with `τ(n) = A x + B/x + C`, `x = q^{2n}`.
pub fn tau_coefficients(p: &BasePoint) -> Result<(QScalar, QScalar, QScalar), GwaError> {
    let kappa = p.k1.checked_div(&p.k2)?;
    let kinv = kappa.inv()?;
    let q2 = QScalar::q_pow(2);
    let d = &QScalar::q_diff() * &(&q2 - &QScalar::one());
    let a = -(&(&kappa * &q2).checked_div(&d)?);
    let b = -(&kinv.checked_div(&d)?);
    let c = &p.tau + &(&(&kappa * &q2) + &kinv).checked_div(&d)?;
    Ok((a, b, c))
}

/// Every integer `n` with `τ(n) = 0`. A root `x = q^{2n}` of `A x² + C x + B`
/// needs two of the three terms to share the lowest `q`-order, which leaves
/// at most three candidates; each is checked exactly.
pub fn find_breaks(p: &BasePoint) -> Result<Vec<i64>, GwaError> {
    let (a, b, c) = tau_coefficients(p)?;
    let oa = a.order_at_zero().expect("A ≠ 0") as i64;
    let ob = b.order_at_zero().expect("B ≠ 0") as i64;
    let mut cands = Vec::new();
    if (ob - oa) % 4 == 0 {
        cands.push((ob - oa) / 4);
    }
    if let Some(oc) = c.order_at_zero() {
        let oc = oc as i64;
        if (oc - oa) % 2 == 0 {
            cands.push((oc - oa) / 2);
        }
        if (ob - oc) % 2 == 0 {
            cands.push((ob - oc) / 2);
        }
    }
    cands.sort();
    cands.dedup();
    let mut out = Vec::new();
    for n in cands {
        if tau_at(p, n)?.is_zero() {
            out.push(n);
        }
    }
    Ok(out)
}

/// Solves a character for the point of `Specm R`: `d_11 = c K^u`, `d_22 = c' K^w`
/// with `(u, w)` unimodular, and `d_21 = α(K) t + β(K)`.
pub(crate) struct PointSolver {
    images: GammaImages,
    c11: QScalar,
    c22: QScalar,
    inv: [[i32; 2]; 2],
    alpha: LaurentPoly,
    beta: LaurentPoly,
}

pub(crate) fn point_solver(images: &GammaImages) -> Result<PointSolver, GwaError> {
    let k_mono = |p: &LaurentPoly, name: &str| -> Result<(QScalar, [i32; 2]), GwaError> {
        match p.as_monomial() {
            Some((e, c)) if e[T] == 0 => Ok((c.clone(), [e[K1], e[K2]])),
            _ => Err(GwaError::Shape(format!("{name} is not a K-monomial"))),
        }
    };
    let (c11, u) = k_mono(&images.d11, "d11")?;
    let (c22, w) = k_mono(&images.d22, "d22")?;
    let det = u[0] * w[1] - u[1] * w[0];
    if det.abs() != 1 {
        return Err(GwaError::Shape(
            "d11 and d22 do not generate the K-torus".into(),
        ));
    }
    let inv = [[w[1] * det, -u[1] * det], [-w[0] * det, u[0] * det]];
    let nv = images.d21.nvars();
    let mut alpha = LaurentPoly::zero(nv);
    let mut beta = LaurentPoly::zero(nv);
    for (e, c) in images.d21.terms() {
        let k = LaurentPoly::monomial(nv, vec![e[K1], e[K2], 0], c.clone());
        match e[T] {
            0 => beta = &beta + &k,
            1 => alpha = &alpha + &k,
            _ => return Err(GwaError::Shape("d21 is not linear in t".into())),
        }
    }
    if alpha.is_zero() {
        return Err(GwaError::Shape("d21 does not involve t".into()));
    }
    Ok(PointSolver {
        images: images.clone(),
        c11,
        c22,
        inv,
        alpha,
        beta,
    })
}

impl PointSolver {
    fn point(&self, chi: &GtCharacter) -> Result<BasePoint, GwaError> {
        let v = [
            chi.g11.checked_div(&self.c11)?,
            chi.g22.checked_div(&self.c22)?,
        ];
        // log k = M^{-1} log v
        let k: Vec<QScalar> = self
            .inv
            .iter()
            .map(|row| Ok(&v[0].pow(row[0])? * &v[1].pow(row[1])?))
            .collect::<Result<_, GwaError>>()?;
        let partial = BasePoint {
            k1: k[0].clone(),
            k2: k[1].clone(),
            tau: QScalar::zero(),
        };
        let a = partial.eval(&self.alpha)?;
        if a.is_zero() {
            return Err(GwaError::InvalidCharacter(
                "the t-coefficient of d21 vanishes".into(),
            ));
        }
        let tau = (&chi.g21 - &partial.eval(&self.beta)?).checked_div(&a)?;
        Ok(BasePoint { tau, ..partial })
    }

    fn character(&self, p: &BasePoint) -> Result<GtCharacter, GwaError> {
        GtCharacter::new(
            p.eval(&self.images.d11)?,
            p.eval(&self.images.d21)?,
            p.eval(&self.images.d22)?,
        )
    }
}

pub fn character_to_point(chi: &GtCharacter) -> Result<BasePoint, GwaError> {
    point_solver(&gamma_images()?)?.point(chi)
}

pub fn point_to_character(p: &BasePoint) -> Result<GtCharacter, GwaError> {
    point_solver(&gamma_images()?)?.character(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleKind {
    /// Support is the whole orbit.
    Dense,
    /// Support bounded above: `X₊` kills the top vector.
    Highest,
    /// Support bounded below: `X₋` kills the bottom vector.
    Lowest,
    Finite,
}

/// Support `{p_n : lo ≤ n ≤ hi}` on the orbit of the character's point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportWindow {
    pub lo: Option<i64>,
    pub hi: Option<i64>,
}

impl SupportWindow {
    pub fn contains(&self, n: i64) -> bool {
        self.lo.is_none_or(|lo| lo <= n) && self.hi.is_none_or(|hi| n <= hi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleDescriptor {
    pub kind: ModuleKind,
    pub support_window: SupportWindow,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberReport {
    pub character: GtCharacter,
    pub point: BasePoint,
    pub breaks: Vec<i64>,
    /// Simple weight modules supported on the orbit of the point.
    pub orbit_modules: Vec<ModuleDescriptor>,
    /// Simple modules with a nonzero component at the character itself.
    pub count: usize,
    pub modules: Vec<ModuleDescriptor>,
}

fn orbit_modules(breaks: &[i64]) -> Vec<ModuleDescriptor> {
    let mut bounds: Vec<Option<i64>> = vec![None];
    bounds.extend(breaks.iter().map(|&b| Some(b)));
    bounds.push(None);
    bounds
        .windows(2)
        .map(|w| {
            let lo = w[0].map(|b| b + 1);
            let hi = w[1];
            let kind = match (lo, hi) {
                (None, None) => ModuleKind::Dense,
                (None, Some(_)) => ModuleKind::Highest,
                (Some(_), None) => ModuleKind::Lowest,
                (Some(_), Some(_)) => ModuleKind::Finite,
            };
            ModuleDescriptor {
                kind,
                support_window: SupportWindow { lo, hi },
            }
        })
        .collect()
}

pub fn fiber_gl2(chi: &GtCharacter) -> Result<FiberReport, GwaError> {
    let point = character_to_point(chi)?;
    let breaks = find_breaks(&point)?;
    let orbit_modules = orbit_modules(&breaks);
    let modules: Vec<ModuleDescriptor> = orbit_modules
        .iter()
        .filter(|m| m.support_window.contains(0))
        .cloned()
        .collect();
    Ok(FiberReport {
        character: chi.clone(),
        point,
        breaks,
        orbit_modules,
        count: modules.len(),
        modules,
    })
}

/// Letters acting on a weight module; words act right to left.
#[derive(Clone, Copy, Debug)]
enum Act {
    Plus,
    Minus,
    K(usize, i32),
    T,
}

type Vector = BTreeMap<i64, QScalar>;

/// A linear combination of words.
type Combination = Vec<(QScalar, Vec<Act>)>;

struct WeightModule {
    point: BasePoint,
    support: SupportWindow,
}

impl WeightModule {
    fn letter(&self, a: Act, v: &Vector) -> Result<Vector, GwaError> {
        let mut out = Vector::new();
        for (&n, c) in v {
            let (m, x) = match a {
                Act::Plus => (n + 1, QScalar::one()),
                Act::Minus => (n - 1, tau_at(&self.point, n - 1)?),
                Act::K(i, e) => {
                    let k = if i == 1 {
                        &self.point.k1
                    } else {
                        &self.point.k2
                    };
                    let shift = if i == 1 { n } else { -n };
                    (n, (k * &QScalar::q_pow(shift as i32)).pow(e)?)
                }
                Act::T => (n, tau_at(&self.point, n)?),
            };
            if !self.support.contains(m) || x.is_zero() {
                continue;
            }
            let entry = out.entry(m).or_insert_with(QScalar::zero);
            *entry = &*entry + &(c * &x);
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    fn word(&self, w: &[Act], v: &Vector) -> Result<Vector, GwaError> {
        let mut cur = v.clone();
        for &a in w.iter().rev() {
            cur = self.letter(a, &cur)?;
        }
        Ok(cur)
    }

    fn combination(&self, terms: &[(QScalar, Vec<Act>)], v: &Vector) -> Result<Vector, GwaError> {
        let mut out = Vector::new();
        for (c, w) in terms {
            for (n, x) in self.word(w, v)? {
                let entry = out.entry(n).or_insert_with(QScalar::zero);
                *entry = &*entry + &(c * &x);
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    fn pbw_word(m: &PbwMonomial) -> Vec<Act> {
        let mut w = vec![Act::Minus; m.r[0] as usize];
        w.push(Act::K(1, m.lambda[0]));
        w.push(Act::K(2, m.lambda[1]));
        w.extend(std::iter::repeat_n(Act::Plus, m.k[0] as usize));
        w
    }

    fn element(&self, a: &AlgebraElement, v: &Vector) -> Result<Vector, GwaError> {
        let terms: Vec<(QScalar, Vec<Act>)> = a
            .terms()
            .iter()
            .map(|(m, c)| (c.clone(), Self::pbw_word(m)))
            .collect();
        self.combination(&terms, v)
    }
}

fn relation_list() -> Result<Vec<(&'static str, Combination)>, GwaError> {
    let one = QScalar::one;
    let q = QScalar::q_pow;
    let d = QScalar::q_diff().inv()?;
    Ok(vec![
        (
            "K[1] E = q E K[1]",
            vec![
                (one(), vec![Act::K(1, 1), Act::Plus]),
                (-q(1), vec![Act::Plus, Act::K(1, 1)]),
            ],
        ),
        (
            "K[2] E = q^-1 E K[2]",
            vec![
                (one(), vec![Act::K(2, 1), Act::Plus]),
                (-q(-1), vec![Act::Plus, Act::K(2, 1)]),
            ],
        ),
        (
            "K[1] F = q^-1 F K[1]",
            vec![
                (one(), vec![Act::K(1, 1), Act::Minus]),
                (-q(-1), vec![Act::Minus, Act::K(1, 1)]),
            ],
        ),
        (
            "K[2] F = q F K[2]",
            vec![
                (one(), vec![Act::K(2, 1), Act::Minus]),
                (-q(1), vec![Act::Minus, Act::K(2, 1)]),
            ],
        ),
        (
            "K[1] K[2] = K[2] K[1]",
            vec![
                (one(), vec![Act::K(1, 1), Act::K(2, 1)]),
                (-one(), vec![Act::K(2, 1), Act::K(1, 1)]),
            ],
        ),
        (
            "K[1] Kinv[1] = 1",
            vec![(one(), vec![Act::K(1, 1), Act::K(1, -1)]), (-one(), vec![])],
        ),
        (
            "K[2] Kinv[2] = 1",
            vec![(one(), vec![Act::K(2, 1), Act::K(2, -1)]), (-one(), vec![])],
        ),
        (
            "[E, F]",
            vec![
                (one(), vec![Act::Plus, Act::Minus]),
                (-one(), vec![Act::Minus, Act::Plus]),
                (-d.clone(), vec![Act::K(1, 1), Act::K(2, -1)]),
                (d, vec![Act::K(2, 1), Act::K(1, -1)]),
            ],
        ),
        (
            "F E = t",
            vec![(one(), vec![Act::Minus, Act::Plus]), (-one(), vec![Act::T])],
        ),
    ])
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleCheck {
    pub module: ModuleDescriptor,
    pub bound: i64,
    pub vectors_checked: usize,
    pub relations_ok: bool,
    /// Every `d_rs` acts on each basis vector by the scalar of its weight.
    pub gamma_eigen_ok: bool,
    /// The weight space of the character itself is nonzero.
    pub contains_character: bool,
    /// Largest number of visited basis vectors sharing one character.
    pub max_weight_dim: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl ModuleCheck {
    pub fn passes(&self) -> bool {
        self.relations_ok
            && self.gamma_eigen_ok
            && self.contains_character
            && self.max_weight_dim <= 2
    }
}

/// Builds the module on `v_n` (`n` in the support, `|n| ≤ bound`) with
/// `X₊ v_n = v_{n+1}`, `X₋ v_n = τ(n−1) v_{n−1}` and checks it.
pub fn module_action_check(
    chi: &GtCharacter,
    module: &ModuleDescriptor,
    bound: i64,
) -> Result<ModuleCheck, GwaError> {
    let images = gamma_images()?;
    let solver = point_solver(&images)?;
    let point = solver.point(chi)?;
    let wm = WeightModule {
        point: point.clone(),
        support: module.support_window.clone(),
    };
    let gammas = [
        ("d11", d_gen(2, 1, 1)?.value),
        ("d21", d_gen(2, 2, 1)?.value),
        ("d22", d_gen(2, 2, 2)?.value),
    ];
    let relations = relation_list()?;
    let mut failures = Vec::new();
    let mut seen: Vec<GtCharacter> = Vec::new();
    let mut counts: Vec<usize> = Vec::new();
    let mut checked = 0;
    let mut relations_ok = true;
    let mut gamma_eigen_ok = true;
    for n in (-bound..=bound).filter(|&n| wm.support.contains(n)) {
        checked += 1;
        let v: Vector = [(n, QScalar::one())].into_iter().collect();
        for (name, terms) in &relations {
            if !wm.combination(terms, &v)?.is_empty() {
                relations_ok = false;
                failures.push(format!("{name} on v_{n}"));
            }
        }
        let chi_n = solver.character(&point.shift(n)?)?;
        let values = [&chi_n.g11, &chi_n.g21, &chi_n.g22];
        for ((name, d), val) in gammas.iter().zip(values) {
            let image = wm.element(d, &v)?;
            let expected: Vector = if val.is_zero() {
                Vector::new()
            } else {
                [(n, val.clone())].into_iter().collect()
            };
            if image != expected {
                gamma_eigen_ok = false;
                failures.push(format!("{name} on v_{n}"));
            }
        }
        match seen.iter().position(|c| *c == chi_n) {
            Some(i) => counts[i] += 1,
            None => {
                seen.push(chi_n);
                counts.push(1);
            }
        }
    }
    let contains_character = module.support_window.contains(0) && seen.contains(chi);
    Ok(ModuleCheck {
        module: module.clone(),
        bound,
        vectors_checked: checked,
        relations_ok,
        gamma_eigen_ok,
        contains_character,
        max_weight_dim: counts.into_iter().max().unwrap_or(0),
        failures,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CharacterKind {
    Generic,
    OneBreak,
    TwoBreaks,
}

#[derive(Clone, Debug, Serialize)]
pub struct SampledCharacter {
    pub kind: CharacterKind,
    /// Break positions the sample was built with.
    pub planted_breaks: Vec<i64>,
    pub character: GtCharacter,
}

fn random_unit(rng: &mut ChaCha8Rng, coeffs: &[i64]) -> QScalar {
    let c = coeffs[rng.gen_range(0..coeffs.len())];
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    QScalar::monomial(sign * c, rng.gen_range(-3..=3))
}

/// Seeded characters cycling through generic ones, ones with a single planted
/// break and ones with two planted breaks (finite-dimensional pieces).
pub fn sample_characters(count: usize, seed: u64) -> Result<Vec<SampledCharacter>, GwaError> {
    let solver = point_solver(&gamma_images()?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for i in 0..count {
        let kind = match i % 3 {
            0 => CharacterKind::Generic,
            1 => CharacterKind::OneBreak,
            _ => CharacterKind::TwoBreaks,
        };
        let k2 = random_unit(&mut rng, &[1, 2, 3, 5]);
        let (k1, planted) = match kind {
            // κ = 2^a 3^b q^e with a + b > 0 is never ±q^j, so a planted break has no partner
            CharacterKind::Generic | CharacterKind::OneBreak => {
                let b = rng.gen_range(-3..=3);
                (&k2 * &random_unit(&mut rng, &[2, 3, 6]), vec![b])
            }
            CharacterKind::TwoBreaks => {
                let b1 = rng.gen_range(-3..=1);
                let b2 = b1 + rng.gen_range(1..=3);
                (&k2 * &QScalar::q_pow(-(b1 + b2) as i32 - 1), vec![b1, b2])
            }
        };
        let base = BasePoint {
            k1,
            k2,
            tau: QScalar::zero(),
        };
        let tau = match kind {
            CharacterKind::Generic => {
                // 1 + c q^e has order 0 at q = 0 while the break candidates force τ(n) of
                // other orders, so it is checked below rather than trusted
                &QScalar::one() + &random_unit(&mut rng, &[1, 2, 3, 4, 7])
            }
            _ => -(&tau_at(&base, planted[0])?),
        };
        let point = BasePoint { tau, ..base };
        let planted = if kind == CharacterKind::Generic {
            Vec::new()
        } else {
            planted
        };
        out.push(SampledCharacter {
            kind,
            planted_breaks: planted,
            character: solver.character(&point)?,
        });
    }
    Ok(out)
}
