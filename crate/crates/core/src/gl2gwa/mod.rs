//! `U_q(gl_2)` as a generalized Weyl algebra over `R = C[K_1^{±1}, K_2^{±1}, t]`,
//! and Gelfand-Tsetlin characters and fibers for it.

mod fiber;
mod gwa;

pub use fiber::{
    character_to_point, fiber_gl2, find_breaks, module_action_check, point_to_character,
    sample_characters, tau_at, tau_coefficients, BasePoint, CharacterKind, FiberReport,
    GtCharacter, ModuleCheck, ModuleDescriptor, ModuleKind, SampledCharacter, SupportWindow,
};
pub use gwa::{
    base_names, check_base, gwa_normal_form, k_monomial, sigma, sigma_pow, t_var, GwaElement,
    GwaLetter, K1, K2, NVARS, T,
};

use rand::seq::SliceRandom;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::gtsub::{d_gen, GtError};
use crate::scalar::{LaurentPoly, QScalar, ScalarError};
use crate::uq::{AlgebraElement, Generator, UqError};

#[derive(Debug, thiserror::Error)]
pub enum GwaError {
    #[error("not an element of the base ring: {0}")]
    NotInBase(String),
    #[error("invalid character: {0}")]
    InvalidCharacter(String),
    #[error("expected an element of U_q(gl_2), got rank {0}")]
    WrongRank(usize),
    #[error("unexpected shape of the Gelfand-Tsetlin generators: {0}")]
    Shape(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Uq(#[from] UqError),
    #[error(transparent)]
    Gt(#[from] GtError),
}

/// `ψ : U_q(gl_2) → R(σ, t)`, `E ↦ X₊`, `F ↦ X₋`, `K_i ↦ K_i`, applied to the
/// PBW expansion `F^r K^λ E^k ↦ X₋^r K^λ X₊^k`.
pub fn psi(a: &AlgebraElement) -> Result<GwaElement, GwaError> {
    if a.n() != 2 {
        return Err(GwaError::WrongRank(a.n()));
    }
    let mut acc = GwaElement::zero();
    for (m, c) in a.terms() {
        let k = LaurentPoly::monomial(NVARS, vec![m.lambda[0], m.lambda[1], 0], c);
        let t = GwaElement::term(LaurentPoly::one(NVARS), -(m.r[0] as i32))
            .mul(&GwaElement::base(k))
            .mul(&GwaElement::term(LaurentPoly::one(NVARS), m.k[0] as i32));
        acc = acc.add(&t);
    }
    Ok(acc)
}

/// Images of `d_11`, `d_21`, `d_22` in `R`.
#[derive(Clone, Debug)]
pub struct GammaImages {
    pub d11: LaurentPoly,
    pub d21: LaurentPoly,
    pub d22: LaurentPoly,
}

pub fn gamma_images() -> Result<GammaImages, GwaError> {
    let img = |r, s| -> Result<LaurentPoly, GwaError> {
        let g = psi(&d_gen(2, r, s)?.value)?;
        g.as_base()
            .ok_or_else(|| GwaError::Shape(format!("d_{r}{s} does not map into R: {g}")))
    };
    Ok(GammaImages {
        d11: img(1, 1)?,
        d21: img(2, 1)?,
        d22: img(2, 2)?,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoResidue {
    pub name: String,
    pub residue_is_zero: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoReport {
    pub relations: Vec<IsoResidue>,
    /// `d_11`, `d_21`, `d_22` land in `R`, and together with the inverses of
    /// `d_11`, `d_22` they generate it (`K_1^{±1}`, `K_2^{±1}` and `t`).
    pub gamma_generates_base: bool,
    pub gamma_images: Vec<(String, String)>,
    /// Seeded products `ψ(ab) = ψ(a)ψ(b)` checked on PBW words.
    pub product_samples: usize,
    pub products_ok: bool,
}

impl IsoReport {
    pub fn all_pass(&self) -> bool {
        self.relations.iter().all(|r| r.residue_is_zero)
            && self.gamma_generates_base
            && self.products_ok
    }
}

pub fn uq2_iso_check(samples: usize, seed: u64) -> Result<IsoReport, GwaError> {
    let gen =
        |g: Generator| -> Result<GwaElement, GwaError> { psi(&AlgebraElement::generator(2, g)?) };
    let (e, f) = (gen(Generator::E(1))?, gen(Generator::F(1))?);
    let k = [gen(Generator::K(1))?, gen(Generator::K(2))?];
    let kinv = [gen(Generator::Kinv(1))?, gen(Generator::Kinv(2))?];
    let mut relations = Vec::new();
    let mut push = |name: String, r: GwaElement| {
        relations.push(IsoResidue {
            name,
            residue_is_zero: r.is_zero(),
        })
    };
    push("E -> X+".into(), e.sub(&GwaElement::x_plus()));
    push("F -> X-".into(), f.sub(&GwaElement::x_minus()));
    for i in 0..2 {
        push(
            format!("K[{}]*Kinv[{}] = 1", i + 1, i + 1),
            k[i].mul(&kinv[i]).sub(&GwaElement::one()),
        );
        let ex = if i == 0 { 1 } else { -1 };
        push(
            format!("K[{}] E Kinv[{}]", i + 1, i + 1),
            k[i].mul(&e)
                .mul(&kinv[i])
                .sub(&e.scale(&QScalar::q_pow(ex))),
        );
        push(
            format!("K[{}] F Kinv[{}]", i + 1, i + 1),
            k[i].mul(&f)
                .mul(&kinv[i])
                .sub(&f.scale(&QScalar::q_pow(-ex))),
        );
    }
    push("[K[1], K[2]] = 0".into(), k[0].commutator(&k[1]));
    let d = QScalar::q_diff().inv()?;
    let rhs = k[0].mul(&kinv[1]).sub(&k[1].mul(&kinv[0])).scale(&d);
    push("[E, F]".into(), e.commutator(&f).sub(&rhs));
    push(
        "X- X+ = t".into(),
        f.mul(&e).sub(&GwaElement::base(t_var())),
    );

    let g = gamma_images()?;
    let gamma_generates_base = fiber::point_solver(&g).is_ok();
    let names = base_names();
    let gamma_images = vec![
        ("d11".to_string(), g.d11.display_with(&names).to_string()),
        ("d21".to_string(), g.d21.display_with(&names).to_string()),
        ("d22".to_string(), g.d22.display_with(&names).to_string()),
    ];

    // products of short PBW words
    let letters = [
        Generator::E(1),
        Generator::F(1),
        Generator::K(1),
        Generator::K(2),
        Generator::Kinv(1),
        Generator::Kinv(2),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut word = |len: usize| -> Result<AlgebraElement, GwaError> {
        let mut acc = AlgebraElement::one(2);
        for _ in 0..len {
            let l = *letters.choose(&mut rng).expect("nonempty");
            acc = acc.try_mul(&AlgebraElement::generator(2, l)?)?;
        }
        Ok(acc)
    };
    let mut products_ok = true;
    for i in 0..samples {
        let a = word(1 + i % 4)?;
        let b = word(1 + (i / 4) % 4)?;
        let lhs = psi(&a.try_mul(&b)?)?;
        let rhs = psi(&a)?.mul(&psi(&b)?);
        products_ok &= lhs == rhs;
    }
    Ok(IsoReport {
        relations,
        gamma_generates_base,
        gamma_images,
        product_samples: samples,
        products_ok,
    })
}

#[cfg(test)]
mod tests;
