//! Seeded self-checks of the multiplication: associativity on random words
//! and stability of normal forms under re-normalization.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{enumerate_basis, normal_form, AlgebraElement, Generator, PbwMonomial, Roots, UqError};

#[derive(Clone, Debug, Serialize)]
pub struct SoundnessReport {
    #[serde(rename = "N")]
    pub n: usize,
    pub triples: usize,
    pub associativity_failures: usize,
    pub monomials: usize,
    pub idempotence_failures: usize,
    #[serde(skip)]
    pub millis: u64,
}

impl SoundnessReport {
    pub fn passes(&self) -> bool {
        self.associativity_failures == 0 && self.idempotence_failures == 0
    }
}

/// Letters used for random words: Chevalley generators and triangular generators.
pub fn word_alphabet(n: usize) -> Vec<Generator> {
    let mut out = Vec::new();
    for i in 1..n {
        out.push(Generator::E(i));
        out.push(Generator::F(i));
    }
    for j in 1..=n {
        out.push(Generator::K(j));
        out.push(Generator::Kinv(j));
    }
    for i in 1..=n {
        for j in 1..=n {
            out.push(if i >= j {
                Generator::T(i, j)
            } else {
                Generator::Tb(i, j)
            });
        }
    }
    out
}

/// A random word of length `1..=max_len` over [`word_alphabet`].
pub fn random_word(n: usize, max_len: usize, rng: &mut impl Rng) -> Vec<(Generator, i32)> {
    let alphabet = word_alphabet(n);
    let len = rng.gen_range(1..=max_len);
    (0..len)
        .map(|_| (*alphabet.choose(rng).expect("nonempty alphabet"), 1))
        .collect()
}

/// The word `F_{β_1}^{r_1}⋯K^λ⋯E_{β_M}^{k_M}` spelling a PBW monomial.
pub fn monomial_word(m: &PbwMonomial) -> Vec<(Generator, i32)> {
    let n = m.n();
    let roots = Roots::new(n);
    let mut word = Vec::new();
    for b in roots.iter() {
        word.push((Generator::Fbeta(b.i, b.j), m.r[b.pos] as i32));
    }
    for (j, &l) in m.lambda.iter().enumerate() {
        word.push((Generator::K(j + 1), l));
    }
    for b in roots.iter() {
        word.push((Generator::Ebeta(b.i, b.j), m.k[b.pos] as i32));
    }
    word.retain(|(_, e)| *e != 0);
    word
}

/// Checks `(ab)c = a(bc)` on `triples` random word triples (length ≤ 4) and
/// `normal_form(word(m)) = m` on `monomials` basis monomials, drawn from the
/// smallest exponent bound with enough of them.
pub fn engine_soundness(
    n: usize,
    triples: usize,
    monomials: usize,
    seed: u64,
) -> Result<SoundnessReport, UqError> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut associativity_failures = 0;
    for _ in 0..triples {
        let a = normal_form(n, &random_word(n, 4, &mut rng))?;
        let b = normal_form(n, &random_word(n, 4, &mut rng))?;
        let c = normal_form(n, &random_word(n, 4, &mut rng))?;
        if a.try_mul(&b)?.try_mul(&c)? != a.try_mul(&b.try_mul(&c)?)? {
            associativity_failures += 1;
        }
    }
    let mut bound = 1;
    let mut basis = enumerate_basis(n, bound);
    while basis.len() < monomials && bound < 8 {
        bound += 1;
        basis = enumerate_basis(n, bound);
    }
    let chosen: Vec<&PbwMonomial> = basis
        .choose_multiple(&mut rng, monomials.min(basis.len()))
        .collect();
    let mut idempotence_failures = 0;
    for m in &chosen {
        let once = normal_form(n, &monomial_word(m))?;
        let twice = renormalize(&once)?;
        if once != m.to_element()? || twice != once {
            idempotence_failures += 1;
        }
    }
    Ok(SoundnessReport {
        n,
        triples,
        associativity_failures,
        monomials: chosen.len(),
        idempotence_failures,
        millis: start.elapsed().as_millis() as u64,
    })
}

/// Rebuilds an element from the words of its terms.
fn renormalize(a: &AlgebraElement) -> Result<AlgebraElement, UqError> {
    let mut acc = AlgebraElement::zero(a.n());
    for (m, c) in a.terms() {
        acc = acc.try_add(&normal_form(a.n(), &monomial_word(&m))?.scale(&c))?;
    }
    Ok(acc)
}
