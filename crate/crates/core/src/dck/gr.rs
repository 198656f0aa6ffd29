//! The associated graded algebra of the De Concini-Kac filtration, a
//! quantum semi-Laurent polynomial algebra in `F̄_β`, `K̄_i^{±1}`, `Ē_β`.

use std::fmt;

use crate::scalar::QScalar;
use crate::uq::{AlgebraElement, PbwMonomial, Roots, UqError};

/// `coeff · F̄^r K̄^λ Ē^k`, in the same ordering as [`PbwMonomial`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrMonomial {
    pub coeff: QScalar,
    pub mono: PbwMonomial,
}

/// For root positions `a < b` both families satisfy
/// `X_b X_a = q^{(β_a, β_b)} X_a X_b` (checked against the full product).
const SWAP: i32 = 1;

fn root_sum_pairing(roots: &Roots, lambda: &[i32], exps: &[u32]) -> i32 {
    // (λ, Σ_p e_p β_p) with λ read in the ε-basis
    roots
        .iter()
        .map(|b| exps[b.pos] as i32 * (lambda[b.i - 1] - lambda[b.j - 1]))
        .sum()
}

/// Exponent `e` with `X^{x} X^{y} = q^e X^{x+y}` for ordered words in one
/// family, given the swap rule `X_b X_a = q^{sign·(β_a,β_b)} X_a X_b` (`a < b`).
fn merge_exponent(roots: &Roots, x: &[u32], y: &[u32], sign: i32) -> i32 {
    let mut e = 0;
    for a in 0..x.len() {
        for b in a + 1..x.len() {
            // every X_b of x must pass every X_a of y
            e += sign * roots.pairing(a, b) * (x[b] * y[a]) as i32;
        }
    }
    e
}

impl GrMonomial {
    pub fn new(coeff: QScalar, mono: PbwMonomial) -> Self {
        GrMonomial { coeff, mono }
    }

    pub fn one(n: usize) -> Self {
        GrMonomial::new(QScalar::one(), PbwMonomial::one(n))
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// The monomial as an element of `U_q`; its leading part is `self`.
    pub fn lift(&self) -> Result<AlgebraElement, UqError> {
        Ok(AlgebraElement::monomial(self.mono.n(), &self.mono)?.scale(&self.coeff))
    }
}

impl fmt::Display for GrMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*{}", self.coeff, self.mono)
    }
}

/// Product in the associated graded algebra.
pub fn gr_multiply(x: &GrMonomial, y: &GrMonomial) -> GrMonomial {
    let n = x.mono.n();
    assert_eq!(n, y.mono.n(), "graded monomials of different ranks");
    let roots = Roots::new(n);
    let (a, b) = (&x.mono, &y.mono);
    // F̄^{r1} K̄^{λ1} Ē^{k1} · F̄^{r2} K̄^{λ2} Ē^{k2}
    let mut e = 0;
    // K̄^λ F̄_β = q^{-(λ,β)} F̄_β K̄^λ
    e -= root_sum_pairing(&roots, &a.lambda, &b.r);
    // Ē_β K̄^λ = q^{-(λ,β)} K̄^λ Ē_β
    e -= root_sum_pairing(&roots, &b.lambda, &a.k);
    e += merge_exponent(&roots, &a.r, &b.r, SWAP);
    e += merge_exponent(&roots, &a.k, &b.k, SWAP);
    let mono = PbwMonomial {
        r: a.r.iter().zip(&b.r).map(|(p, q)| p + q).collect(),
        lambda: a.lambda.iter().zip(&b.lambda).map(|(p, q)| p + q).collect(),
        k: a.k.iter().zip(&b.k).map(|(p, q)| p + q).collect(),
    };
    GrMonomial::new(&(&x.coeff * &y.coeff) * &QScalar::q_pow(e), mono)
}
