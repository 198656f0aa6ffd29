use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qgt_core::dck::{gr_multiply, leading_term, GrMonomial};
use qgt_core::galois::{x_var, GroupElem, MonoidElem};
use qgt_core::gl2gwa::{
    psi, sigma, sigma_pow, tau_at, tau_coefficients, BasePoint, GwaElement, NVARS,
};
use qgt_core::scalar::{LaurentPoly, QScalar};
use qgt_core::uq::{enumerate_basis, normal_form, random_word, AlgebraElement};

fn scalar() -> impl Strategy<Value = QScalar> {
    (-3i32..=3, prop::collection::vec(-4i64..=4, 1..4))
        .prop_map(|(low, c)| QScalar::laurent(low, &c))
}

fn nonzero_scalar() -> impl Strategy<Value = QScalar> {
    scalar().prop_filter("nonzero", |x| !x.is_zero())
}

fn base_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-2i32..=2, -2i32..=2, 0i32..=2, -3i64..=3), 1..4).prop_map(|terms| {
        let mut p = LaurentPoly::zero(NVARS);
        for (a, b, t, c) in terms {
            p = &p + &LaurentPoly::monomial(NVARS, vec![a, b, t], QScalar::from_int(c));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in nonzero_scalar()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&c * &c.inv().unwrap(), QScalar::one());
        prop_assert_eq!((&a * &c).checked_div(&c).unwrap(), a);
    }

    #[test]
    fn products_associate(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = normal_form(n, &random_word(n, 3, &mut rng)).unwrap();
        let b = normal_form(n, &random_word(n, 3, &mut rng)).unwrap();
        let c = normal_form(n, &random_word(n, 3, &mut rng)).unwrap();
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn graded_product_is_the_leading_term(i in 0usize..1000, j in 0usize..1000, n in 2usize..=3) {
        let basis = enumerate_basis(n, 1);
        let x = GrMonomial::new(QScalar::one(), basis[i % basis.len()].clone());
        let y = GrMonomial::new(QScalar::one(), basis[j % basis.len()].clone());
        let g = gr_multiply(&x, &y);
        let prod = x.lift().unwrap().try_mul(&y.lift().unwrap()).unwrap();
        prop_assert_eq!(leading_term(&prod).unwrap(), (g.mono, g.coeff));
    }

    #[test]
    fn group_actions_compose(a in 0usize..64, b in 0usize..64, k in -2i32..=2) {
        let n = 3;
        let gens = GroupElem::generators(n);
        let (ga, gb) = (&gens[a % gens.len()].1, &gens[b % gens.len()].1);
        let f = &x_var(n, 2, 1).pow(2) * &(&x_var(n, 3, 2) + &x_var(n, 2, 2));
        prop_assert_eq!(ga.compose(gb).act_poly(&f), ga.act_poly(&gb.act_poly(&f)));
        let x = MonoidElem::delta(n, 2, 1).unwrap().scale(k);
        let y = ga.conjugate(&x);
        prop_assert_eq!(y.coords().iter().map(|c| c.abs()).sum::<i32>(), k.abs());
    }

    #[test]
    fn sigma_is_multiplicative(a in base_poly(), b in base_poly(), k in -3i32..=3) {
        prop_assert_eq!(sigma(&(&a * &b)), &sigma(&a) * &sigma(&b));
        prop_assert_eq!(sigma_pow(&sigma_pow(&a, k), -k), a);
    }

    #[test]
    fn psi_is_multiplicative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = normal_form(2, &random_word(2, 3, &mut rng)).unwrap();
        let b = normal_form(2, &random_word(2, 3, &mut rng)).unwrap();
        let lhs = psi(&(&a * &b)).unwrap();
        let rhs: GwaElement = psi(&a).unwrap().mul(&psi(&b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tau_closed_form(k1 in nonzero_scalar(), k2 in nonzero_scalar(), tau in scalar(), n in -4i64..=4) {
        let p = BasePoint { k1, k2, tau };
        let (a, b, c) = tau_coefficients(&p).unwrap();
        let x = QScalar::q_pow(2 * n as i32);
        prop_assert_eq!(tau_at(&p, n).unwrap(), &(&(&a * &x) + &b.checked_div(&x).unwrap()) + &c);
    }
}

#[test]
fn one_is_a_two_sided_unit() {
    for n in 1..=3 {
        let one = AlgebraElement::one(n);
        for m in enumerate_basis(n, 1).iter().take(50) {
            let e = m.to_element().unwrap();
            assert_eq!(&one * &e, e);
            assert_eq!(&e * &one, e);
        }
    }
}
