use super::*;
use crate::scalar::{LaurentPoly, QScalar};

fn q(k: i32) -> QScalar {
    QScalar::q_pow(k)
}

fn sample_base() -> Vec<LaurentPoly> {
    vec![
        k_monomial(1, 0),
        k_monomial(0, -1),
        t_var(),
        &(&t_var() * &t_var()) + &k_monomial(2, -1).scale(&q(3)),
        &t_var() * &k_monomial(-1, 2),
    ]
}

#[test]
fn sigma_is_an_automorphism() {
    let base = sample_base();
    for a in &base {
        assert_eq!(sigma_pow(&sigma_pow(a, 3), -3), *a);
        assert_eq!(sigma_pow(&sigma(a), 1), sigma_pow(a, 2));
        for b in &base {
            assert_eq!(sigma(&(a * b)), &sigma(a) * &sigma(b));
        }
    }
}

#[test]
fn sigma_on_generators() {
    assert_eq!(sigma(&k_monomial(1, 0)), k_monomial(1, 0).scale(&q(-1)));
    assert_eq!(sigma(&k_monomial(0, 1)), k_monomial(0, 1).scale(&q(1)));
    let d = QScalar::q_diff().inv().unwrap();
    let c = &k_monomial(1, -1).scale(&d) - &k_monomial(-1, 1).scale(&d);
    assert_eq!(&sigma(&t_var()) - &t_var(), c);
}

#[test]
fn x_plus_moves_past_base() {
    // X₊ K_1 = q^{-1} K_1 X₊
    let lhs = GwaElement::x_plus().mul(&GwaElement::base(k_monomial(1, 0)));
    let rhs = GwaElement::term(k_monomial(1, 0).scale(&q(-1)), 1);
    assert_eq!(lhs, rhs);
    let t = GwaElement::x_minus().mul(&GwaElement::x_plus());
    assert_eq!(t, GwaElement::base(t_var()));
    let st = GwaElement::x_plus().mul(&GwaElement::x_minus());
    assert_eq!(st, GwaElement::base(sigma(&t_var())));
}

#[test]
fn normal_form_is_idempotent_and_associative() {
    use GwaLetter::*;
    let word = vec![
        Minus,
        Base(k_monomial(1, 0)),
        Plus,
        Plus,
        Minus,
        Base(t_var()),
        Minus,
    ];
    let nf = gwa_normal_form(&word).unwrap();
    let rebuilt: Vec<GwaLetter> = nf
        .terms()
        .flat_map(|(n, a)| {
            let letter = if n > 0 { Plus } else { Minus };
            std::iter::once(Base(a.clone()))
                .chain(std::iter::repeat_n(letter, n.unsigned_abs() as usize))
        })
        .collect();
    // a single term, so the letters spell it
    assert_eq!(nf.terms().count(), 1);
    assert_eq!(gwa_normal_form(&rebuilt).unwrap(), nf);

    let els = [
        GwaElement::x_plus().add(&GwaElement::base(t_var())),
        GwaElement::x_minus()
            .pow(2)
            .add(&GwaElement::base(k_monomial(0, 1))),
        GwaElement::term(k_monomial(1, -1), 2).add(&GwaElement::x_minus()),
    ];
    for a in &els {
        for b in &els {
            for c in &els {
                assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
            }
        }
    }
}

#[test]
fn negative_t_powers_are_rejected() {
    let bad = LaurentPoly::var_pow(NVARS, T, -1);
    assert!(gwa_normal_form(&[GwaLetter::Base(bad)]).is_err());
}

#[test]
fn isomorphism_holds() {
    let rep = uq2_iso_check(32, 7).unwrap();
    for r in &rep.relations {
        assert!(r.residue_is_zero, "{}", r.name);
    }
    assert!(rep.gamma_generates_base);
    assert!(rep.products_ok);
}

#[test]
fn gamma_images_in_base() {
    let g = gamma_images().unwrap();
    assert_eq!(g.d11, k_monomial(-1, 0).scale(&q(2)));
    assert_eq!(g.d22, k_monomial(-1, -1).scale(&q(6)));
    let expected = &(&(&t_var() * &k_monomial(0, 0))
        .scale(&QScalar::laurent(1, &[1, 0, -2, 0, 1]))
        + &k_monomial(1, -1).scale(&q(4)))
        + &k_monomial(-1, 1).scale(&q(2));
    assert_eq!(g.d21, expected);
}

#[test]
fn points_and_characters_round_trip() {
    let p = BasePoint {
        k1: QScalar::monomial(3, 2),
        k2: QScalar::monomial(-2, -1),
        tau: QScalar::laurent(-1, &[1, 0, 5]),
    };
    let chi = point_to_character(&p).unwrap();
    assert_eq!(character_to_point(&chi).unwrap(), p);
}

#[test]
fn closed_form_tau_matches_shifts() {
    let p = BasePoint {
        k1: QScalar::monomial(2, 1),
        k2: QScalar::monomial(1, -2),
        tau: QScalar::from_int(3),
    };
    let (a, b, c) = tau_coefficients(&p).unwrap();
    for n in -4..=4 {
        let x = q(2 * n);
        let closed = &(&(&a * &x) + &b.checked_div(&x).unwrap()) + &c;
        assert_eq!(tau_at(&p, n as i64).unwrap(), closed, "n = {n}");
    }
}

#[test]
fn generic_character_has_one_dense_module() {
    let p = BasePoint {
        k1: QScalar::monomial(2, 0),
        k2: QScalar::one(),
        tau: QScalar::from_int(1),
    };
    let rep = fiber_gl2(&point_to_character(&p).unwrap()).unwrap();
    assert!(rep.breaks.is_empty());
    assert_eq!(rep.count, 1);
    assert_eq!(rep.modules[0].kind, ModuleKind::Dense);
}

#[test]
fn sampled_characters_have_planted_breaks() {
    let samples = sample_characters(24, 11).unwrap();
    for s in &samples {
        let rep = fiber_gl2(&s.character).unwrap();
        assert_eq!(rep.breaks, s.planted_breaks, "{:?}", s.kind);
        assert_eq!(rep.count, 1);
        assert_eq!(rep.orbit_modules.len(), s.planted_breaks.len() + 1);
        for m in &rep.orbit_modules {
            let anchored = m.support_window.contains(0);
            let check = module_action_check(&s.character, m, 6).unwrap();
            assert!(check.relations_ok, "{:?}", check.failures);
            assert!(check.gamma_eigen_ok, "{:?}", check.failures);
            assert_eq!(check.contains_character, anchored);
            assert!(check.max_weight_dim <= 2);
        }
    }
}

#[test]
fn two_breaks_give_a_finite_module() {
    // κ = q^{-(b1+b2)-1} with b1 = -1, b2 = 1
    let base = BasePoint {
        k1: q(-1),
        k2: QScalar::one(),
        tau: QScalar::zero(),
    };
    let tau = -tau_at(&base, -1).unwrap();
    let p = BasePoint { tau, ..base };
    let rep = fiber_gl2(&point_to_character(&p).unwrap()).unwrap();
    assert_eq!(rep.breaks, vec![-1, 1]);
    let kinds: Vec<ModuleKind> = rep.orbit_modules.iter().map(|m| m.kind).collect();
    assert_eq!(
        kinds,
        vec![ModuleKind::Highest, ModuleKind::Finite, ModuleKind::Lowest]
    );
    assert_eq!(rep.modules[0].kind, ModuleKind::Finite);
    assert_eq!(
        rep.modules[0].support_window,
        SupportWindow {
            lo: Some(0),
            hi: Some(1)
        }
    );
}

#[test]
fn characters_parse_from_json() {
    let chi = GtCharacter::from_json(r#"{"g11": "q^2", "g21": "q + 1", "g22": "3*q^6"}"#).unwrap();
    assert_eq!(chi.g11, q(2));
    assert!(GtCharacter::from_json(r#"{"g11": "0", "g21": "1", "g22": "1"}"#).is_err());
}
