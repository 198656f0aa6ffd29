use super::engine::Engine;
use super::rules::Letter;
use super::*;
use crate::scalar::QScalar;

fn el(n: usize, s: &str) -> AlgebraElement {
    AlgebraElement::parse(n, s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

#[test]
fn rules_have_expected_shape() {
    for n in 2..=4 {
        let e = Engine::get(n);
        for ((a, b), terms) in e.rule_table() {
            match (a, b) {
                (Letter::L(_), Letter::L(_)) => {
                    assert!(terms.iter().all(|(_, m)| m.u().iter().all(|&x| x == 0)))
                }
                (Letter::U(_), Letter::U(_)) => {
                    assert!(terms.iter().all(|(_, m)| m.l().iter().all(|&x| x == 0)))
                }
                (Letter::K(..), Letter::L(_)) | (Letter::U(_), Letter::K(..)) => {
                    assert_eq!(terms.len(), 1, "{a:?}{b:?}");
                    assert!(terms[0].0.as_monomial().is_some());
                }
                _ => {}
            }
        }
    }
}

#[test]
fn ef_commutator() {
    let x = el(2, "E[1]*F[1] - F[1]*E[1]");
    let y = el(2, "(K[1]*Kinv[2] - K[2]*Kinv[1])/(q - q^-1)");
    assert_eq!(x, y);
    let x = el(3, "E[1]*F[2] - F[2]*E[1]");
    assert!(x.is_zero());
    let x = el(3, "E[2]*F[2] - F[2]*E[2]");
    assert_eq!(x, el(3, "(K[2]*Kinv[3] - K[3]*Kinv[2])/(q - q^-1)"));
}

#[test]
fn tbar_t_swap() {
    let x = el(2, "tb[1,2]*t[2,1]");
    let y = el(
        2,
        "t[2,1]*tb[1,2] + (q - q^-1)*(K[2]*Kinv[1] - Kinv[2]*K[1])",
    );
    assert_eq!(x, y);
}

#[test]
fn k_conjugation() {
    assert_eq!(el(2, "K[1]*E[1]*Kinv[1]"), el(2, "q*E[1]"));
    assert_eq!(el(2, "K[2]*E[1]*Kinv[2]"), el(2, "q^-1*E[1]"));
    assert_eq!(el(2, "K[1]*F[1]*Kinv[1]"), el(2, "q^-1*F[1]"));
    assert_eq!(el(2, "K[1]*Kinv[1]"), AlgebraElement::one(2));
}

#[test]
fn serre_relations() {
    for (i, j) in [(1, 2), (2, 1)] {
        for g in ["E", "F"] {
            let s = format!(
                "{g}[{i}]^2*{g}[{j}] - (q + q^-1)*{g}[{i}]*{g}[{j}]*{g}[{i}] + {g}[{j}]*{g}[{i}]^2"
            );
            assert!(el(3, &s).is_zero(), "{s}");
        }
    }
    assert!(el(4, "E[1]*E[3] - E[3]*E[1]").is_zero());
    assert!(el(4, "F[1]*E[3] - E[3]*F[1]").is_zero());
}

#[test]
fn chevalley_conversion_matches_products() {
    for n in 2..=3 {
        for m in enumerate_basis(n, 1).into_iter().step_by(7) {
            let direct = AlgebraElement::monomial(n, &m).unwrap();
            let roots = Roots::new(n);
            let mut prod = AlgebraElement::one(n);
            for r in roots.iter() {
                let f = Generator::Fbeta(r.i, r.j).element(n).unwrap();
                prod = &prod * &f.pow(m.r[r.pos] as i32).unwrap();
            }
            for (i, &l) in m.lambda.iter().enumerate() {
                prod = &prod * &Generator::K(i + 1).element(n).unwrap().pow(l).unwrap();
            }
            for r in roots.iter() {
                let e = Generator::Ebeta(r.i, r.j).element(n).unwrap();
                prod = &prod * &e.pow(m.k[r.pos] as i32).unwrap();
            }
            assert_eq!(direct, prod, "{m:?}");
            assert_eq!(direct.terms(), vec![(m.clone(), QScalar::one())]);
        }
    }
}

#[test]
fn translations() {
    let t = translate(2, Generator::Tb(1, 2), Direction::RttToChevalley).unwrap();
    assert_eq!(t.element, el(2, "(q - q^-1)*Kinv[1]*E[1]"));
    let t = translate(2, Generator::T(2, 1), Direction::RttToChevalley).unwrap();
    assert_eq!(t.element, el(2, "-(q - q^-1)*F[1]*K[1]"));
    assert_eq!(el(3, "t[2,2]"), el(3, "K[2]"));
    assert_eq!(el(3, "tb[2,2]"), el(3, "Kinv[2]"));
    assert!(el(3, "t[1,2]").is_zero());
    assert!(el(3, "tb[2,1]*E[1]").is_zero());
    for n in 2..=3 {
        let roots = Roots::new(n);
        for r in roots.iter() {
            for g in [
                Generator::Ebeta(r.i, r.j),
                Generator::Fbeta(r.i, r.j),
                Generator::T(r.j, r.i),
                Generator::Tb(r.i, r.j),
            ] {
                let there = translate(n, g, Direction::ChevalleyToRtt).unwrap();
                let back = translate(n, g, Direction::RttToChevalley).unwrap();
                assert_eq!(el(n, &there.text), there.element, "{}", there.text);
                assert_eq!(el(n, &back.text), back.element, "{}", back.text);
            }
        }
    }
}

#[test]
fn basis_counts() {
    assert_eq!(enumerate_basis(2, 1).len(), 36);
    assert_eq!(enumerate_basis(3, 0).len(), 1);
    assert_eq!(enumerate_basis(3, 1).len(), 1728);
}

#[test]
fn printing_round_trips() {
    let x = el(3, "(E[1] + q*F[2])^2 - K[3]*Ebeta[1,3]/(q+1) + 7");
    let printed = x.to_string();
    assert_eq!(el(3, &printed), x, "{printed}");
    assert_eq!(el(3, &x.to_rtt_string()), x);
    assert_eq!(el(2, "-F[1]").to_string(), "-F[1]");
}

#[test]
fn small_associativity() {
    let words = [
        "E[1]*F[2]",
        "tb[1,3]+F[1]",
        "t[3,1]*K[2]",
        "E[2]^2-Fbeta[1,3]",
        "tb[2,3]*t[2,1]",
    ];
    for a in words {
        for b in words {
            for c in words {
                let (a, b, c) = (el(3, a), el(3, b), el(3, c));
                assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            }
        }
    }
}
