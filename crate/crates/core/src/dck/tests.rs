use super::*;
use crate::gtsub::d_gen;
use crate::perm::Perm;
use crate::scalar::QScalar;
use crate::uq::{AlgebraElement, PbwMonomial, Roots};

fn el(n: usize, s: &str) -> AlgebraElement {
    AlgebraElement::parse(n, s).unwrap()
}

fn mono(n: usize, s: &str) -> PbwMonomial {
    leading_term(&el(n, s)).unwrap().0
}

#[test]
fn degree_basics() {
    let d = total_degree(&mono(2, "E[1]"));
    assert_eq!(
        (d.ht, d.kdeg.clone(), d.rdeg.clone()),
        (1, vec![1], vec![0])
    );
    assert_eq!(total_degree(&mono(3, "Fbeta[1,3]*K[2]*E[1]")).ht, 3);
    assert_eq!(leading_term(&el(2, "K[1]")).unwrap().0, mono(2, "K[1]"));
    assert!(matches!(
        leading_term(&AlgebraElement::zero(2)),
        Err(DckError::Zero)
    ));
    assert!(matches!(
        leading_term(&el(2, "K[1] + K[2]")),
        Err(DckError::Tie { .. })
    ));
}

#[test]
fn d42_terms_first_differ_at_kdeg_of_beta13() {
    let t1 = crate::gtsub::d_terms(4, 2)
        .into_iter()
        .find(|t| t.sigma == Perm(vec![3, 4, 1, 2]))
        .unwrap();
    let t2 = crate::gtsub::d_terms(4, 2)
        .into_iter()
        .find(|t| t.sigma == Perm(vec![3, 4, 2, 1]))
        .unwrap();
    let d1 = word_degree(4, &t1.generators());
    let d2 = word_degree(4, &t2.generators());
    let roots = Roots::new(4);
    assert_eq!(
        d1.first_difference(&d2),
        Some(("kdeg", roots.pos(1, 3).unwrap()))
    );
    assert!(d1 > d2);
}

#[test]
fn gr_product_matches_engine() {
    for n in 2..=3 {
        let basis = crate::uq::enumerate_basis(n, 1);
        for (i, a) in basis.iter().enumerate().step_by(37) {
            for b in basis.iter().skip(i % 11).step_by(53) {
                let x = GrMonomial::new(QScalar::one(), a.clone());
                let y = GrMonomial::new(QScalar::one(), b.clone());
                let g = gr_multiply(&x, &y);
                let prod = x.lift().unwrap().try_mul(&y.lift().unwrap()).unwrap();
                let (m, c) = leading_term(&prod).unwrap();
                assert_eq!((m, c), (g.mono.clone(), g.coeff.clone()), "{a:?} * {b:?}");
            }
        }
    }
}

#[test]
fn perm_records() {
    let p = perm_stats(&Perm(vec![3, 4, 1, 2]));
    assert_eq!(p.ht, 8);
    assert!(p.derangement);
    let id = perm_stats(&Perm::identity(3));
    assert_eq!((id.ht, id.derangement), (0, false));
    assert_eq!(perm_stats(&Perm::cycle_power(5, 2)).ht, 12);
}

#[test]
fn oracle_small() {
    assert_eq!(
        brute_force_leading_perm(4, 2).unwrap(),
        Perm(vec![3, 4, 1, 2])
    );
    assert_eq!(brute_force_leading_perm(3, 3).unwrap(), Perm::identity(3));
    assert_eq!(
        brute_force_leading_perm(5, 2).unwrap(),
        Perm::cycle_power(5, 2)
    );
}

#[test]
fn leading_terms_at_rank_three() {
    let rep = verify_lt_theorem(3).unwrap();
    assert_eq!(rep.pairs.len(), 6);
    assert!(rep.all_match(), "{:?}", rep);
}

#[test]
fn d42_leading_monomial() {
    let lt = leading_term(&d_gen(4, 4, 2).unwrap().value).unwrap().0;
    let expect = leading_term(&el(4, "t[3,1]*t[4,2]*tb[1,3]*tb[2,4]"))
        .unwrap()
        .0;
    assert_eq!(lt, expect);
}

#[test]
fn markers() {
    let d42 = d_gen(4, 4, 2).unwrap().value;
    let d43 = d_gen(4, 4, 3).unwrap().value;
    let d31 = d_gen(4, 3, 1).unwrap().value;
    assert_eq!(count_marker(&d42, 4, 2).unwrap(), 1);
    assert_eq!(count_marker(&d43, 4, 2).unwrap(), 0);
    assert_eq!(count_marker(&(&d42 * &d31), 4, 2).unwrap(), 1);
}

#[test]
fn decode_small_gamma_monomials() {
    let mut exps = GammaExponents::new();
    exps.insert((1, 1), -1);
    exps.insert((2, 1), 2);
    exps.insert((3, 1), 1);
    exps.insert((3, 2), 1);
    exps.insert((3, 3), 2);
    let g = gamma_monomial(3, &exps).unwrap();
    let lt = leading_term(&g).unwrap().0;
    let got = decode_gamma_exponents(3, &lt);
    for (k, v) in &got {
        assert_eq!(exps.get(k).copied().unwrap_or(0), *v, "{k:?}");
    }
}

#[test]
fn heights() {
    for r in 1..=5 {
        for s in 0..=r {
            let h = height_check(r, s);
            assert!(h.holds(), "{h:?}");
        }
    }
}

#[test]
fn maxcomm_d1() {
    let c = maxcomm_certificate(1).unwrap();
    assert!(c.holds, "{c:?}");
}
