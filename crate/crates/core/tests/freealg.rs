mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;

use qplane::coefficients::{par, Parameter};
use qplane::freealg::{
    check_critical_pairs, FreeAlgError, Generator, NCPoly, RewriteSystem, Strategy, Word,
};
use qplane::presets::{combined_system, diffcalc_rules, glpq_rules, plane_rules, qij_general};

use common::{arb_form, arb_group_poly, arb_nonzero_coefficient};
use Generator::*;

fn glpq() -> RewriteSystem {
    glpq_rules(&par(Parameter::P), &par(Parameter::QP)).unwrap()
}

fn forms() -> RewriteSystem {
    let (p, q) = (par(Parameter::P), par(Parameter::Q));
    RewriteSystem::union(
        "forms",
        &[
            &diffcalc_rules(&p, &q, false).unwrap(),
            &plane_rules(&q).unwrap(),
        ],
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_forms_are_normal_and_stable(a in arb_group_poly()) {
        let rules = glpq();
        let n = rules.normal_order(&a).unwrap();
        prop_assert!(n.words().all(Word::is_normal));
        prop_assert_eq!(rules.normal_order(&n).unwrap(), n);
    }

    #[test]
    fn normal_ordering_is_linear(a in arb_group_poly(), b in arb_group_poly(), c in arb_nonzero_coefficient()) {
        let rules = glpq();
        let n = |x: &NCPoly| rules.normal_order(x).unwrap();
        prop_assert_eq!(n(&a.add(&b)), n(&a).add(&n(&b)));
        prop_assert_eq!(n(&a.scale(&c)), n(&a).scale(&c));
    }

    #[test]
    fn reduction_order_does_not_matter(a in arb_group_poly(), f in arb_form()) {
        let rules = glpq();
        let left = rules.normal_order_with(&a, Strategy::Leftmost).unwrap();
        prop_assert_eq!(rules.normal_order_with(&a, Strategy::Rightmost).unwrap(), left);
        let forms = forms();
        let left = forms.normal_order_with(&f, Strategy::Leftmost).unwrap();
        prop_assert_eq!(forms.normal_order_with(&f, Strategy::Rightmost).unwrap(), left);
    }

    #[test]
    fn reduced_product_is_associative(a in arb_group_poly(), b in arb_group_poly(), c in arb_group_poly()) {
        let rules = glpq();
        let ab_c = rules.mul(&rules.mul(&a, &b).unwrap(), &c).unwrap();
        let a_bc = rules.mul(&a, &rules.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
    }
}

#[test]
fn strict_system_reports_missing_rules() {
    let rules = glpq();
    let err = rules.normal_order(&NCPoly::letters(&[X, A])).unwrap_err();
    assert_eq!(err, FreeAlgError::MissingRule(X, A));
    let lenient = glpq().lenient();
    assert_eq!(
        lenient.normal_order(&NCPoly::letters(&[X, A])).unwrap(),
        NCPoly::letters(&[X, A])
    );
}

#[test]
fn rules_must_decrease_the_word() {
    let bad = RewriteSystem::new("bad").with_rule(A, B, NCPoly::letters(&[B, A]));
    assert!(matches!(bad, Err(FreeAlgError::InvalidRule { .. })));
}

#[test]
fn group_and_form_presentations_are_locally_confluent() {
    assert!(check_critical_pairs(&glpq(), &Generator::GROUP).is_empty());
    assert!(check_critical_pairs(&forms(), &Generator::FORMS).is_empty());
}

#[test]
fn general_table_is_confluent_only_at_k_equal_qbar_over_p() {
    let (p, qp, q, qbar, k) = (
        par(Parameter::P),
        par(Parameter::QP),
        par(Parameter::Q),
        par(Parameter::QBAR),
        par(Parameter::K),
    );
    let alphabet = [A, B, C, D, X, Y];
    let sys = |k: &_| {
        combined_system(
            "s",
            &glpq(),
            &qij_general(&q, &qbar, &p, &qp, k).unwrap(),
            &q,
            None,
        )
        .unwrap()
    };
    let divs = check_critical_pairs(&sys(&k), &alphabet);
    let words: Vec<String> = divs.iter().map(|d| d.word.to_string()).collect();
    assert_eq!(words, ["x D A", "y D A"]);
    let special = qbar.div(&p).unwrap();
    assert!(check_critical_pairs(&sys(&special), &alphabet).is_empty());
}

#[test]
fn parameters_can_be_bound_after_building() {
    let bind: BTreeMap<_, _> = [(Parameter::P, par(Parameter::QP))].into();
    let rules = glpq().substitute(&bind).unwrap();
    let r = rules
        .normal_order(&NCPoly::letters(&[D, A]).sub(&NCPoly::letters(&[A, D])))
        .unwrap();
    let qp = par(Parameter::QP);
    assert_eq!(r, NCPoly::letters(&[B, C]).scale(&(qp.inv().unwrap() - qp)));
}
