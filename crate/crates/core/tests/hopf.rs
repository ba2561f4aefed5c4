mod common;

use proptest::prelude::*;

use qplane::coefficients::{par, Parameter};
use qplane::freealg::{RewriteSystem, Word};
use qplane::hopf::{
    antipode_identities, counit, counit_word, delta, delta_det_check, delta_free,
    derive_hopf_constraints, det_relations_check, glpq_relations, naive_left_adjugate, quantum_det,
    quantum_det_alt,
};
use qplane::presets::glpq_rules;

use common::arb_group_poly;

fn glpq() -> RewriteSystem {
    glpq_rules(&par(Parameter::P), &par(Parameter::QP)).unwrap()
}

fn eps(w: &Word) -> qplane::coefficients::Coefficient {
    counit_word(w).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn delta_is_multiplicative(a in arb_group_poly(), b in arb_group_poly()) {
        let rules = glpq();
        let lhs = delta(&rules.mul(&a, &b).unwrap(), &rules).unwrap();
        let rhs = delta(&a, &rules).unwrap().mul(&delta(&b, &rules).unwrap(), &rules).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn counit_is_a_two_sided_unit_for_delta(a in arb_group_poly()) {
        let d = delta_free(&a).unwrap();
        prop_assert_eq!(d.contract_left(eps), a.clone());
        prop_assert_eq!(d.contract_right(eps), a);
    }

    #[test]
    fn counit_is_multiplicative(a in arb_group_poly(), b in arb_group_poly()) {
        let rules = glpq();
        let ab = rules.mul(&a, &b).unwrap();
        prop_assert_eq!(counit(&ab).unwrap(), counit(&a).unwrap() * counit(&b).unwrap());
    }
}

#[test]
fn delta_respects_every_relation() {
    let (p, qp) = (par(Parameter::P), par(Parameter::QP));
    let rules = glpq();
    for (name, rel) in glpq_relations(&p, &qp).unwrap() {
        assert!(delta(&rel, &rules).unwrap().is_zero(), "{name}");
    }
}

#[test]
fn constraints_forced_by_delta() {
    let r = derive_hopf_constraints().unwrap();
    assert!(r.q1_equals_q2 && r.q3_equals_q4);
    assert!(r.first_matches && r.second_matches);
    assert!(r.exclusion_recovered);
}

#[test]
fn determinant_identities() {
    let (p, qp) = (par(Parameter::P), par(Parameter::QP));
    let rules = glpq();
    assert_eq!(
        quantum_det(&p, &rules).unwrap(),
        quantum_det_alt(&p, &rules).unwrap()
    );
    assert!(det_relations_check(&p, &qp)
        .unwrap()
        .iter()
        .all(|i| i.holds()));
    assert!(antipode_identities(&p, &qp)
        .unwrap()
        .iter()
        .all(|i| i.holds()));
    assert!(delta_det_check(&p, &qp).unwrap().is_zero());
}

#[test]
fn literal_left_adjugate_needs_p_equal_q_prime() {
    let (p, qp) = (par(Parameter::P), par(Parameter::QP));
    assert!(naive_left_adjugate(&p, &qp)
        .unwrap()
        .iter()
        .any(|i| !i.holds()));
    assert!(naive_left_adjugate(&p, &p)
        .unwrap()
        .iter()
        .all(|i| i.holds()));
}
