mod common;

use proptest::prelude::*;

use qplane::coefficients::{int, par, Parameter};
use qplane::freealg::linear_rank;
use qplane::hopf::glpq_relations;
use qplane::presets::{glpq_rules, glq_rules};
use qplane::rmatrix::{
    build_r, build_r_with, r_q, rtt_flip_consistency, rtt_matrix, rtt_reduced, rtt_span, ybe_check,
    ybe_residuals, ScalarMatrix,
};

use common::arb_numeric_bindings;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn yang_baxter_at_numeric_points(b in arb_numeric_bindings()) {
        let r = build_r(&par(Parameter::P), &par(Parameter::Q)).unwrap().substitute(&b).unwrap();
        let y = ybe_residuals(&r);
        prop_assert!(y.quantum_holds() && y.braid_holds());
    }

    #[test]
    fn rtt_at_numeric_points(b in arb_numeric_bindings()) {
        let (p, qp) = (b[&Parameter::P].clone(), b[&Parameter::QP].clone());
        let r = build_r(&p, &qp).unwrap();
        let reduced = rtt_reduced(&r, &glpq_rules(&p, &qp).unwrap()).unwrap();
        prop_assert!(reduced.iter().all(|x| x.is_zero()));
    }
}

#[test]
fn symbolic_r_matrix() {
    let (p, q) = (par(Parameter::P), par(Parameter::Q));
    let y = ybe_check(&p, &q).unwrap();
    assert!(y.quantum_holds() && y.braid_holds());
    let at_q = build_r(&q, &q).unwrap();
    assert_eq!(at_q, r_q(&q).unwrap());
    let bad = build_r_with(&p, &q, &q + &p.inv().unwrap()).unwrap();
    let y = ybe_residuals(&bad);
    assert!(!y.quantum_holds() && !y.braid_holds());
}

#[test]
fn rtt_entries_are_the_group_relations() {
    let (p, qp) = (par(Parameter::P), par(Parameter::QP));
    let r = build_r(&p, &qp).unwrap();
    assert!(rtt_reduced(&r, &glpq_rules(&p, &qp).unwrap())
        .unwrap()
        .iter()
        .all(|x| x.is_zero()));
    let rels: Vec<_> = glpq_relations(&p, &qp)
        .unwrap()
        .into_iter()
        .map(|(_, r)| r)
        .collect();
    assert_eq!(linear_rank(&rels), 6);
    let span = rtt_span(rtt_matrix(&r).entries(), &rels);
    assert!(span.same_span());
    assert!(rtt_flip_consistency(&r)
        .entries()
        .iter()
        .all(|x| x.is_zero()));
}

#[test]
fn wrong_presentation_leaves_residuals() {
    let (p, qp, q) = (par(Parameter::P), par(Parameter::QP), par(Parameter::Q));
    let reduced = rtt_reduced(&build_r(&p, &qp).unwrap(), &glq_rules(&q).unwrap()).unwrap();
    assert!(reduced.iter().any(|x| !x.is_zero()));
}

#[test]
fn kronecker_product_and_flip() {
    let flip = ScalarMatrix::flip();
    assert_eq!(flip.mul(&flip), ScalarMatrix::identity(4));
    let i2 = ScalarMatrix::identity(2);
    assert_eq!(i2.kron(&i2), ScalarMatrix::identity(4));
    let mut m = ScalarMatrix::zero(2);
    m.set(0, 1, int(3));
    assert_eq!(m.kron(&i2).get(1, 3), &int(3));
}
