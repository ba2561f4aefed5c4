mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;

use qplane::coefficients::{int, par, Coefficient, Parameter};
use qplane::freealg::{Generator, NCPoly, RewriteSystem};
use qplane::presets::{
    case1_k, combined_system, diffcalc_rules, exterior_d, exterior_d_free, glpq_rules, plane_rules,
    qij_case1, qij_case2, qij_commuting, qij_general, qij_manin, qij_one_param, Coaction,
    PresetError, QijTable,
};
use qplane::text::parse_ncpoly;

use common::{arb_form, arb_numeric_bindings};
use Generator::*;

fn sym() -> (
    Coefficient,
    Coefficient,
    Coefficient,
    Coefficient,
    Coefficient,
) {
    (
        par(Parameter::P),
        par(Parameter::QP),
        par(Parameter::Q),
        par(Parameter::QBAR),
        par(Parameter::K),
    )
}

fn invariant(table: &QijTable, bindings: &BTreeMap<Parameter, Coefficient>) -> bool {
    let t = table.substitute(bindings).unwrap();
    let c = t.context();
    let sys = combined_system("s", &glpq_rules(&c.p, &c.qp).unwrap(), &t, &c.q, None).unwrap();
    let rel = NCPoly::letters(&[X, Y]).sub(&NCPoly::letters(&[Y, X]).scale(&c.qbar));
    [Coaction::t(), Coaction::transpose()]
        .iter()
        .all(|co| co.apply(&rel, &sys).unwrap().is_zero())
}

fn forms() -> RewriteSystem {
    let (p, _, q, _, _) = sym();
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
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn plane_is_covariant_at_numeric_points(b in arb_numeric_bindings()) {
        let (p, qp, q, qbar, k) = sym();
        prop_assert!(invariant(&qij_general(&q, &qbar, &p, &qp, &k).unwrap(), &b));
        prop_assert!(invariant(&qij_case1(&q, &p, &qp).unwrap(), &b));
        prop_assert!(invariant(&qij_case2(&q, &qbar, &qp).unwrap(), &b));
    }

    #[test]
    fn d_squared_vanishes(f in arb_form()) {
        let dd = exterior_d_free(&exterior_d_free(&f).unwrap()).unwrap();
        prop_assert!(forms().normal_order(&dd).unwrap().is_zero());
    }

    #[test]
    fn d_is_a_graded_derivation(a in arb_form(), b in arb_form()) {
        let d = |x: &NCPoly| exterior_d_free(x).unwrap();
        let mut rhs = d(&a).mul_free(&b);
        for (w, c) in a.terms() {
            let odd = w.letters().iter().filter(|g| g.parity() == 1).count() % 2 == 1;
            let sign = if odd { -c } else { c.clone() };
            rhs = rhs.add(&NCPoly::term(sign, w.clone()).mul_free(&d(&b)));
        }
        prop_assert_eq!(d(&a.mul_free(&b)), rhs);
    }
}

#[test]
fn every_solution_table_satisfies_the_constraints() {
    let (p, qp, q, qbar, k) = sym();
    let tables = [
        qij_general(&q, &qbar, &p, &qp, &k).unwrap(),
        qij_case1(&q, &p, &qp).unwrap(),
        qij_one_param(&q, &p).unwrap(),
        qij_case2(&q, &qbar, &qp).unwrap(),
        qij_manin(&q).unwrap(),
    ];
    for t in &tables {
        assert!(
            t.constraints().unwrap().iter().all(|c| c.holds()),
            "{}",
            t.provenance()
        );
    }
    let commuting = qij_commuting(&p, &qp, &q).unwrap();
    assert!(!commuting.constraints().unwrap().iter().all(|c| c.holds()));
}

#[test]
fn checked_constructor_rejects_non_solutions() {
    let (p, qp, q, ..) = sym();
    let ones = qij_commuting(&p, &qp, &q).unwrap();
    let entries = std::array::from_fn(|i| std::array::from_fn(|j| ones.get(i + 1, j + 1).clone()));
    let err = QijTable::new(ones.provenance(), entries, ones.context().clone()).unwrap_err();
    assert!(matches!(err, PresetError::ConstraintViolation { .. }));
}

#[test]
fn case1_k_specializes_to_one_parameter_and_case2_values() {
    let (p, _, q, ..) = sym();
    assert_eq!(case1_k(&q, &p, &q).unwrap(), q.div(&p).unwrap());
    assert!(qij_case1(&q, &p, &q)
        .unwrap()
        .same_entries(&qij_one_param(&q, &p).unwrap()));
    let manin = qij_manin(&q).unwrap();
    assert!(manin.entries().all(|(_, c)| c.is_one()));
}

#[test]
fn exterior_derivative_of_the_plane_relation() {
    let rel = parse_ncpoly("x y - q y x").unwrap();
    assert!(exterior_d(&rel, &forms()).unwrap().is_zero());
    assert_eq!(
        exterior_d_free(&NCPoly::letters(&[X])).unwrap(),
        NCPoly::letters(&[Dx])
    );
    assert!(exterior_d_free(&NCPoly::letters(&[A])).is_err());
}

#[test]
fn calculus_is_invariant_with_the_one_parameter_table() {
    let (p, _, q, ..) = sym();
    let calc = diffcalc_rules(&p, &q, false).unwrap();
    let sys = combined_system(
        "s",
        &glpq_rules(&p, &q).unwrap(),
        &qij_one_param(&q, &p).unwrap(),
        &q,
        Some(&calc),
    )
    .unwrap();
    for co in [Coaction::t(), Coaction::transpose()] {
        for s in [
            "dx dy + p^-1 dy dx",
            "x dy - q dy x - (p q - 1) dx y",
            "dx dx",
            "dy dy",
        ] {
            let r = co.apply(&parse_ncpoly(s).unwrap(), &sys).unwrap();
            assert!(r.is_zero(), "{co}: {s} -> {r}");
        }
    }
}

#[test]
fn commutative_plane_goes_to_a_q_prime_plane() {
    let qp = par(Parameter::QP);
    let table = qij_case2(&int(1), &qp, &qp).unwrap();
    let sys = combined_system("s", &glpq_rules(&qp, &qp).unwrap(), &table, &int(1), None).unwrap();
    let image = Coaction::t()
        .apply(&parse_ncpoly("x y - q' y x").unwrap(), &sys)
        .unwrap();
    assert!(image.is_zero());
}
