//! The quantum plane xy = q yx carried to x'y' = qbar y'x' by T and T^t.

use qplane::coefficients::{par, Parameter};
use qplane::presets::{
    combined_system, extract_constraints, glpq_rules, qij_general, qij_symbolic, Coaction,
};
use qplane::text::parse_ncpoly;

fn main() {
    let (p, qp, q, qbar, k) = (
        par(Parameter::P),
        par(Parameter::QP),
        par(Parameter::Q),
        par(Parameter::QBAR),
        par(Parameter::K),
    );

    println!("constraints on a symbolic table under T:");
    for c in extract_constraints(&Coaction::t(), &qij_symbolic(), &q, &qbar).unwrap() {
        println!("  {c}");
    }

    let table = qij_general(&q, &qbar, &p, &qp, &k).unwrap();
    println!("\ngeneral table:");
    for ((i, j), c) in table.entries() {
        println!("  q{i}{j} = {c}");
    }

    let sys = combined_system("plane", &glpq_rules(&p, &qp).unwrap(), &table, &q, None).unwrap();
    let rel = parse_ncpoly("x y - qbar y x").unwrap();
    for co in [Coaction::t(), Coaction::transpose()] {
        let r = co.apply(&rel, &sys).unwrap();
        println!("{co}: x'y' - qbar y'x' reduces to {r}");
    }
}
