//! Case II (p = q'): the commutative plane carried to a q'-plane.

use qplane::coefficients::{int, par, Parameter};
use qplane::presets::{combined_system, glpq_rules, qij_case2, Coaction};
use qplane::text::parse_ncpoly;

fn main() {
    let qp = par(Parameter::QP);
    let table = qij_case2(&int(1), &qp, &qp).unwrap();
    for ((i, j), c) in table.entries() {
        println!("q{i}{j} = {c}");
    }
    let sys = combined_system(
        "case2",
        &glpq_rules(&qp, &qp).unwrap(),
        &table,
        &int(1),
        None,
    )
    .unwrap();
    let image = Coaction::t()
        .apply(&parse_ncpoly("x y - q' y x").unwrap(), &sys)
        .unwrap();
    println!(
        "xy = yx  ->  x'y' - q' y'x' = {}",
        if image.is_zero() {
            "0".to_string()
        } else {
            image.to_string()
        }
    );
    let xa = Coaction::t().substitute(&parse_ncpoly("x A - A x").unwrap());
    println!("x'A - A x' = {}", sys.normal_order(&xa).unwrap());
}
