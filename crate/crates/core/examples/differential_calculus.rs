//! The two-parameter differential calculus on the quantum plane.

use qplane::coefficients::{par, Parameter};
use qplane::freealg::RewriteSystem;
use qplane::presets::{
    case1_k, combined_system, diffcalc_rules, exterior_d, glpq_rules, plane_rules, qij_one_param,
    Coaction,
};
use qplane::text::parse_ncpoly;

fn main() {
    let (p, qp, q) = (par(Parameter::P), par(Parameter::QP), par(Parameter::Q));
    let calc = diffcalc_rules(&p, &q, false).unwrap();
    for r in calc.rules() {
        println!("  {r}");
    }

    let forms = RewriteSystem::union("forms", &[&calc, &plane_rules(&q).unwrap()]).unwrap();
    let rel = parse_ncpoly("x y - q y x").unwrap();
    println!("d(xy - q yx) = {}", exterior_d(&rel, &forms).unwrap());

    println!("\nCase I: k = {}", case1_k(&q, &p, &qp).unwrap());

    let sys = combined_system(
        "calculus",
        &glpq_rules(&p, &q).unwrap(),
        &qij_one_param(&q, &p).unwrap(),
        &q,
        Some(&calc),
    )
    .unwrap();
    for s in ["dx dy + p^-1 dy dx", "x dx - p q dx x", "y dy - p q dy y"] {
        let rel = parse_ncpoly(s).unwrap();
        for co in [Coaction::t(), Coaction::transpose()] {
            println!("{co}: {s:<20} -> {}", co.apply(&rel, &sys).unwrap());
        }
    }
}
