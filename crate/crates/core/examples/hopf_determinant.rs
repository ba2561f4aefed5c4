//! Comultiplication, the quantum determinant and the antipode identities.

use qplane::coefficients::{par, Parameter};
use qplane::hopf::{
    antipode_identities, delta_det_check, delta_residual, derive_hopf_constraints,
    det_relations_check, glpq_relations, quantum_det,
};
use qplane::presets::glpq_rules;

fn main() {
    let (p, qp) = (par(Parameter::P), par(Parameter::QP));
    let rules = glpq_rules(&p, &qp).unwrap();

    for (name, rel) in glpq_relations(&p, &qp).unwrap() {
        let r = delta_residual(&rel, &rules).unwrap();
        println!(
            "Δ({name}) residual: {}",
            if r.is_zero() {
                "0".to_string()
            } else {
                r.to_string()
            }
        );
    }

    let report = derive_hopf_constraints().unwrap();
    println!(
        "\nq1 = q2 forced: {}, q3 = q4 forced: {}",
        report.q1_equals_q2, report.q3_equals_q4
    );
    println!("pq' ≠ -1 proviso recovered: {}", report.exclusion_recovered);

    println!("\n𝒟 = {}", quantum_det(&p, &rules).unwrap());
    for id in det_relations_check(&p, &qp)
        .unwrap()
        .into_iter()
        .chain(antipode_identities(&p, &qp).unwrap())
    {
        println!(
            "  {:<28} {}",
            id.name,
            if id.holds() { "holds" } else { "FAILS" }
        );
    }
    println!(
        "Δ(𝒟) = 𝒟 ⊗ 𝒟: {}",
        delta_det_check(&p, &qp).unwrap().is_zero()
    );
}
