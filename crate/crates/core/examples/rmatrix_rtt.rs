//! R_{p,q}, the Yang-Baxter equation and RTT = TTR.

use qplane::coefficients::{par, Parameter};
use qplane::presets::glpq_rules;
use qplane::rmatrix::{build_r, rtt_reduced, ybe_check};

fn main() {
    let (p, qp) = (par(Parameter::P), par(Parameter::QP));
    let r = build_r(&p, &qp).unwrap();
    println!("R_{{p,q'}} =\n{r:?}");

    let ybe = ybe_check(&p, &qp).unwrap();
    println!("quantum YBE holds: {}", ybe.quantum_holds());
    println!("braid YBE holds:   {}", ybe.braid_holds());

    let rules = glpq_rules(&p, &qp).unwrap();
    let entries = rtt_reduced(&r, &rules).unwrap();
    let nonzero = entries.iter().filter(|x| !x.is_zero()).count();
    println!(
        "RTT - TTR: {nonzero} of {} entries nonzero after reduction",
        entries.len()
    );
}
