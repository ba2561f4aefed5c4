//! Normal ordering in GL_{p,q'}(2) and a local-confluence audit.

use qplane::coefficients::{par, Parameter};
use qplane::freealg::check_critical_pairs;
use qplane::presets::{glpq_rules, shipped_systems};
use qplane::text::parse_ncpoly;

fn main() {
    let rules = glpq_rules(&par(Parameter::P), &par(Parameter::QP)).unwrap();
    for s in ["D A", "D C B A", "C B - B C", "A D - D A"] {
        let poly = parse_ncpoly(s).unwrap();
        println!("{s:<10} -> {}", rules.normal_order(&poly).unwrap());
    }

    println!();
    for sys in shipped_systems().unwrap() {
        let divs = check_critical_pairs(&sys.system, &sys.alphabet);
        println!("{:<30} {} divergent triples", sys.name, divs.len());
        if let Some(d) = divs.first() {
            println!("    e.g. {d}");
        }
    }
}
