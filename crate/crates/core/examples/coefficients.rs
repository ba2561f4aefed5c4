//! Exact rational-function arithmetic in the registered parameters.

use std::collections::BTreeMap;

use qplane::coefficients::{par, Parameter};
use qplane::text::{parse_bindings, parse_coefficient};

fn main() {
    let p = par(Parameter::P);
    let qp = par(Parameter::QP);

    // p - 1/q' = (p q' - 1)/q'
    let c = &p - &qp.inv().unwrap();
    println!("p - 1/q'           = {c}");
    let back = &c * &qp;
    println!("(p - 1/q') q'      = {back}");

    let f = parse_coefficient("(p^2 q' - p) / (p q' - 1)").unwrap();
    println!("(p^2 q' - p)/(pq' - 1) = {f}");

    let limit: BTreeMap<_, _> = parse_bindings("p=q, q'=q").unwrap();
    println!("at p = q' = q      : {}", c.substitute(&limit).unwrap());

    let numeric = parse_bindings("p=2, q'=3").unwrap();
    println!("at p = 2, q' = 3   : {}", c.substitute(&numeric).unwrap());
}
