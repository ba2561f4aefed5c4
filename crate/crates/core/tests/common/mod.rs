#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use qplane::coefficients::{int, Coefficient, Parameter, Poly, ZERO_EXPS};
use qplane::freealg::{Generator, NCPoly, Word};

pub const VARS: [Parameter; 5] = [
    Parameter::P,
    Parameter::Q,
    Parameter::QP,
    Parameter::QBAR,
    Parameter::K,
];

/// Up to four monomials of degree at most 2 with small coefficients.
pub fn arb_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(
        (prop::collection::vec(0..VARS.len(), 0..=2), -4i64..=4),
        1..=4,
    )
    .prop_map(|terms| {
        Poly::from_terms(terms.into_iter().map(|(vars, c)| {
            let mut e = ZERO_EXPS;
            for v in vars {
                e[VARS[v].index()] += 1;
            }
            (e, BigInt::from(c))
        }))
    })
}

pub fn arb_coefficient() -> impl Strategy<Value = Coefficient> {
    (
        arb_poly(),
        arb_poly().prop_filter("nonzero", |d| !d.is_zero()),
    )
        .prop_map(|(n, d)| Coefficient::from_parts(n, d).expect("nonzero denominator"))
}

pub fn arb_nonzero_coefficient() -> impl Strategy<Value = Coefficient> {
    arb_coefficient().prop_filter("nonzero", |c| !c.is_zero())
}

fn arb_word(alphabet: &'static [Generator], max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(alphabet), 0..=max_len).prop_map(Word::new)
}

fn arb_ncpoly(alphabet: &'static [Generator], max_len: usize) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((arb_word(alphabet, max_len), -3i64..=3), 1..=3)
        .prop_map(|terms| NCPoly::from_terms(terms.into_iter().map(|(w, c)| (w, int(c)))))
}

/// Integer combinations of words in `A, B, C, D`.
pub fn arb_group_poly() -> impl Strategy<Value = NCPoly> {
    arb_ncpoly(&Generator::GROUP, 3)
}

/// Integer combinations of words in `x, y, dx, dy`.
pub fn arb_form() -> impl Strategy<Value = NCPoly> {
    arb_ncpoly(&Generator::FORMS, 3)
}

/// Integer values for `p, q', q, qbar, k` away from the singular points
/// `pq' = ±1`.
pub fn arb_numeric_bindings() -> impl Strategy<Value = BTreeMap<Parameter, Coefficient>> {
    let nz = prop::sample::select(vec![-3i64, -2, 2, 3, 4, 5]);
    (nz.clone(), nz.clone(), nz.clone(), nz.clone(), nz)
        .prop_filter("p q' != ±1", |(p, qp, ..)| (p * qp).abs() != 1)
        .prop_map(|(p, qp, q, qbar, k)| {
            [
                (Parameter::P, int(p)),
                (Parameter::QP, int(qp)),
                (Parameter::Q, int(q)),
                (Parameter::QBAR, int(qbar)),
                (Parameter::K, int(k)),
            ]
            .into()
        })
}
