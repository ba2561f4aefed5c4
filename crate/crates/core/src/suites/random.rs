//! Random inputs for the property checks.

use rand::Rng;

use crate::coefficients::{par, Coefficient, Parameter, Poly, ZERO_EXPS};
use crate::freealg::{Generator, NCPoly, Word};

const VARS: [Parameter; 5] = [
    Parameter::P,
    Parameter::Q,
    Parameter::QP,
    Parameter::QBAR,
    Parameter::K,
];

/// A polynomial with up to `terms` monomials, small integer coefficients
/// and exponents at most 2.
pub fn random_poly<R: Rng + ?Sized>(rng: &mut R, terms: usize) -> Poly {
    let n = rng.gen_range(1..=terms);
    Poly::from_terms((0..n).map(|_| {
        let mut e = ZERO_EXPS;
        for _ in 0..rng.gen_range(0..=2) {
            let v = VARS[rng.gen_range(0..VARS.len())];
            e[v.index()] += 1;
        }
        let mut c: i64 = rng.gen_range(-4..=4);
        if c == 0 {
            c = 1;
        }
        (e, c.into())
    }))
}

/// A random rational function, zero about one time in twenty.
pub fn random_coefficient<R: Rng + ?Sized>(rng: &mut R) -> Coefficient {
    if rng.gen_ratio(1, 20) {
        return Coefficient::zero();
    }
    let num = random_poly(rng, 3);
    let den = loop {
        let d = random_poly(rng, 2);
        if !d.is_zero() {
            break d;
        }
    };
    Coefficient::from_parts(num, den).expect("nonzero denominator")
}

/// A random word of length `0..=max_len` over `alphabet`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, alphabet: &[Generator], max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| alphabet[rng.gen_range(0..alphabet.len())])
        .collect()
}

/// A random polynomial in the plane letters `x, y, dx, dy` with parameter
/// monomial coefficients.
pub fn random_form<R: Rng + ?Sized>(rng: &mut R, max_terms: usize, max_len: usize) -> NCPoly {
    let mut out = NCPoly::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let w = random_word(rng, &Generator::FORMS, max_len);
        let mut c = Coefficient::from_int(rng.gen_range(1..=3));
        if rng.gen_bool(0.5) {
            c = c * par(VARS[rng.gen_range(0..VARS.len())]);
        }
        if rng.gen_bool(0.3) {
            c = -c;
        }
        out.add_term(w, c);
    }
    out
}
