//! Sparse multivariate polynomials over the integers in the registered
//! parameters.
//!
//! Terms are kept sorted in descending deg-lex order with no zero
//! coefficients, so structural equality is polynomial equality.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::params::{Parameter, NPARAMS};

pub type Exps = [u16; NPARAMS];

pub const ZERO_EXPS: Exps = [0; NPARAMS];

fn total_degree(e: &Exps) -> u32 {
    e.iter().map(|&x| x as u32).sum()
}

/// Deg-lex: total degree first, then lexicographic in registry order.
pub fn cmp_deglex(a: &Exps, b: &Exps) -> Ordering {
    total_degree(a).cmp(&total_degree(b)).then_with(|| a.cmp(b))
}

fn add_exps(a: &Exps, b: &Exps) -> Exps {
    let mut out = *a;
    for (o, x) in out.iter_mut().zip(b) {
        *o = o.checked_add(*x).expect("exponent overflow");
    }
    out
}

fn divides(d: &Exps, e: &Exps) -> bool {
    d.iter().zip(e).all(|(a, b)| a <= b)
}

fn sub_exps(a: &Exps, b: &Exps) -> Exps {
    let mut out = *a;
    for (o, x) in out.iter_mut().zip(b) {
        *o -= *x;
    }
    out
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: Vec<(Exps, BigInt)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Poly {
        Poly::monomial(ZERO_EXPS, c)
    }

    pub fn monomial(exps: Exps, c: BigInt) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(exps, c)],
            }
        }
    }

    pub fn var(p: Parameter) -> Poly {
        let mut e = ZERO_EXPS;
        e[p.index()] = 1;
        Poly::monomial(e, BigInt::one())
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms<I: IntoIterator<Item = (Exps, BigInt)>>(terms: I) -> Poly {
        let mut acc: HashMap<Exps, BigInt> = HashMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_default() += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| cmp_deglex(&b.0, &a.0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Exps, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == ZERO_EXPS && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(e, c)] if *e == ZERO_EXPS => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Exps, BigInt)> {
        self.terms.first()
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    /// Negates if needed so the leading coefficient is positive.
    pub fn sign_normalized(self) -> Poly {
        match self.terms.first() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self,
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        merge(&self.terms, &other.terms, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        merge(&self.terms, &other.terms, true)
    }

    pub fn mul_term(&self, exps: &Exps, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        // multiplying by a monomial preserves the term order
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (add_exps(e, exps), x * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.is_monomial() {
            let (e, c) = &other.terms[0];
            return self.mul_term(e, c);
        }
        if self.is_monomial() {
            let (e, c) = &self.terms[0];
            return other.mul_term(e, c);
        }
        let mut acc: HashMap<Exps, BigInt> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                *acc.entry(add_exps(ea, eb)).or_default() += ca * cb;
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| cmp_deglex(&b.0, &a.0));
        Poly { terms }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        self.mul_term(&ZERO_EXPS, c)
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (de, dc) = divisor.leading()?;
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if divisor.is_monomial() {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (e, c) in &self.terms {
                if !divides(de, e) {
                    return None;
                }
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                terms.push((sub_exps(e, de), q));
            }
            return Some(Poly { terms });
        }
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((le, lc)) = rem.leading().cloned() {
            if !divides(de, &le) {
                return None;
            }
            let (qc, r) = lc.div_rem(dc);
            if !r.is_zero() {
                return None;
            }
            let qe = sub_exps(&le, de);
            rem = rem.sub(&divisor.mul_term(&qe, &qc));
            quotient.push((qe, qc));
        }
        Some(Poly { terms: quotient })
    }

    /// Divides every coefficient by `d`, which must divide all of them.
    fn div_integer(&self, d: &BigInt) -> Poly {
        if d.is_one() {
            return self.clone();
        }
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, c / d)).collect(),
        }
    }

    /// Largest absolute value of a coefficient.
    fn max_norm(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(_, c)| c.abs())
            .max()
            .unwrap_or_default()
    }

    /// Substitutes the integer `x` for `v`.
    fn eval_var(&self, v: Parameter, x: &BigInt) -> Poly {
        let vi = v.index();
        Poly::from_terms(self.terms.iter().map(|(e, c)| {
            let mut rest = *e;
            rest[vi] = 0;
            (rest, c * x.pow(e[vi] as u32))
        }))
    }

    /// Gcd of the integer coefficients (zero for the zero polynomial).
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn degree_in(&self, v: Parameter) -> u16 {
        self.terms
            .iter()
            .map(|(e, _)| e[v.index()])
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(e, _)| total_degree(e))
            .max()
            .unwrap_or(0)
    }

    fn var_mask(&self) -> [bool; NPARAMS] {
        let mut mask = [false; NPARAMS];
        for (e, _) in &self.terms {
            for (m, x) in mask.iter_mut().zip(e) {
                *m |= *x > 0;
            }
        }
        mask
    }

    /// Parameters that occur with positive exponent.
    pub fn variables(&self) -> Vec<Parameter> {
        self.var_mask()
            .iter()
            .enumerate()
            .filter(|(_, m)| **m)
            .map(|(i, _)| Parameter::from_index(i))
            .collect()
    }

    /// Coefficients as a univariate polynomial in `v` (index = degree).
    fn to_univariate(&self, v: Parameter) -> Vec<Poly> {
        let vi = v.index();
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Exps, BigInt)>> = vec![Vec::new(); deg + 1];
        for (e, c) in &self.terms {
            let mut rest = *e;
            rest[vi] = 0;
            // dropping one variable keeps the relative order within a bucket
            buckets[e[vi] as usize].push((rest, c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut t| {
                t.sort_by(|a, b| cmp_deglex(&b.0, &a.0));
                Poly { terms: t }
            })
            .collect()
    }

    fn from_univariate(coeffs: &[Poly], v: Parameter) -> Poly {
        let mut all = Vec::new();
        for (d, c) in coeffs.iter().enumerate() {
            for (e, x) in &c.terms {
                let mut e = *e;
                e[v.index()] += d as u16;
                all.push((e, x.clone()));
            }
        }
        Poly::from_terms(all)
    }
}

fn merge(a: &[(Exps, BigInt)], b: &[(Exps, BigInt)], negate_b: bool) -> Poly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match cmp_deglex(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b {
                    &a[i].1 - &b[j].1
                } else {
                    &a[i].1 + &b[j].1
                };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    for (e, c) in &b[j..] {
        out.push((*e, if negate_b { -c } else { c.clone() }));
    }
    Poly { terms: out }
}

fn monomial_gcd(mono: &(Exps, BigInt), other: &Poly) -> Poly {
    let mut e = mono.0;
    for (oe, _) in &other.terms {
        for (x, y) in e.iter_mut().zip(oe) {
            *x = (*x).min(*y);
        }
    }
    let c = mono.1.gcd(&other.integer_content());
    Poly::monomial(e, c)
}

/// Greatest common divisor with positive leading coefficient.
///
/// Tries the evaluation heuristic first; every candidate it returns is
/// verified by exact division. Falls back to a primitive pseudo-remainder
/// sequence, viewing the arguments as univariate in one shared variable
/// with contents handled recursively.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone().sign_normalized();
    }
    if b.is_zero() || a == b {
        return a.clone().sign_normalized();
    }
    if a.is_monomial() {
        return monomial_gcd(&a.terms[0], b);
    }
    if b.is_monomial() {
        return monomial_gcd(&b.terms[0], a);
    }
    gcd_heuristic(a, b).unwrap_or_else(|| gcd_prs(a, b))
}

const HEURISTIC_TRIES: usize = 6;

/// Heuristic gcd: evaluate one variable at a large integer, take the gcd
/// of the images, read the candidate back off its balanced digits and
/// keep it only if it divides both arguments exactly.
fn gcd_heuristic(a: &Poly, b: &Poly) -> Option<Poly> {
    let ca = a.integer_content();
    let cb = b.integer_content();
    let ic = ca.gcd(&cb);
    let a = a.div_integer(&ca);
    let b = b.div_integer(&cb);
    let (ma, mb) = (a.var_mask(), b.var_mask());
    // a common factor must involve a variable both arguments share
    let Some(v) = (0..NPARAMS)
        .find(|&i| ma[i] && mb[i])
        .map(Parameter::from_index)
    else {
        return Some(Poly::constant(ic));
    };
    let mut xi = BigInt::from(2) * a.max_norm().min(b.max_norm()) + BigInt::from(29);
    for _ in 0..HEURISTIC_TRIES {
        let ga = a.eval_var(v, &xi);
        let gb = b.eval_var(v, &xi);
        if !ga.is_zero() && !gb.is_zero() {
            let g = balanced_digits(&gcd(&ga, &gb), v, &xi);
            if !g.is_zero() {
                let g = g.div_integer(&g.integer_content()).sign_normalized();
                if a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
                    return Some(g.scale(&ic));
                }
            }
        }
        xi = xi * BigInt::from(73794) / BigInt::from(27011);
    }
    None
}

/// Rebuilds `sum g_i v^i` from `gamma = sum g_i xi^i` with every integer
/// coefficient of `g_i` in `(-xi/2, xi/2]`.
fn balanced_digits(gamma: &Poly, v: Parameter, xi: &BigInt) -> Poly {
    let half = xi / BigInt::from(2);
    let mut rest = gamma.clone();
    let mut out = Vec::new();
    let mut i: u16 = 0;
    while !rest.is_zero() {
        let digit = Poly::from_terms(rest.terms.iter().map(|(e, c)| {
            let mut r = c.mod_floor(xi);
            if r > half {
                r -= xi;
            }
            (*e, r)
        }));
        for (e, c) in &digit.terms {
            let mut e = *e;
            e[v.index()] = i;
            out.push((e, c.clone()));
        }
        rest = rest.sub(&digit).div_integer(xi);
        i += 1;
    }
    Poly::from_terms(out)
}

/// Recursive content / primitive-part gcd for arguments with at least two
/// terms each.
fn gcd_prs(a: &Poly, b: &Poly) -> Poly {
    let ma = a.var_mask();
    let mb = b.var_mask();

    // A variable present in only one argument cannot divide the gcd:
    // fold that argument's coefficients with respect to it into the other.
    for i in 0..NPARAMS {
        if ma[i] != mb[i] {
            let v = Parameter::from_index(i);
            let (with, without) = if ma[i] { (a, b) } else { (b, a) };
            let mut g = without.clone();
            for c in with.to_univariate(v) {
                if c.is_zero() {
                    continue;
                }
                g = gcd(&g, &c);
                if g.is_one() {
                    break;
                }
            }
            return g.sign_normalized();
        }
    }

    // pick the shared variable of smallest max degree to keep the PRS short
    let v = (0..NPARAMS)
        .filter(|&i| ma[i])
        .map(Parameter::from_index)
        .min_by_key(|&v| a.degree_in(v).max(b.degree_in(v)))
        .expect("non-monomial polynomials share a variable");

    let ua = a.to_univariate(v);
    let ub = b.to_univariate(v);
    let ca = content(&ua);
    let cb = content(&ub);
    let c = gcd(&ca, &cb);
    let mut r0 = primitive_part(&ua, &ca);
    let mut r1 = primitive_part(&ub, &cb);
    if r0.len() < r1.len() {
        std::mem::swap(&mut r0, &mut r1);
    }
    let g = loop {
        if r1.len() == 1 {
            break vec![Poly::one()];
        }
        let r = pseudo_remainder(&r0, &r1);
        if r.is_empty() {
            break r1;
        }
        let cr = content(&r);
        r0 = r1;
        r1 = primitive_part(&r, &cr);
    };
    Poly::from_univariate(&g, v).mul(&c).sign_normalized()
}

fn content(coeffs: &[Poly]) -> Poly {
    let mut g = Poly::zero();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive_part(coeffs: &[Poly], content: &Poly) -> Vec<Poly> {
    coeffs
        .iter()
        .map(|c| {
            c.div_exact(content)
                .expect("content divides every coefficient")
        })
        .collect()
}

/// Pseudo-remainder of univariate polynomials with polynomial coefficients;
/// an empty vector stands for zero.
fn pseudo_remainder(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<Poly> = a.to_vec();
    trim(&mut r);
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for (j, bj) in b.iter().enumerate() {
            let idx = j + dr - db;
            r[idx] = r[idx].sub(&lr.mul(bj));
        }
        trim(&mut r);
    }
    r
}

fn trim(r: &mut Vec<Poly>) {
    while r.last().is_some_and(|c| c.is_zero()) {
        r.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(p: Parameter) -> Poly {
        Poly::var(p)
    }

    fn c(n: i64) -> Poly {
        Poly::constant(BigInt::from(n))
    }

    #[test]
    fn arithmetic_basics() {
        let p = v(Parameter::P);
        let q = v(Parameter::Q);
        let s = p.add(&q);
        let d = p.sub(&q);
        let prod = s.mul(&d);
        assert_eq!(prod, p.mul(&p).sub(&q.mul(&q)));
        assert_eq!(prod.div_exact(&s).unwrap(), d);
        assert!(p.add(&c(1)).div_exact(&q).is_none());
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let p = v(Parameter::P);
        let q = v(Parameter::Q);
        let qp = v(Parameter::QP);
        let f = p.mul(&qp).sub(&c(1)); // p q' - 1
        let a = f.mul(&q.add(&c(2))).mul(&p);
        let b = f.mul(&p.sub(&q)).mul(&c(6));
        assert_eq!(gcd(&a, &b), f);
        let unrelated = q.mul(&q).add(&p);
        assert!(gcd(&a, &unrelated).is_one());
    }

    #[test]
    fn gcd_of_integer_multiples() {
        let p = v(Parameter::P);
        let a = p.scale(&BigInt::from(4)).add(&c(6));
        let b = p.scale(&BigInt::from(6)).add(&c(9));
        assert_eq!(gcd(&a, &b), p.scale(&BigInt::from(2)).add(&c(3)));
    }

    #[test]
    fn gcd_is_sign_normalized() {
        let p = v(Parameter::P);
        let q = v(Parameter::Q);
        let f = q.sub(&p); // leading term p has coefficient -1
        let g = gcd(&f.mul(&p.add(&c(1))), &f.mul(&q.add(&c(3))));
        assert_eq!(g, p.sub(&q));
    }

    #[test]
    fn heuristic_agrees_with_remainder_sequence() {
        use rand::{Rng, SeedableRng};
        let vars = [
            Parameter::P,
            Parameter::Q,
            Parameter::QP,
            Parameter::QBAR,
            Parameter::K,
        ];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let random = |rng: &mut rand_chacha::ChaCha8Rng| {
            Poly::from_terms((0..rng.gen_range(1..=3)).map(|_| {
                let mut e = ZERO_EXPS;
                for _ in 0..rng.gen_range(0..=2) {
                    e[vars[rng.gen_range(0..vars.len())].index()] += 1;
                }
                (
                    e,
                    BigInt::from(rng.gen_range(1..=5)) * if rng.gen_bool(0.5) { 1 } else { -1 },
                )
            }))
        };
        for _ in 0..100 {
            let f = random(&mut rng);
            let a = f.mul(&random(&mut rng)).mul(&random(&mut rng));
            let b = f.mul(&random(&mut rng));
            if a.terms.len() < 2 || b.terms.len() < 2 {
                continue;
            }
            let g = gcd(&a, &b);
            assert_eq!(g, gcd_prs(&a, &b));
            assert!(a.div_exact(&g).is_some() && b.div_exact(&g).is_some());
        }
    }
}
