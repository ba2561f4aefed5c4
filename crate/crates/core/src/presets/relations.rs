//! Relation sets as rewrite systems. Every relation `g h = ...` with `g`
//! ranked above `h` becomes the rule `g h -> ...`.

use crate::coefficients::{int, Coefficient};
use crate::freealg::{Generator, NCPoly, RewriteSystem, Word};

use super::qij::QijTable;
use super::PresetError;

use Generator::*;

fn t(c: Coefficient, letters: &[Generator]) -> NCPoly {
    NCPoly::term(c, Word::new(letters.to_vec()))
}

fn inv(c: &Coefficient) -> Result<Coefficient, PresetError> {
    Ok(c.inv()?)
}

/// One-parameter `GL_q(2)`:
/// `AB = qBA, AC = qCA, BD = qDB, CD = qDC, BC = CB, AD - DA = (q - 1/q) BC`.
pub fn glq_rules(q: &Coefficient) -> Result<RewriteSystem, PresetError> {
    let qi = inv(q)?;
    Ok(RewriteSystem::new("glq")
        .with_rule(B, A, t(qi.clone(), &[A, B]))?
        .with_rule(C, A, t(qi.clone(), &[A, C]))?
        .with_rule(D, B, t(qi.clone(), &[B, D]))?
        .with_rule(D, C, t(qi.clone(), &[C, D]))?
        .with_rule(C, B, t(int(1), &[B, C]))?
        .with_rule(D, A, t(int(1), &[A, D]).sub(&t(q - &qi, &[B, C])))?)
}

/// Two-parameter `GL_{p,q'}(2)`:
/// `AB = pBA, CD = pDC, AC = q'CA, BD = q'DB, pBC = q'CB,
/// AD - DA = (p - 1/q') BC`.
pub fn glpq_rules(p: &Coefficient, qp: &Coefficient) -> Result<RewriteSystem, PresetError> {
    let pi = inv(p)?;
    let qpi = inv(qp)?;
    Ok(RewriteSystem::new("glpq")
        .with_rule(B, A, t(pi.clone(), &[A, B]))?
        .with_rule(C, A, t(qpi.clone(), &[A, C]))?
        .with_rule(D, B, t(qpi.clone(), &[B, D]))?
        .with_rule(D, C, t(pi, &[C, D]))?
        .with_rule(C, B, t(p * &qpi, &[B, C]))?
        .with_rule(D, A, t(int(1), &[A, D]).sub(&t(p - &qpi, &[B, C])))?)
}

/// Quantum plane `xy = q yx`.
pub fn plane_rules(q: &Coefficient) -> Result<RewriteSystem, PresetError> {
    Ok(RewriteSystem::new("plane").with_rule(Y, X, t(inv(q)?, &[X, Y]))?)
}

/// Differential calculus on the plane: the two-parameter relations
///
/// ```text
/// dx dy = -1/p dy dx     x dx = pq dx x     x dy = q dy x + (pq - 1) dx y
/// y dx  = p dx y         y dy = pq dy y
/// ```
///
/// or, with `one_param`, the one-parameter relations obtained by writing
/// them out with `q` alone. Both include `dx dx = dy dy = 0`.
pub fn diffcalc_rules(
    p: &Coefficient,
    q: &Coefficient,
    one_param: bool,
) -> Result<RewriteSystem, PresetError> {
    let sys = if one_param {
        let q2 = q * q;
        RewriteSystem::new("diffcalc:1p")
            .with_rule(Dy, Dx, t(-q, &[Dx, Dy]))?
            .with_rule(X, Dx, t(q2.clone(), &[Dx, X]))?
            .with_rule(
                X,
                Dy,
                t(q.clone(), &[Dy, X]).add(&t(&q2 - &int(1), &[Dx, Y])),
            )?
            .with_rule(Y, Dx, t(q.clone(), &[Dx, Y]))?
            .with_rule(Y, Dy, t(q2, &[Dy, Y]))?
    } else {
        let pq = p * q;
        RewriteSystem::new("diffcalc:2p")
            .with_rule(Dy, Dx, t(-p, &[Dx, Dy]))?
            .with_rule(X, Dx, t(pq.clone(), &[Dx, X]))?
            .with_rule(
                X,
                Dy,
                t(q.clone(), &[Dy, X]).add(&t(&pq - &int(1), &[Dx, Y])),
            )?
            .with_rule(Y, Dx, t(p.clone(), &[Dx, Y]))?
            .with_rule(Y, Dy, t(pq, &[Dy, Y]))?
    };
    Ok(sys
        .with_rule(Dx, Dx, NCPoly::zero())?
        .with_rule(Dy, Dy, NCPoly::zero())?)
}

/// Cross-commutation of coordinates and differentials with the group
/// generators: `x G = q_1j G x`, `y G = q_2j G y`, and the same table for
/// `dx`, `dy`, where `j` indexes `G` in `A, B, C, D`.
pub fn cross_rules(table: &QijTable) -> Result<RewriteSystem, PresetError> {
    let mut sys = RewriteSystem::new(format!("cross:{}", table.provenance().label()));
    for (row, movers) in [(1, [X, Dx]), (2, [Y, Dy])] {
        for (j, g) in Generator::GROUP.into_iter().enumerate() {
            let c = table.get(row, j + 1).clone();
            for m in movers {
                sys = sys.with_rule(m, g, t(c.clone(), &[g, m]))?;
            }
        }
    }
    Ok(sys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{par, Parameter};
    use std::collections::BTreeMap;

    fn p() -> Coefficient {
        par(Parameter::P)
    }
    fn q() -> Coefficient {
        par(Parameter::Q)
    }
    fn qp() -> Coefficient {
        par(Parameter::QP)
    }
    fn w(s: &str) -> NCPoly {
        NCPoly::word(Word::parse(s).unwrap())
    }

    #[test]
    fn glq_rule_examples() {
        let sys = glq_rules(&q()).unwrap();
        assert_eq!(
            sys.rule(B, A).unwrap(),
            &w("A B").scale(&q().inv().unwrap())
        );
        assert_eq!(sys.rule(C, B).unwrap(), &w("B C"));
        let expected = w("A D").sub(&w("B C").scale(&(q() - q().inv().unwrap())));
        assert_eq!(sys.rule(D, A).unwrap(), &expected);
    }

    #[test]
    fn glpq_rule_examples() {
        let sys = glpq_rules(&p(), &qp()).unwrap();
        assert_eq!(
            sys.rule(C, B).unwrap(),
            &w("B C").scale(&(p() * qp().inv().unwrap()))
        );
        assert_eq!(
            sys.rule(D, B).unwrap(),
            &w("B D").scale(&qp().inv().unwrap())
        );
        // DA reduces to AD - (p - 1/q') BC
        let nf = sys.normal_order(&w("D A")).unwrap();
        assert_eq!(
            nf,
            w("A D").sub(&w("B C").scale(&(p() - qp().inv().unwrap())))
        );
        let nf = sys.normal_order(&w("B A")).unwrap();
        assert_eq!(nf, w("A B").scale(&p().inv().unwrap()));
    }

    #[test]
    fn glpq_limit_is_glq_rule_for_rule() {
        let mut b = BTreeMap::new();
        b.insert(Parameter::P, q());
        b.insert(Parameter::QP, q());
        let limit = glpq_rules(&p(), &qp()).unwrap().substitute(&b).unwrap();
        let glq = glq_rules(&q()).unwrap();
        let a: Vec<_> = limit.rules().collect();
        let c: Vec<_> = glq.rules().collect();
        assert_eq!(a, c);
    }

    #[test]
    fn plane_and_calculus_examples() {
        let plane = plane_rules(&q()).unwrap();
        assert_eq!(
            plane.normal_order(&w("y x")).unwrap(),
            w("x y").scale(&q().inv().unwrap())
        );

        let calc = diffcalc_rules(&p(), &q(), false).unwrap();
        assert!(calc.normal_order(&w("dx dx")).unwrap().is_zero());
        assert_eq!(
            calc.normal_order(&w("dy dx")).unwrap(),
            w("dx dy").scale(&-p())
        );
        assert_eq!(
            calc.rule(X, Dy).unwrap(),
            &w("dy x")
                .scale(&q())
                .add(&w("dx y").scale(&(p() * q() - int(1))))
        );

        let one = diffcalc_rules(&p(), &q(), true).unwrap();
        assert_eq!(one.rule(X, Dx).unwrap(), &w("dx x").scale(&(q() * q())));
        let mut b = BTreeMap::new();
        b.insert(Parameter::P, q());
        let at_p_eq_q = calc.substitute(&b).unwrap();
        let a: Vec<_> = at_p_eq_q.rules().collect();
        let c: Vec<_> = one.rules().collect();
        assert_eq!(a, c);
    }
}
