//! The concrete relation sets, cross-commutation tables, coactions and the
//! exterior differential that every check is built from.

mod coaction;
mod exterior;
mod qij;
mod relations;

use thiserror::Error;

use crate::coefficients::{par, Coefficient, CoefficientError, Parameter};
use crate::freealg::{FreeAlgError, Generator, RewriteSystem};

pub use coaction::{apply_coaction, extract_constraints, Coaction, CoactionKind, Constraint};
pub use exterior::{exterior_d, exterior_d_free};
pub use qij::{
    case1_k, qij_case1, qij_case2, qij_case2_pre, qij_commuting, qij_general, qij_manin,
    qij_one_param, qij_symbolic, Provenance, QijTable, TableConstraint, TableContext,
};
pub use relations::{cross_rules, diffcalc_rules, glpq_rules, glq_rules, plane_rules};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresetError {
    #[error("q{0}{1} is zero")]
    ZeroEntry(usize, usize),
    #[error("table {table} violates: {}", failed.join("; "))]
    ConstraintViolation { table: String, failed: Vec<String> },
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error(transparent)]
    FreeAlg(#[from] FreeAlgError),
    #[error(transparent)]
    Coefficient(#[from] CoefficientError),
}

/// Group relations, cross relations, the plane and optionally a
/// differential calculus, merged into one system.
pub fn combined_system(
    name: &str,
    group: &RewriteSystem,
    table: &QijTable,
    plane_q: &Coefficient,
    calculus: Option<&RewriteSystem>,
) -> Result<RewriteSystem, PresetError> {
    let cross = cross_rules(table)?;
    let plane = plane_rules(plane_q)?;
    let mut parts = vec![group, &cross, &plane];
    if let Some(c) = calculus {
        parts.push(c);
    }
    Ok(RewriteSystem::union(name, &parts)?)
}

/// A rewrite system shipped with the crate and the letters it is meant for.
#[derive(Clone, Debug)]
pub struct ShippedSystem {
    pub name: &'static str,
    pub system: RewriteSystem,
    pub alphabet: Vec<Generator>,
}

/// Every system the checks reduce under, with symbolic parameters.
pub fn shipped_systems() -> Result<Vec<ShippedSystem>, PresetError> {
    let (p, qp, q, qbar, k) = (
        par(Parameter::P),
        par(Parameter::QP),
        par(Parameter::Q),
        par(Parameter::QBAR),
        par(Parameter::K),
    );
    use Generator::*;
    let group = vec![A, B, C, D];
    let plane = vec![X, Y];
    let group_plane = vec![A, B, C, D, X, Y];
    let all = Generator::ALL.to_vec();
    let calc: Vec<Generator> = Generator::FORMS.to_vec();

    let glpq = glpq_rules(&p, &qp)?;
    let glpq_1p = glpq_rules(&p, &q)?;
    let glq = glq_rules(&q)?;
    let calc2 = diffcalc_rules(&p, &q, false)?;
    let calc1 = diffcalc_rules(&p, &q, true)?;
    let calc_plane2 = RewriteSystem::union("diffcalc:2p+plane", &[&calc2, &plane_rules(&q)?])?;
    let calc_plane1 = RewriteSystem::union("diffcalc:1p+plane", &[&calc1, &plane_rules(&q)?])?;

    let sys = |name, system, alphabet| ShippedSystem {
        name,
        system,
        alphabet,
    };
    Ok(vec![
        sys("glq", glq.clone(), group.clone()),
        sys("glpq", glpq.clone(), group),
        sys("plane", plane_rules(&q)?, plane),
        sys("diffcalc:1p", calc_plane1, calc.clone()),
        sys("diffcalc:2p", calc_plane2, calc),
        sys(
            "glpq+qij:general+plane",
            combined_system(
                "glpq+qij:general+plane",
                &glpq,
                &qij_general(&q, &qbar, &p, &qp, &k)?,
                &q,
                None,
            )?,
            group_plane.clone(),
        ),
        sys(
            "glpq+qij:case1+calculus",
            combined_system(
                "glpq+qij:case1+calculus",
                &glpq,
                &qij_case1(&q, &p, &qp)?,
                &q,
                Some(&calc2),
            )?,
            all.clone(),
        ),
        sys(
            "glpq+qij:one-param+calculus",
            combined_system(
                "glpq+qij:one-param+calculus",
                &glpq_1p,
                &qij_one_param(&q, &p)?,
                &q,
                Some(&calc2),
            )?,
            all.clone(),
        ),
        sys(
            "glpq+qij:case2+plane",
            combined_system(
                "glpq+qij:case2+plane",
                &glpq_rules(&qp, &qp)?,
                &qij_case2(&q, &qbar, &qp)?,
                &q,
                None,
            )?,
            group_plane,
        ),
        sys(
            "glq+qij:manin+calculus",
            combined_system(
                "glq+qij:manin+calculus",
                &glq,
                &qij_manin(&q)?,
                &q,
                Some(&calc1),
            )?,
            all,
        ),
    ])
}

/// Solves `c(v) = 0` for `v` when the numerator of `c` is affine in `v`.
/// Returns `None` otherwise, or when the linear coefficient vanishes.
pub fn solve_linear(c: &Coefficient, v: Parameter) -> Option<Coefficient> {
    let num = Coefficient::from_poly(c.numerator().clone());
    if num.numerator().degree_in(v) > 1 {
        return None;
    }
    let a = num.subs(v, &Coefficient::zero()).ok()?;
    let b = num.subs(v, &Coefficient::one()).ok()? - &a;
    if b.is_zero() {
        return None;
    }
    Some(-(a.div(&b).ok()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::int;
    use crate::freealg::check_critical_pairs;

    #[test]
    fn linear_solve() {
        let k = par(Parameter::K);
        let p = par(Parameter::P);
        let c = (&p * &k - int(1)).div(&(p.clone() + int(1))).unwrap();
        assert_eq!(solve_linear(&c, Parameter::K).unwrap(), p.inv().unwrap());
        assert!(solve_linear(&(&k * &k), Parameter::K).is_none());
    }

    #[test]
    fn group_and_calculus_systems_are_locally_confluent() {
        for s in shipped_systems().unwrap() {
            if ["glq", "glpq", "plane", "diffcalc:1p", "diffcalc:2p"].contains(&s.name) {
                assert!(
                    check_critical_pairs(&s.system, &s.alphabet).is_empty(),
                    "{}",
                    s.name
                );
            }
        }
    }
}
