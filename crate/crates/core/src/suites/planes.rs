//! Quantum planes, their cross-commutation tables and the differential
//! calculus.

use crate::coefficients::{int, par, Coefficient, Parameter};
use crate::freealg::{Generator, NCPoly, RewriteSystem, Strategy, Word};
use crate::presets::{
    case1_k as case1_k_value, combined_system, diffcalc_rules, exterior_d, exterior_d_free,
    extract_constraints, glpq_rules, plane_rules, qij_case1, qij_case2, qij_case2_pre,
    qij_commuting, qij_general, qij_manin, qij_one_param, qij_symbolic, solve_linear, Coaction,
    PresetError, QijTable,
};

use super::random::random_form;
use super::{e, Job, Outcome, Symbols};

use Generator::*;

const FORM_SAMPLES: usize = 200;

fn w(s: &str) -> Word {
    Word::parse(s).expect("valid word")
}

fn poly(terms: &[(Coefficient, &[Generator])]) -> NCPoly {
    let mut out = NCPoly::zero();
    for (c, letters) in terms {
        out = out.add(&NCPoly::letters(letters).scale(c));
    }
    out
}

/// `x y - c y x`.
fn plane_relation(c: &Coefficient) -> NCPoly {
    poly(&[(int(1), &[X, Y]), (-c, &[Y, X])])
}

/// The solved tables at the configured parameters.
fn tables(s: &Symbols) -> Result<Vec<QijTable>, PresetError> {
    Ok(vec![
        qij_general(&s.q, &s.qbar, &s.p, &s.qp, &s.k)?,
        qij_case1(&s.q, &s.p, &s.qp)?,
        qij_one_param(&s.q, &s.p)?,
        qij_case2_pre(&s.q, &s.qbar, &s.p, &s.qp)?,
        qij_case2(&s.q, &s.qbar, &s.qp)?,
        qij_manin(&s.q)?,
    ])
}

/// Group relations at the table's own `p, q'`, the table and the plane.
fn plane_system(
    table: &QijTable,
    calculus: Option<&RewriteSystem>,
) -> Result<RewriteSystem, PresetError> {
    let c = table.context();
    combined_system(
        &format!("glpq+qij:{}", table.provenance()),
        &glpq_rules(&c.p, &c.qp)?,
        table,
        &c.q,
        calculus,
    )
}

/// Nonzero coefficients of `residual`, each solved for `v`.
fn solve_all(residual: &NCPoly, v: Parameter) -> Vec<Option<Coefficient>> {
    residual.terms().map(|(_, c)| solve_linear(c, v)).collect()
}

pub(super) fn qij_constraints(s: &Symbols) -> Vec<Job> {
    let (s1, s2, s3, s4) = (s.clone(), s.clone(), s.clone(), s.clone());
    vec![
        Job::new("tables", move |_| {
            let mut out = Vec::new();
            for t in tables(&s1).map_err(e)? {
                let failed: Vec<String> = t
                    .constraints()
                    .map_err(e)?
                    .into_iter()
                    .filter(|c| !c.holds())
                    .map(|c| format!("{}: {}", c.name, c.residual))
                    .collect();
                out.push(Outcome::check(
                    format!("{} table satisfies all six constraints", t.provenance()),
                    failed.is_empty(),
                    || failed.join("; "),
                ));
            }
            let commuting = qij_commuting(&s1.p, &s1.qp, &s1.q).map_err(e)?;
            let violated = commuting
                .constraints()
                .map_err(e)?
                .iter()
                .any(|c| !c.holds());
            let degenerate = s1.p == s1.q && s1.qp == s1.q;
            out.push(Outcome::check(
                "all-ones table violates the constraints unless p = q' = q",
                violated != degenerate,
                || format!("violated: {violated}, p = q' = q: {degenerate}"),
            ));
            Ok(out)
        }),
        Job::new("symbolic extraction", move |_| {
            let table = qij_symbolic();
            let mut out = Vec::new();
            for c in [Coaction::t(), Coaction::transpose()] {
                let cs = extract_constraints(&c, &table, &s2.q, &s2.qbar).map_err(e)?;
                let coords: Vec<String> = cs.iter().map(|x| x.coordinates.to_string()).collect();
                out.push(Outcome::check(
                    format!("{c}: one constraint each on x x, x y, y y"),
                    coords == ["x x", "x y", "y y"],
                    || coords.join(", "),
                ));
                if let Some(xy) = cs.iter().find(|x| x.coordinates == w("x y")) {
                    out.push(Outcome::check(
                        format!("{c}: the x y constraint has four terms"),
                        xy.relation.len() == 4,
                        || xy.relation.to_string(),
                    ));
                }
            }
            let cs = extract_constraints(&Coaction::t(), &table, &s2.q, &s2.qbar).map_err(e)?;
            let xx = cs.iter().find(|x| x.coordinates == w("x x"));
            let ratio = xx.and_then(|x| x.ratio(&w("A C"), &w("C A")));
            let want = (&s2.qbar * &par(Parameter::cross(1, 1)))
                .div(&par(Parameter::cross(1, 3)))
                .map_err(e)?;
            out.push(Outcome::check(
                "T: x x constraint reads AC = (qbar q11 / q13) CA",
                ratio.as_ref() == Some(&want),
                || format!("{ratio:?}"),
            ));
            Ok(out)
        }),
        Job::new("general table", move |_| {
            let table = qij_general(&s3.q, &s3.qbar, &s3.p, &s3.qp, &s3.k).map_err(e)?;
            let group = glpq_rules(&s3.p, &s3.qp).map_err(e)?;
            let bind = table.bindings();
            let mut out = Vec::new();
            for c in [Coaction::t(), Coaction::transpose()] {
                for x in extract_constraints(&c, &qij_symbolic(), &s3.q, &s3.qbar).map_err(e)? {
                    let rel = x.relation.substitute(&bind).map_err(e)?;
                    let r = group.normal_order(&rel).map_err(e)?;
                    out.push(Outcome::zero(
                        format!(
                            "{c}: [{}] constraint holds in GL_{{p,q'}} with the general table",
                            x.coordinates
                        ),
                        &r,
                    ));
                }
            }
            Ok(out)
        }),
        Job::new("transpose target", move |_| {
            // the transposed image plane is a priori a different plane
            let qbb = par(Parameter::QBBAR);
            let table = qij_general(&s4.q, &s4.qbar, &s4.p, &s4.qp, &s4.k).map_err(e)?;
            let group = glpq_rules(&s4.p, &s4.qp).map_err(e)?;
            let mut solutions = Vec::new();
            for x in extract_constraints(&Coaction::transpose(), &qij_symbolic(), &s4.q, &qbb)
                .map_err(e)?
            {
                let rel = x.relation.substitute(&table.bindings()).map_err(e)?;
                solutions.extend(solve_all(
                    &group.normal_order(&rel).map_err(e)?,
                    Parameter::QBBAR,
                ));
            }
            let ok =
                !solutions.is_empty() && solutions.iter().all(|x| x.as_ref() == Some(&s4.qbar));
            Ok(vec![Outcome::check(
                "T^t: the image plane parameter is forced to qbar",
                ok,
                || format!("{solutions:?}"),
            )])
        }),
    ]
}

pub(super) fn coaction_invariance(s: &Symbols) -> Vec<Job> {
    let s1 = s.clone();
    let s2 = s.clone();
    vec![
        Job::new("tables", move |_| {
            let mut out = Vec::new();
            for t in tables(&s1).map_err(e)? {
                let sys = plane_system(&t, None).map_err(e)?;
                let c = t.context();
                for co in [Coaction::t(), Coaction::transpose()] {
                    let lhs = co.substitute(&plane_relation(&c.qbar));
                    let r = sys.normal_order(&lhs).map_err(e)?;
                    out.push(Outcome::zero(
                        format!("{co}, {} table: x'y' - qbar y'x' = 0", t.provenance()),
                        &r,
                    ));
                }
            }
            Ok(out)
        }),
        Job::new("strategies", move |rng| {
            let t = qij_case2(&s2.q, &s2.qbar, &s2.qp).map_err(e)?;
            let sys = plane_system(&t, None).map_err(e)?;
            let lhs =
                Coaction::t().substitute(&plane_relation(&s2.qbar).mul_free(&NCPoly::letter(X)));
            let a = sys.normal_order_with(&lhs, Strategy::Leftmost).map_err(e)?;
            let b = sys
                .normal_order_with(&lhs, Strategy::Rightmost)
                .map_err(e)?;
            let c = sys
                .normal_order_with(&lhs, Strategy::Random(rng))
                .map_err(e)?;
            Ok(vec![Outcome::check(
                "case2 table: T image of (xy - qbar yx) x reduces the same under every strategy",
                a == b && b == c,
                || format!("leftmost {a}; rightmost {b}; random {c}"),
            )])
        }),
    ]
}

pub(super) fn case1_k(s: &Symbols) -> Vec<Job> {
    let s1 = s.clone();
    let s2 = s.clone();
    vec![
        Job::new("derive", move |_| {
            let s = &s1;
            let k = par(Parameter::K);
            let table = qij_general(&s.q, &s.q, &s.p, &s.qp, &k).map_err(e)?;
            let calc = diffcalc_rules(&s.p, &s.q, false).map_err(e)?;
            let sys = combined_system(
                "case1",
                &glpq_rules(&s.p, &s.qp).map_err(e)?,
                &table,
                &s.q,
                Some(&calc),
            )
            .map_err(e)?;
            let rel = poly(&[(int(1), &[Dx, Dy]), (s.p.inv().map_err(e)?, &[Dy, Dx])]);
            let r = Coaction::t().apply(&rel, &sys).map_err(e)?;
            let solutions = solve_all(&r, Parameter::K);
            let want = case1_k_value(&s.q, &s.p, &s.qp).map_err(e)?;
            let mut out = vec![Outcome::check(
                "T(dx dy + p^{-1} dy dx) is linear in k",
                !solutions.is_empty() && solutions.iter().all(Option::is_some),
                || r.to_string(),
            )];
            let distinct: Vec<&Coefficient> = {
                let mut v: Vec<&Coefficient> = solutions.iter().flatten().collect();
                v.dedup();
                v
            };
            out.push(Outcome::check(
                "every coefficient gives the same k",
                distinct.len() == 1,
                || {
                    distinct
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join("; ")
                },
            ));
            out.push(Outcome::check(
                "k = q'(qp - 1) / (p(q'p - 1))",
                distinct.first() == Some(&&want),
                || {
                    distinct
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join("; ")
                },
            ));
            Ok(out)
        }),
        Job::new("specializations", move |_| {
            // specialize symbolically, then bind: the formulas are 0/0 at q = 1
            let (p, qp, q) = (par(Parameter::P), par(Parameter::QP), par(Parameter::Q));
            let bind = |t: QijTable| t.substitute(&s2.bindings);
            let k = case1_k_value(&q, &p, &qp).map_err(e)?;
            let case1 = bind(qij_case1(&q, &p, &qp).map_err(e)?).map_err(e)?;
            let general = bind(qij_general(&q, &q, &p, &qp, &k).map_err(e)?).map_err(e)?;
            let mut out = vec![Outcome::check(
                "Case I table is the general table at qbar = q and this k",
                case1.same_entries(&general),
                || format!("{case1:?} vs {general:?}"),
            )];
            let at_q = bind(qij_case1(&q, &p, &q).map_err(e)?).map_err(e)?;
            let one = bind(qij_one_param(&q, &p).map_err(e)?).map_err(e)?;
            out.push(Outcome::check(
                "at q' = q it is the one-parameter table",
                at_q.same_entries(&one),
                || format!("{at_q:?}"),
            ));
            let ones = bind(qij_case1(&q, &q, &q).map_err(e)?).map_err(e)?;
            let bad: Vec<String> = ones
                .entries()
                .filter(|(_, c)| !c.is_one())
                .map(|((i, j), c)| format!("q{i}{j} = {c}"))
                .collect();
            out.push(Outcome::check(
                "at p = q' = q every entry is 1",
                bad.is_empty(),
                || bad.join("; "),
            ));
            Ok(out)
        }),
    ]
}

pub(super) fn diffcalc_consistency(s: &Symbols) -> Vec<Job> {
    let s1 = s.clone();
    let s2 = s.clone();
    let s3 = s.clone();
    vec![
        Job::new("one-parameter limit", move |_| {
            let a = diffcalc_rules(&s1.q, &s1.q, false).map_err(e)?;
            let b = diffcalc_rules(&s1.q, &s1.q, true).map_err(e)?;
            let mut out = Vec::new();
            for (x, y) in a.rules().zip(b.rules()) {
                out.push(Outcome::check(
                    format!("at p = q rule {} {} agrees", x.lhs.0, x.lhs.1),
                    x == y,
                    || format!("{x} vs {y}"),
                ));
            }
            out.push(Outcome::check("same rule set", a.len() == b.len(), || {
                format!("{} vs {}", a.len(), b.len())
            }));
            Ok(out)
        }),
        Job::new("exterior derivative", move |_| {
            let sys = RewriteSystem::union(
                "calc",
                &[
                    &diffcalc_rules(&s2.p, &s2.q, false).map_err(e)?,
                    &plane_rules(&s2.q).map_err(e)?,
                ],
            )
            .map_err(e)?;
            let mut out = vec![
                Outcome::zero(
                    "d(xy - q yx) = 0",
                    &exterior_d(&plane_relation(&s2.q), &sys).map_err(e)?,
                ),
                Outcome::zero(
                    "d(d(xy)) = 0",
                    &exterior_d(
                        &exterior_d_free(&NCPoly::letters(&[X, Y])).map_err(e)?,
                        &sys,
                    )
                    .map_err(e)?,
                ),
            ];
            let dydx = sys.normal_order(&NCPoly::letters(&[Dy, Dx])).map_err(e)?;
            out.push(Outcome::zero(
                "dy dx = -p dx dy",
                &dydx.add(&NCPoly::letters(&[Dx, Dy]).scale(&s2.p)),
            ));
            out.push(Outcome::zero(
                "dx dx = 0",
                &sys.normal_order(&NCPoly::letters(&[Dx, Dx])).map_err(e)?,
            ));
            Ok(out)
        }),
        Job::new("d squared", move |rng| {
            let sys = RewriteSystem::union(
                "calc",
                &[
                    &diffcalc_rules(&s3.p, &s3.q, false).map_err(e)?,
                    &plane_rules(&s3.q).map_err(e)?,
                ],
            )
            .map_err(e)?;
            for _ in 0..FORM_SAMPLES {
                let f = random_form(rng, 3, 3);
                let dd = exterior_d_free(&exterior_d_free(&f).map_err(e)?).map_err(e)?;
                let r = sys.normal_order(&dd).map_err(e)?;
                if !r.is_zero() {
                    return Ok(vec![Outcome::fail("d(d f) = 0", format!("f = {f}: {r}"))]);
                }
            }
            Ok(vec![Outcome::pass(format!(
                "d(d f) = 0 ({FORM_SAMPLES} random forms)"
            ))])
        }),
    ]
}

/// The five two-parameter calculus relations as vanishing polynomials.
fn calculus_relations(
    p: &Coefficient,
    q: &Coefficient,
) -> Result<Vec<(&'static str, NCPoly)>, String> {
    let pq = p * q;
    Ok(vec![
        (
            "dx dy + p^{-1} dy dx",
            poly(&[(int(1), &[Dx, Dy]), (p.inv().map_err(e)?, &[Dy, Dx])]),
        ),
        (
            "x dx - pq dx x",
            poly(&[(int(1), &[X, Dx]), (-&pq, &[Dx, X])]),
        ),
        (
            "x dy - q dy x - (pq - 1) dx y",
            poly(&[(int(1), &[X, Dy]), (-q, &[Dy, X]), (int(1) - &pq, &[Dx, Y])]),
        ),
        ("y dx - p dx y", poly(&[(int(1), &[Y, Dx]), (-p, &[Dx, Y])])),
        (
            "y dy - pq dy y",
            poly(&[(int(1), &[Y, Dy]), (-&pq, &[Dy, Y])]),
        ),
    ])
}

fn calculus_system(s: &Symbols, table: &QijTable) -> Result<RewriteSystem, String> {
    combined_system(
        "glpq+calculus",
        &glpq_rules(&s.p, &s.q).map_err(e)?,
        table,
        &s.q,
        Some(&diffcalc_rules(&s.p, &s.q, false).map_err(e)?),
    )
    .map_err(e)
}

pub(super) fn diffcalc_invariance(s: &Symbols) -> Vec<Job> {
    [Coaction::t(), Coaction::transpose()]
        .into_iter()
        .map(|co| {
            let s = s.clone();
            Job::new(co.label(), move |_| {
                let table = qij_one_param(&s.q, &s.p).map_err(e)?;
                let sys = calculus_system(&s, &table)?;
                let mut out = Vec::new();
                for (name, rel) in calculus_relations(&s.p, &s.q)? {
                    let r = co.apply(&rel, &sys).map_err(e)?;
                    out.push(Outcome::zero(format!("{co}: {name} is preserved"), &r));
                }
                for g in [Dx, Dy] {
                    let r = co.apply(&NCPoly::letters(&[g, g]), &sys).map_err(e)?;
                    out.push(Outcome::zero(format!("{co}: ({g}')^2 = 0"), &r));
                }
                Ok(out)
            })
        })
        .collect()
}

pub(super) fn negative_control(s: &Symbols) -> Vec<Job> {
    let s = s.clone();
    vec![Job::new("all-ones table", move |_| {
        let table = qij_commuting(&s.p, &s.q, &s.q).map_err(e)?;
        let sys = calculus_system(&s, &table)?;
        let co = Coaction::transpose();
        let mut out = Vec::new();
        let mut any = false;
        for (name, rel) in calculus_relations(&s.p, &s.q)? {
            let r = co.apply(&rel, &sys).map_err(e)?;
            any |= !r.is_zero();
            let text = if r.is_zero() {
                "preserved".to_string()
            } else {
                format!("broken: {r}")
            };
            out.push(Outcome::reported(
                format!("{co}, all-ones table: {name}"),
                text,
            ));
        }
        let degenerate = s.p == s.q;
        out.insert(
            0,
            Outcome::check(
                "T^t with the all-ones table breaks the calculus unless p = q",
                any != degenerate,
                || format!("some residual nonzero: {any}, p = q: {degenerate}"),
            ),
        );
        Ok(out)
    })]
}

pub(super) fn case2_planes(s: &Symbols) -> Vec<Job> {
    let s1 = s.clone();
    let s2 = s.clone();
    let s3 = s.clone();
    vec![
        Job::new("table", move |_| {
            let s = &s1;
            let case2 = qij_case2(&s.q, &s.qbar, &s.qp).map_err(e)?;
            let k = s.qbar.div(&s.qp).map_err(e)?;
            let general = qij_general(&s.q, &s.qbar, &s.qp, &s.qp, &k).map_err(e)?;
            let failed: Vec<String> = case2
                .constraints()
                .map_err(e)?
                .into_iter()
                .filter(|c| !c.holds())
                .map(|c| format!("{}: {}", c.name, c.residual))
                .collect();
            let mut out = vec![
                Outcome::check(
                    "Case II table satisfies all six constraints",
                    failed.is_empty(),
                    || failed.join("; "),
                ),
                Outcome::check(
                    "Case II is the general table at p = q', k = qbar/p",
                    case2.same_entries(&general),
                    || format!("{case2:?} vs {general:?}"),
                ),
            ];
            let ones = qij_case2(&s.qp, &s.qp, &s.qp).map_err(e)?;
            let bad: Vec<String> = ones
                .entries()
                .filter(|(_, c)| !c.is_one())
                .map(|((i, j), c)| format!("q{i}{j} = {c}"))
                .collect();
            out.push(Outcome::check(
                "at q = qbar = q' every entry is 1",
                bad.is_empty(),
                || bad.join("; "),
            ));
            Ok(out)
        }),
        Job::new("commutative plane", move |_| {
            let s = &s2;
            let one = int(1);
            let table = qij_case2(&one, &s.qp, &s.qp).map_err(e)?;
            let qpi = s.qp.inv().map_err(e)?;
            let bad: Vec<String> = table
                .entries()
                .filter(|((i, _), c)| **c != if *i == 1 { one.clone() } else { qpi.clone() })
                .map(|((i, j), c)| format!("q{i}{j} = {c}"))
                .collect();
            let mut out = vec![Outcome::check(
                "q = 1, qbar = q': q1j = 1 and q2j = 1/q'",
                bad.is_empty(),
                || bad.join("; "),
            )];
            let sys = plane_system(&table, None).map_err(e)?;
            let image = Coaction::t()
                .apply(&plane_relation(&s.qp), &sys)
                .map_err(e)?;
            out.push(Outcome::zero("T carries xy = yx to x'y' = q' y'x'", &image));
            let xp = Coaction::t().substitute(&NCPoly::letter(X));
            let a = NCPoly::letter(A);
            let comm = sys
                .normal_order(&xp.mul_free(&a).sub(&a.mul_free(&xp).scale(table.get(1, 1))))
                .map_err(e)?;
            let trivial = (&s.qp * &s.qp).is_one();
            out.push(Outcome::check(
                "x' does not commute with A the way x does unless q'^2 = 1",
                comm.is_zero() == trivial,
                || format!("x'A - q11 A x' = {comm}"),
            ));
            Ok(out)
        }),
        Job::new("comparisons", move |_| {
            let s = &s3;
            let pre = qij_case2_pre(&s.q, &s.q, &s.p, &s.q).map_err(e)?;
            let one = qij_one_param(&s.q, &s.p).map_err(e)?;
            let text = if pre.same_entries(&one) {
                "same entries".to_string()
            } else {
                let diff: Vec<String> = pre
                    .entries()
                    .zip(one.entries())
                    .filter(|(a, b)| a.1 != b.1)
                    .map(|(((i, j), a), (_, b))| format!("q{i}{j}: {a} vs {b}"))
                    .collect();
                diff.join("; ")
            };
            let mut out = vec![Outcome::reported(
                "Case II (k = qbar/p) at qbar = q' = q vs the one-parameter table",
                text,
            )];
            let k = case1_k_value(&s.q, &s.p, &s.qp).map_err(e)?;
            let gap = &k - &s.q.div(&s.p).map_err(e)?;
            out.push(Outcome::reported(
                "Case I k - q/p",
                if gap.is_zero() {
                    "0".to_string()
                } else {
                    gap.to_string()
                },
            ));
            Ok(out)
        }),
    ]
}
