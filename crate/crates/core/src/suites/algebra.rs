//! Arithmetic, rewriting infrastructure and the one-parameter limit.

use std::collections::BTreeMap;

use rand_chacha::ChaCha8Rng;

use crate::coefficients::{par, Coefficient, Parameter};
use crate::freealg::{
    check_critical_pairs, check_strategy_independence, Divergence, Generator, NCPoly, RewriteRule,
    RewriteSystem,
};
use crate::presets::{glpq_rules, glq_rules, shipped_systems, ShippedSystem};
use crate::rmatrix::{build_r, r_q, rtt_reduced};

use super::random::random_coefficient;
use super::{e, Job, JobResult, Outcome, Symbols};

const FIELD_SAMPLES: usize = 1000;
const CONFLUENCE_SAMPLES: usize = 1000;
const CONFLUENCE_MAX_LEN: usize = 6;

fn triples(rng: &mut ChaCha8Rng) -> impl Iterator<Item = [Coefficient; 3]> + '_ {
    (0..FIELD_SAMPLES).map(move |_| std::array::from_fn(|_| random_coefficient(rng)))
}

/// Runs `law` on random triples; reports the first counterexample.
fn field_law<F>(name: &'static str, law: F) -> Job
where
    F: Fn(&Coefficient, &Coefficient, &Coefficient) -> Result<(), String> + Send + Sync + 'static,
{
    Job::new(name, move |rng| {
        for [a, b, c] in triples(rng) {
            if let Err(why) = law(&a, &b, &c) {
                return Ok(vec![Outcome::fail(
                    name,
                    format!("a = {a}, b = {b}, c = {c}: {why}"),
                )]);
            }
        }
        Ok(vec![Outcome::pass(format!(
            "{name} ({FIELD_SAMPLES} triples)"
        ))])
    })
}

fn eq(label: &str, x: Coefficient, y: Coefficient) -> Result<(), String> {
    if x == y {
        Ok(())
    } else {
        Err(format!("{label}: {x} != {y}"))
    }
}

pub(super) fn coeff_field(_: &Symbols) -> Vec<Job> {
    vec![
        field_law("addition is associative and commutative", |a, b, c| {
            eq("assoc", (a + b) + c, a + &(b + c))?;
            eq("comm", a + b, b + a)
        }),
        field_law(
            "multiplication is associative and commutative",
            |a, b, c| {
                eq("assoc", (a * b) * c, a * &(b * c))?;
                eq("comm", a * b, b * a)
            },
        ),
        field_law("multiplication distributes over addition", |a, b, c| {
            eq("left", a * &(b + c), a * b + a * c)?;
            eq("right", (a + b) * c, a * c + b * c)
        }),
        field_law("additive and multiplicative inverses", |a, _, _| {
            eq("a + (-a)", a + &(-a), Coefficient::zero())?;
            match a.inv() {
                Ok(i) => eq("a a^-1", a * &i, Coefficient::one()),
                Err(_) if a.is_zero() => Ok(()),
                Err(err) => Err(err.to_string()),
            }
        }),
        field_law("canonical form is idempotent", |a, b, _| {
            let again = Coefficient::from_parts(a.numerator().clone(), a.denominator().clone())
                .map_err(e)?;
            eq("canon", again, a.clone())?;
            // the same element spelled with a common factor
            let f = b.numerator();
            if f.is_zero() {
                return Ok(());
            }
            let spelled =
                Coefficient::from_parts(a.numerator().mul(f), a.denominator().mul(f)).map_err(e)?;
            eq("common factor", spelled, a.clone())
        }),
        field_law("equality agrees with cross-multiplication", |a, b, _| {
            let cross_zero = a.cross_residual(b).is_zero();
            if cross_zero != (a == b) {
                return Err(format!(
                    "cross residual zero = {cross_zero}, equal = {}",
                    a == b
                ));
            }
            let s = a * b;
            let t = b * a;
            if !s.cross_residual(&t).is_zero() {
                return Err("ab and ba differ by cross-multiplication".into());
            }
            Ok(())
        }),
        field_law("substitution commutes with arithmetic", |a, b, c| {
            let mut binding = BTreeMap::new();
            binding.insert(Parameter::P, c.clone());
            let s = |x: &Coefficient| x.substitute(&binding);
            if let (Ok(sa), Ok(sb), Ok(sab), Ok(spb)) = (s(a), s(b), s(&(a * b)), s(&(a + b))) {
                eq("product", sab, &sa * &sb)?;
                eq("sum", spb, &sa + &sb)?;
            }
            Ok(())
        }),
    ]
}

fn bound_systems(s: &Symbols) -> Result<Vec<ShippedSystem>, String> {
    shipped_systems()
        .map_err(e)?
        .into_iter()
        .map(|mut sys| {
            sys.system = sys.system.substitute(&s.bindings).map_err(e)?;
            Ok(sys)
        })
        .collect()
}

fn describe(divs: &[Divergence]) -> String {
    let shown: Vec<String> = divs.iter().take(3).map(|d| d.to_string()).collect();
    let more = if divs.len() > 3 {
        format!(" (and {} more)", divs.len() - 3)
    } else {
        String::new()
    };
    format!("{} divergent: {}{}", divs.len(), shown.join("; "), more)
}

fn per_system<F>(s: &Symbols, f: F) -> Vec<Job>
where
    F: Fn(&ShippedSystem, &mut ChaCha8Rng) -> JobResult + Send + Sync + Clone + 'static,
{
    let names = match shipped_systems() {
        Ok(list) => list.into_iter().map(|x| x.name).collect::<Vec<_>>(),
        Err(err) => {
            let msg = err.to_string();
            return vec![Job::new("shipped systems", move |_| Err(msg.clone()))];
        }
    };
    names
        .into_iter()
        .enumerate()
        .map(|(i, name)| {
            let s = s.clone();
            let f = f.clone();
            Job::new(name, move |rng| {
                let systems = bound_systems(&s)?;
                f(&systems[i], rng)
            })
        })
        .collect()
}

pub(super) fn confluence(s: &Symbols) -> Vec<Job> {
    per_system(s, |sys, rng| {
        let divs = check_strategy_independence(
            &sys.system,
            &sys.alphabet,
            CONFLUENCE_SAMPLES,
            CONFLUENCE_MAX_LEN,
            rng,
        );
        let name = format!("{}: {CONFLUENCE_SAMPLES} random words agree", sys.name);
        Ok(vec![Outcome::check(name, divs.is_empty(), || {
            describe(&divs)
        })])
    })
}

pub(super) fn critical_pairs(s: &Symbols) -> Vec<Job> {
    let mut jobs = per_system(s, |sys, _| {
        let divs = check_critical_pairs(&sys.system, &sys.alphabet);
        let n = sys.alphabet.len().pow(3);
        let name = format!("{}: {n} triples locally confluent", sys.name);
        Ok(vec![Outcome::check(name, divs.is_empty(), || {
            describe(&divs)
        })])
    });
    let (p, qp) = (s.p.clone(), s.qp.clone());
    jobs.push(Job::new("sabotage", move |_| {
        use Generator::*;
        // BA -> AB instead of BA -> p^-1 AB
        let mut merged = RewriteSystem::new("glpq-sabotaged");
        for rule in glpq_rules(&p, &qp).map_err(e)?.rules() {
            let rule = if rule.lhs == (B, A) {
                RewriteRule::new(B, A, NCPoly::letters(&[A, B])).map_err(e)?
            } else {
                rule
            };
            merged.add_rule(rule).map_err(e)?;
        }
        let divs = check_critical_pairs(&merged, &[A, B, C, D]);
        Ok(vec![Outcome::check(
            "sabotaged glpq (BA -> AB) is detected",
            !divs.is_empty(),
            || "no divergence found".into(),
        )])
    }));
    jobs
}

pub(super) fn glq_limit(s: &Symbols) -> Vec<Job> {
    let s1 = s.clone();
    let s2 = s.clone();
    let s3 = s.clone();
    let s4 = s.clone();
    vec![
        Job::new("glpq rules at p = q' = q", move |_| {
            let (p, qp, q) = (par(Parameter::P), par(Parameter::QP), par(Parameter::Q));
            let limit: BTreeMap<_, _> =
                [(Parameter::P, q.clone()), (Parameter::QP, q.clone())].into();
            let lhs = glpq_rules(&p, &qp)
                .map_err(e)?
                .substitute(&limit)
                .map_err(e)?
                .substitute(&s1.bindings)
                .map_err(e)?;
            let rhs = glq_rules(&q)
                .map_err(e)?
                .substitute(&s1.bindings)
                .map_err(e)?;
            let mut out = Vec::new();
            for (a, b) in lhs.rules().zip(rhs.rules()) {
                let name = format!("rule {} {}", a.lhs.0, a.lhs.1);
                out.push(Outcome::check(name, a == b, || format!("{a} vs {b}")));
            }
            out.push(Outcome::check(
                "same rule set",
                lhs.len() == rhs.len(),
                || format!("{} vs {} rules", lhs.len(), rhs.len()),
            ));
            Ok(out)
        }),
        Job::new("R_{p,q} at p = q", move |_| {
            let (p, q) = (par(Parameter::P), par(Parameter::Q));
            let limit: BTreeMap<_, _> = [(Parameter::P, q.clone())].into();
            let r = build_r(&p, &q).map_err(e)?.substitute(&limit).map_err(e)?;
            let r = r.substitute(&s2.bindings).map_err(e)?;
            let rq = r_q(&q).map_err(e)?.substitute(&s2.bindings).map_err(e)?;
            Ok(vec![Outcome::check(
                "R_{p,q} at p = q equals R_q entrywise",
                r == rq,
                || format!("{r:?} vs {rq:?}"),
            )])
        }),
        Job::new("RTT at p = q", move |_| {
            let r = r_q(&s3.q).map_err(e)?;
            let entries = rtt_reduced(&r, &glq_rules(&s3.q).map_err(e)?).map_err(e)?;
            let bad: Vec<_> = entries.iter().filter(|x| !x.is_zero()).collect();
            Ok(vec![Outcome::check(
                "R_q T1 T2 - T2 T1 R_q reduces to zero under GL_q",
                bad.is_empty(),
                || {
                    bad.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join("; ")
                },
            )])
        }),
        Job::new("compound constant", move |_| {
            let (p, qp, q) = (par(Parameter::P), par(Parameter::QP), par(Parameter::Q));
            let limit: BTreeMap<_, _> =
                [(Parameter::P, q.clone()), (Parameter::QP, q.clone())].into();
            let got = (&p - &qp.inv().map_err(e)?).substitute(&limit).map_err(e)?;
            let want = &q - &q.inv().map_err(e)?;
            let got = s4.bind(&got).map_err(e)?;
            let want = s4.bind(&want).map_err(e)?;
            Ok(vec![Outcome::zero_coefficient(
                "p - 1/q' at p = q' = q is q - 1/q",
                &(got - want),
            )])
        }),
    ]
}
