//! The quantum group itself: RTT, Yang–Baxter, comultiplication and the
//! determinant.

use rand::Rng;

use crate::coefficients::int;
use crate::freealg::{Generator, NCPoly, Word};
use crate::hopf::{
    antipode_identities, counit_check, delta_det_check, delta_grouplike_residual, delta_residual,
    derive_hopf_constraints, det_relations_check, glpq_relations, naive_left_adjugate, quantum_det,
    quantum_det_alt, Identity, TensorPoly,
};
use crate::presets::{glpq_rules, glq_rules};
use crate::rmatrix::{
    build_r, build_r_with, rtt_flip_consistency, rtt_matrix, rtt_reduced, rtt_span, ybe_residuals,
};

use super::{e, Job, Outcome, Symbols};

const INDEX: [&str; 4] = ["11", "12", "21", "22"];
const TENSOR_SAMPLES: usize = 50;

fn identities(list: Vec<Identity>) -> Vec<Outcome> {
    list.into_iter()
        .map(|i| Outcome::zero(i.name, &i.residual))
        .collect()
}

fn tensor_zero(name: impl Into<String>, t: &TensorPoly) -> Outcome {
    Outcome::check(name, t.is_zero(), || t.to_string())
}

pub(super) fn glpq_rtt(s: &Symbols) -> Vec<Job> {
    let (p, qp, q) = (s.p.clone(), s.qp.clone(), s.q.clone());
    let (p1, qp1) = (p.clone(), qp.clone());
    let (p2, qp2) = (p.clone(), qp.clone());
    let (p3, qp3) = (p.clone(), qp.clone());
    vec![
        Job::new("entries", move |_| {
            let r = build_r(&p, &qp).map_err(e)?;
            let reduced = rtt_reduced(&r, &glpq_rules(&p, &qp).map_err(e)?).map_err(e)?;
            Ok(reduced
                .iter()
                .enumerate()
                .map(|(idx, x)| {
                    let name = format!(
                        "RTT entry ({},{}) reduces to zero",
                        INDEX[idx / 4],
                        INDEX[idx % 4]
                    );
                    Outcome::zero(name, x)
                })
                .collect())
        }),
        Job::new("span", move |_| {
            let entries = rtt_matrix(&build_r(&p1, &qp1).map_err(e)?)
                .entries()
                .to_vec();
            let relations: Vec<NCPoly> = glpq_relations(&p1, &qp1)
                .map_err(e)?
                .into_iter()
                .map(|(_, r)| r)
                .collect();
            let span = rtt_span(&entries, &relations);
            let ok = span.same_span() && span.relation_rank == 6;
            Ok(vec![Outcome::check(
                "unreduced RTT entries span exactly the six GL_{p,q'} relations",
                ok,
                || {
                    format!(
                        "{} nonzero entries, entry rank {}, relation rank {}, joint rank {}",
                        span.nonzero_entries, span.entry_rank, span.relation_rank, span.joint_rank
                    )
                },
            )])
        }),
        Job::new("flip", move |_| {
            let m = rtt_flip_consistency(&build_r(&p2, &qp2).map_err(e)?);
            let bad: Vec<String> = m
                .entries()
                .iter()
                .filter(|x| !x.is_zero())
                .map(|x| x.to_string())
                .collect();
            Ok(vec![Outcome::check(
                "P (R T1T2 - T2T1 R) P = -(T1T2 R21 - R21 T2T1)",
                bad.is_empty(),
                || bad.join("; "),
            )])
        }),
        Job::new("mismatch", move |_| {
            let r = build_r(&p3, &qp3).map_err(e)?;
            let reduced = rtt_reduced(&r, &glq_rules(&q).map_err(e)?).map_err(e)?;
            let nonzero = reduced.iter().any(|x| !x.is_zero());
            let degenerate = p3 == q && qp3 == q;
            Ok(vec![Outcome::check(
                "RTT entries do not all reduce under GL_q unless p = q' = q",
                nonzero != degenerate,
                || format!("nonzero residual: {nonzero}, p = q' = q: {degenerate}"),
            )])
        }),
    ]
}

fn verdict(holds: bool, m: &crate::rmatrix::ScalarMatrix) -> String {
    if holds {
        "holds".into()
    } else {
        format!("fails ({} nonzero entries)", m.nonzero().len())
    }
}

pub(super) fn ybe(s: &Symbols) -> Vec<Job> {
    let (p, q) = (s.p.clone(), s.q.clone());
    let q1 = q.clone();
    let (p2, q2) = (p.clone(), q.clone());
    vec![
        Job::new("conventions", move |_| {
            let r = ybe_residuals(&build_r(&p, &q).map_err(e)?);
            Ok(vec![
                Outcome::reported(
                    "quantum form R12 R13 R23 = R23 R13 R12",
                    verdict(r.quantum_holds(), &r.quantum),
                ),
                Outcome::reported(
                    "braid form (Ř⊗I)(I⊗Ř)(Ř⊗I) = (I⊗Ř)(Ř⊗I)(I⊗Ř), Ř = PR",
                    verdict(r.braid_holds(), &r.braid),
                ),
            ])
        }),
        Job::new("one-parameter", move |_| {
            let r = ybe_residuals(&build_r(&q1, &q1).map_err(e)?);
            Ok(vec![Outcome::check(
                "at p = q some convention holds",
                r.quantum_holds() || r.braid_holds(),
                || "both conventions fail".into(),
            )])
        }),
        Job::new("sabotage", move |_| {
            let bad = build_r_with(&p2, &q2, &q2 + &p2.inv().map_err(e)?).map_err(e)?;
            let r = ybe_residuals(&bad);
            Ok(vec![Outcome::check(
                "entry (3,2) = q + 1/p breaks both conventions",
                !r.quantum_holds() && !r.braid_holds(),
                || format!("quantum {}, braid {}", r.quantum_holds(), r.braid_holds()),
            )])
        }),
    ]
}

fn random_group_poly<R: Rng + ?Sized>(rng: &mut R) -> NCPoly {
    let mut out = NCPoly::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let len = rng.gen_range(0..=2);
        let w: Word = (0..len)
            .map(|_| Generator::GROUP[rng.gen_range(0..4)])
            .collect();
        out.add_term(w, int(rng.gen_range(1..=3)));
    }
    out
}

pub(super) fn hopf_delta(s: &Symbols) -> Vec<Job> {
    let (p, qp, eps) = (s.p.clone(), s.qp.clone(), s.eps.clone());
    let (p1, qp1) = (p.clone(), qp.clone());
    let (p2, qp2) = (p.clone(), qp.clone());
    vec![
        Job::new("relations", move |_| {
            let rules = glpq_rules(&p, &qp).map_err(e)?;
            let mut out = Vec::new();
            for (name, rel) in glpq_relations(&p, &qp).map_err(e)? {
                let r = delta_residual(&rel, &rules).map_err(e)?;
                out.push(tensor_zero(format!("Δ preserves {name}"), &r));
            }
            Ok(out)
        }),
        Job::new("counit", move |_| {
            Ok(identities(counit_check().map_err(e)?))
        }),
        Job::new("epsilon", move |_| {
            use Generator::*;
            let rules = glpq_rules(&p1, &qp1).map_err(e)?;
            let rel = NCPoly::letters(&[A, D]).sub(&NCPoly::letters(&[D, A]).scale(&eps));
            let r = delta_residual(&rel, &rules).map_err(e)?;
            // AD - eps DA vanishes in the algebra only at eps = 1, pq' = 1
            let trivial = rules.normal_order(&rel).map_err(e)?.is_zero();
            Ok(vec![Outcome::check(
                "Δ(AD - eps DA) is nonzero unless AD = eps DA holds",
                r.is_zero() == trivial,
                || format!("residual zero: {}, relation holds: {trivial}", r.is_zero()),
            )])
        }),
        Job::new("associativity", move |rng| {
            let rules = glpq_rules(&p2, &qp2).map_err(e)?;
            for _ in 0..TENSOR_SAMPLES {
                let [a, b, c]: [TensorPoly; 3] = std::array::from_fn(|_| {
                    TensorPoly::tensor(&random_group_poly(rng), &random_group_poly(rng))
                });
                let left = a.mul(&b, &rules).map_err(e)?.mul(&c, &rules).map_err(e)?;
                let right = a.mul(&b.mul(&c, &rules).map_err(e)?, &rules).map_err(e)?;
                if left != right {
                    return Ok(vec![Outcome::fail(
                        "factorwise product is associative",
                        format!("a = {a}, b = {b}, c = {c}: {}", left.sub(&right)),
                    )]);
                }
            }
            Ok(vec![Outcome::pass(format!(
                "factorwise product is associative ({TENSOR_SAMPLES} triples)"
            ))])
        }),
    ]
}

pub(super) fn hopf_constraints(_: &Symbols) -> Vec<Job> {
    vec![Job::new("derive", |_| {
        let r = derive_hopf_constraints().map_err(e)?;
        let show = |x: &Option<NCPoly>| {
            x.as_ref()
                .map_or("not recovered".to_string(), |p| p.to_string())
        };
        let mut out = vec![
            Outcome::check("Δ forces q1 = q2", r.q1_equals_q2, || {
                "no condition solves to q2 = q1".into()
            }),
            Outcome::check("Δ forces q3 = q4", r.q3_equals_q4, || {
                "no condition solves to q4 = q3".into()
            }),
            Outcome::check(
                "AD - DA = q'CB - q'^{-1}BC at q1 = q2 = q'",
                r.first_matches,
                || show(&r.first_exchange),
            ),
            Outcome::check(
                "AD - DA = pBC - p^{-1}CB at q3 = q4 = p",
                r.second_matches,
                || show(&r.second_exchange),
            ),
            Outcome::check(
                "difference is (pq' + 1)/(pq') (q'CB - pBC): pBC = q'CB unless pq' = -1",
                r.exclusion_recovered,
                || {
                    r.difference_factor
                        .as_ref()
                        .map_or("no proportionality".into(), |c| c.to_string())
                },
            ),
        ];
        let conditions: Vec<String> = r
            .scalar_conditions
            .iter()
            .map(|c| {
                format!(
                    "[{}] {} ⊗ {}: {}",
                    c.source, c.word.0, c.word.1, c.coefficient
                )
            })
            .collect();
        out.push(Outcome::reported(
            "scalar conditions",
            conditions.join("; "),
        ));
        let relations: Vec<String> = r
            .exchange_relations
            .iter()
            .map(|(src, rel)| format!("[{src}] {rel} = 0"))
            .collect();
        out.push(Outcome::reported(
            "exchange relations",
            relations.join("; "),
        ));
        Ok(out)
    })]
}

pub(super) fn det_inverse(s: &Symbols) -> Vec<Job> {
    let (p, qp) = (s.p.clone(), s.qp.clone());
    let (p1, qp1) = (p.clone(), qp.clone());
    let (p2, qp2) = (p.clone(), qp.clone());
    vec![
        Job::new("spellings", move |_| {
            let rules = glpq_rules(&p, &qp).map_err(e)?;
            let a = quantum_det(&p, &rules).map_err(e)?;
            let b = quantum_det_alt(&p, &rules).map_err(e)?;
            Ok(vec![Outcome::zero("AD - pBC = DA - p^{-1}CB", &a.sub(&b))])
        }),
        Job::new("adjugate", move |_| {
            Ok(identities(antipode_identities(&p1, &qp1).map_err(e)?))
        }),
        Job::new("literal", move |_| {
            Ok(identities(naive_left_adjugate(&p2, &qp2).map_err(e)?))
        }),
    ]
}

pub(super) fn det_relations(s: &Symbols) -> Vec<Job> {
    let (p, qp, q) = (s.p.clone(), s.qp.clone(), s.q.clone());
    vec![
        Job::new("relations", move |_| {
            Ok(identities(det_relations_check(&p, &qp).map_err(e)?))
        }),
        Job::new("central", move |_| {
            let list = det_relations_check(&q, &q).map_err(e)?;
            Ok(list
                .into_iter()
                .map(|i| Outcome::zero(format!("at p = q' = q: {}", i.name), &i.residual))
                .collect())
        }),
    ]
}

pub(super) fn delta_det(s: &Symbols) -> Vec<Job> {
    let (p, qp, q) = (s.p.clone(), s.qp.clone(), s.q.clone());
    let (p1, qp1, q1) = (p.clone(), qp.clone(), q.clone());
    vec![
        Job::new("grouplike", move |_| {
            let r = delta_det_check(&p, &qp).map_err(e)?;
            Ok(vec![tensor_zero("Δ(𝒟) = 𝒟 ⊗ 𝒟", &r)])
        }),
        Job::new("sabotage", move |_| {
            use Generator::*;
            let rules = glpq_rules(&p1, &qp1).map_err(e)?;
            let bad = NCPoly::letters(&[A, D]).sub(&NCPoly::letters(&[B, C]).scale(&q1));
            let r = delta_grouplike_residual(&bad, &rules).map_err(e)?;
            let trivial = q1 == p1;
            Ok(vec![Outcome::check(
                "AD - qBC is not grouplike unless q = p",
                r.is_zero() == trivial,
                || format!("residual zero: {}", r.is_zero()),
            )])
        }),
        Job::new("one-parameter", move |_| {
            let r = delta_det_check(&q, &q).map_err(e)?;
            Ok(vec![tensor_zero("at p = q' = q: Δ(𝒟) = 𝒟 ⊗ 𝒟", &r)])
        }),
    ]
}
