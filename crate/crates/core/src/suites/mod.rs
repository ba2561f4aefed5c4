//! Named batches of checks with text and JSON reports.
//!
//! A suite expands into independent jobs; jobs run in parallel and the
//! report keeps registry order. Every randomized job derives its RNG from the
//! configured seed and its own name, so reports are reproducible.

mod algebra;
mod group;
mod planes;
pub mod random;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::coefficients::{int, par, Coefficient, CoefficientError, Parameter};
use crate::freealg::NCPoly;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}` (try `qplane list`)")]
    UnknownSuite(String),
    #[error("bindings hit a singular point: {0}")]
    Singular(String),
    #[error(transparent)]
    Coefficient(#[from] CoefficientError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Reported,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Reported => "reported",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub residual: Option<String>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteInfo {
    pub name: &'static str,
    pub description: &'static str,
    pub anchor: &'static str,
}

const SUITES: &[SuiteInfo] = &[
    SuiteInfo {
        name: "coeff-field",
        description: "field axioms, canonical form and substitution on random rational functions",
        anchor: "exact arithmetic in Q(p, q, q', qbar, k)",
    },
    SuiteInfo {
        name: "confluence",
        description: "leftmost vs random reduction order on random words, per shipped system",
        anchor: "normal ordering is well defined",
    },
    SuiteInfo {
        name: "critical-pairs",
        description: "leftmost vs rightmost reduction on every length-3 word, per shipped system",
        anchor: "local confluence of the presentations",
    },
    SuiteInfo {
        name: "glq-limit",
        description: "GL_{p,q'} and R_{p,q} at p = q' = q against GL_q and R_q",
        anchor: "the p -> q limit recovers GL_q(2) and R_q",
    },
    SuiteInfo {
        name: "glpq-rtt",
        description: "entries of R T1 T2 - T2 T1 R reduce to zero and span the six relations",
        anchor: "GL_{p,q'} relations from RTT = TTR",
    },
    SuiteInfo {
        name: "ybe",
        description: "quantum and braid Yang-Baxter residuals of R_{p,q}",
        anchor: "R_{p,q} solves the Yang-Baxter equation",
    },
    SuiteInfo {
        name: "hopf-delta",
        description: "comultiplication respects the six relations; counit",
        anchor: "Δ(T) = T ⊗ T is an algebra map",
    },
    SuiteInfo {
        name: "hopf-constraints",
        description: "constraints forced by Δ on candidate q-commutation relations",
        anchor: "AD - DA = q'CB - q'^{-1}BC = pBC - p^{-1}CB, pq' ≠ -1",
    },
    SuiteInfo {
        name: "det-inverse",
        description: "adjugate identities for the antipode",
        anchor: "𝒟 = AD - pBC = DA - p^{-1}CB, adj(T) 𝒟^{-1} T = I",
    },
    SuiteInfo {
        name: "det-relations",
        description: "commutation of the quantum determinant with the generators",
        anchor: "B𝒟 = p^{-1}q'𝒟B, C𝒟 = pq'^{-1}𝒟C, [A,𝒟] = [D,𝒟] = 0",
    },
    SuiteInfo {
        name: "delta-det",
        description: "the quantum determinant is grouplike",
        anchor: "Δ(𝒟) = 𝒟 ⊗ 𝒟",
    },
    SuiteInfo {
        name: "qij-constraints",
        description: "cross-commutation tables against the six q_ij constraints",
        anchor: "q' = qbar q11/q13, p = qbar q11/q12, q q14 = qbar q21, ...",
    },
    SuiteInfo {
        name: "coaction-invariance",
        description: "x'y' = qbar y'x' under T and T^t for every solution table",
        anchor: "qbar = qbbar: the plane is covariant under T and T^t",
    },
    SuiteInfo {
        name: "case1-k",
        description: "k fixed by invariance of dx dy = -p^{-1} dy dx and the resulting tables",
        anchor: "k = q'(qp - 1)/(p(q'p - 1))",
    },
    SuiteInfo {
        name: "diffcalc-consistency",
        description: "the two differential calculi agree at p = q; d^2 = 0 and Leibniz",
        anchor: "exterior d with d^2 = 0 on the quantum plane",
    },
    SuiteInfo {
        name: "diffcalc-invariance",
        description: "the five calculus relations and dx'dx' = dy'dy' = 0 under T and T^t",
        anchor: "calculus invariant under T and T^t with the one-parameter table",
    },
    SuiteInfo {
        name: "diffcalc-negative-control",
        description: "with commuting cross relations the calculus is not T^t-invariant",
        anchor: "q_ij = 1 breaks T^t invariance",
    },
    SuiteInfo {
        name: "case2-planes",
        description: "k = q12 at p = q': tables, the q = 1 plane and the Manin plane",
        anchor: "p = q', k = q12; q = 1, qbar = q'; all q_ij = 1",
    },
    SuiteInfo {
        name: "all",
        description: "every suite above",
        anchor: "everything",
    },
];

pub fn list_suites() -> &'static [SuiteInfo] {
    SUITES
}

/// What to run and how.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: String,
    pub bindings: BTreeMap<Parameter, Coefficient>,
    pub seed: u64,
    /// When false, `elapsed_ms` is reported as 0 so output is byte-stable.
    pub timing: bool,
}

impl SuiteConfig {
    pub fn new(suite: impl Into<String>) -> SuiteConfig {
        SuiteConfig {
            suite: suite.into(),
            bindings: BTreeMap::new(),
            seed: DEFAULT_SEED,
            timing: true,
        }
    }
}

/// The base parameters after applying the configured bindings.
#[derive(Clone, Debug)]
pub struct Symbols {
    pub p: Coefficient,
    pub qp: Coefficient,
    pub q: Coefficient,
    pub qbar: Coefficient,
    pub k: Coefficient,
    pub eps: Coefficient,
    pub bindings: BTreeMap<Parameter, Coefficient>,
}

impl Symbols {
    pub fn new(bindings: &BTreeMap<Parameter, Coefficient>) -> Result<Symbols, SuiteError> {
        let b = |p: Parameter| par(p).substitute(bindings);
        let s = Symbols {
            p: b(Parameter::P)?,
            qp: b(Parameter::QP)?,
            q: b(Parameter::Q)?,
            qbar: b(Parameter::QBAR)?,
            k: b(Parameter::K)?,
            eps: b(Parameter::EPS)?,
            bindings: bindings.clone(),
        };
        for (name, v) in [
            ("p", &s.p),
            ("q'", &s.qp),
            ("q", &s.q),
            ("qbar", &s.qbar),
            ("k", &s.k),
        ] {
            if v.is_zero() {
                return Err(SuiteError::Singular(format!("{name} = 0")));
            }
        }
        if (&s.p * &s.qp + int(1)).is_zero() {
            return Err(SuiteError::Singular("p q' = -1".into()));
        }
        // the Case I value of k has q'p - 1 in its denominator
        if (&s.p * &s.qp - int(1)).is_zero() {
            return Err(SuiteError::Singular("p q' = 1".into()));
        }
        Ok(s)
    }

    pub fn bind(&self, c: &Coefficient) -> Result<Coefficient, CoefficientError> {
        c.substitute(&self.bindings)
    }
}

/// One outcome of a job before timing is attached.
#[derive(Clone, Debug)]
pub(crate) struct Outcome {
    name: String,
    status: Status,
    residual: Option<String>,
}

impl Outcome {
    pub(crate) fn pass(name: impl Into<String>) -> Outcome {
        Outcome {
            name: name.into(),
            status: Status::Pass,
            residual: None,
        }
    }

    pub(crate) fn fail(name: impl Into<String>, residual: impl Into<String>) -> Outcome {
        Outcome {
            name: name.into(),
            status: Status::Fail,
            residual: Some(residual.into()),
        }
    }

    pub(crate) fn reported(name: impl Into<String>, text: impl Into<String>) -> Outcome {
        Outcome {
            name: name.into(),
            status: Status::Reported,
            residual: Some(text.into()),
        }
    }

    pub(crate) fn check(
        name: impl Into<String>,
        ok: bool,
        detail: impl FnOnce() -> String,
    ) -> Outcome {
        if ok {
            Outcome::pass(name)
        } else {
            Outcome::fail(name, detail())
        }
    }

    /// Passes iff `residual` is zero.
    pub(crate) fn zero(name: impl Into<String>, residual: &NCPoly) -> Outcome {
        Outcome::check(name, residual.is_zero(), || residual.to_string())
    }

    pub(crate) fn zero_coefficient(name: impl Into<String>, residual: &Coefficient) -> Outcome {
        Outcome::check(name, residual.is_zero(), || residual.to_string())
    }
}

pub(crate) type JobResult = Result<Vec<Outcome>, String>;

/// A named unit of work producing one or more outcomes.
pub(crate) struct Job {
    name: String,
    run: Box<dyn Fn(&mut ChaCha8Rng) -> JobResult + Send + Sync>,
}

impl Job {
    pub(crate) fn new<F>(name: impl Into<String>, run: F) -> Job
    where
        F: Fn(&mut ChaCha8Rng) -> JobResult + Send + Sync + 'static,
    {
        Job {
            name: name.into(),
            run: Box::new(run),
        }
    }
}

/// Converts any displayable error into a job failure.
pub(crate) fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn jobs_for(name: &str, s: &Symbols) -> Option<Vec<Job>> {
    Some(match name {
        "coeff-field" => algebra::coeff_field(s),
        "confluence" => algebra::confluence(s),
        "critical-pairs" => algebra::critical_pairs(s),
        "glq-limit" => algebra::glq_limit(s),
        "glpq-rtt" => group::glpq_rtt(s),
        "ybe" => group::ybe(s),
        "hopf-delta" => group::hopf_delta(s),
        "hopf-constraints" => group::hopf_constraints(s),
        "det-inverse" => group::det_inverse(s),
        "det-relations" => group::det_relations(s),
        "delta-det" => group::delta_det(s),
        "qij-constraints" => planes::qij_constraints(s),
        "coaction-invariance" => planes::coaction_invariance(s),
        "case1-k" => planes::case1_k(s),
        "diffcalc-consistency" => planes::diffcalc_consistency(s),
        "diffcalc-invariance" => planes::diffcalc_invariance(s),
        "diffcalc-negative-control" => planes::negative_control(s),
        "case2-planes" => planes::case2_planes(s),
        _ => return None,
    })
}

fn job_seed(seed: u64, name: &str) -> u64 {
    // FNV-1a over the job name, mixed with the configured seed
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100_0000_01b3);
    }
    h ^ seed
}

/// Runs a suite (or `all`) and returns its results in registry order.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<CheckResult>, SuiteError> {
    let symbols = Symbols::new(&config.bindings)?;
    let mut jobs: Vec<(String, Job)> = Vec::new();
    if config.suite == "all" {
        for info in SUITES.iter().filter(|i| i.name != "all") {
            let prefix = format!("{}/", info.name);
            for j in jobs_for(info.name, &symbols).expect("registered") {
                jobs.push((prefix.clone(), j));
            }
        }
    } else {
        let list = jobs_for(&config.suite, &symbols)
            .ok_or_else(|| SuiteError::UnknownSuite(config.suite.clone()))?;
        jobs.extend(list.into_iter().map(|j| (String::new(), j)));
    }

    let seed = config.seed;
    let timing = config.timing;
    let results: Vec<Vec<CheckResult>> = jobs
        .par_iter()
        .map(|(prefix, job)| {
            let mut rng = ChaCha8Rng::seed_from_u64(job_seed(seed, &job.name));
            let start = Instant::now();
            let outcome = (job.run)(&mut rng);
            let elapsed_ms = if timing {
                start.elapsed().as_millis() as u64
            } else {
                0
            };
            let outcomes = outcome.unwrap_or_else(|err| vec![Outcome::fail(job.name.clone(), err)]);
            outcomes
                .into_iter()
                .map(|o| CheckResult {
                    name: format!("{prefix}{}", o.name),
                    status: o.status,
                    residual: o.residual,
                    elapsed_ms,
                })
                .collect()
        })
        .collect();
    Ok(results.into_iter().flatten().collect())
}

/// True when no result failed.
pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.status != Status::Fail)
}

pub fn render_json(results: &[CheckResult]) -> String {
    serde_json::to_string_pretty(results).expect("results serialize")
}

pub fn render_text(results: &[CheckResult]) -> String {
    let width = results
        .iter()
        .map(|r| r.name.chars().count())
        .max()
        .unwrap_or(4)
        .max(5);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<8}  {:<width$}  {:>8}  residual",
        "status", "check", "ms"
    );
    for r in results {
        let _ = writeln!(
            out,
            "{:<8}  {:<width$}  {:>8}  {}",
            r.status.as_str(),
            r.name,
            r.elapsed_ms,
            r.residual.as_deref().unwrap_or("")
        );
    }
    let count = |s| results.iter().filter(|r| r.status == s).count();
    let _ = writeln!(
        out,
        "{} checks: {} pass, {} fail, {} reported",
        results.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Reported)
    );
    out
}
