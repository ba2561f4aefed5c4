use std::process::ExitCode;

use qplane::suites::{run_suite, Status, SuiteConfig};

struct Verdict {
    checks: usize,
    failures: Vec<String>,
}

impl Verdict {
    fn new() -> Verdict {
        Verdict {
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn suites(mut self, names: &[&str]) -> Verdict {
        for name in names {
            let config = SuiteConfig {
                timing: false,
                ..SuiteConfig::new(*name)
            };
            match run_suite(&config) {
                Ok(results) => {
                    for r in results.iter().filter(|r| r.status != Status::Reported) {
                        self.checks += 1;
                        if r.status == Status::Fail {
                            self.failures.push(format!("{name}/{}", r.name));
                        }
                    }
                }
                Err(err) => {
                    self.checks += 1;
                    self.failures.push(format!("{name}: {err}"));
                }
            }
        }
        self
    }
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Verdict)> = vec![
        (
            "one-parameter limit of rules and R-matrix",
            Verdict::new().suites(&["glq-limit"]),
        ),
        (
            "RTT entries vanish and span the group relations",
            Verdict::new().suites(&["glpq-rtt"]),
        ),
        (
            "coproduct respects relations; cross-constraints recovered",
            Verdict::new().suites(&["hopf-delta", "hopf-constraints"]),
        ),
        (
            "adjugate identities, determinant relations, grouplike determinant",
            Verdict::new().suites(&["det-inverse", "det-relations", "delta-det"]),
        ),
        (
            "q_ij table constraints and plane covariance under T and its transpose",
            Verdict::new().suites(&["qij-constraints", "coaction-invariance"]),
        ),
        (
            "Case I k, specializations and calculus invariance",
            Verdict::new().suites(&["case1-k", "diffcalc-invariance"]),
        ),
        (
            "commuting cross-relations break transpose invariance",
            Verdict::new().suites(&["diffcalc-negative-control"]),
        ),
        (
            "Case II table and planes",
            Verdict::new().suites(&["case2-planes"]),
        ),
        (
            "critical pairs, randomized confluence, coefficient field",
            Verdict::new().suites(&["critical-pairs", "confluence", "coeff-field"]),
        ),
        (
            "exterior derivative squares to zero and kills the plane relation",
            Verdict::new().suites(&["diffcalc-consistency"]),
        ),
    ];

    let mut failed = 0;
    for (i, (title, v)) in criteria.iter().enumerate() {
        let ok = v.failures.is_empty() && v.checks > 0;
        if !ok {
            failed += 1;
        }
        println!(
            "{} criterion {:>2}: {title} ({} {})",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            v.checks,
            if v.checks == 1 { "check" } else { "checks" }
        );
        for f in &v.failures {
            println!("       failed: {f}");
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
