use std::process::{Command, Output};

fn qplane(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qplane"))
        .args(args)
        .output()
        .unwrap()
}

#[test]
fn list_prints_every_suite() {
    let out = qplane(&["list"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 19);
    assert!(text.lines().any(|l| l.starts_with("ybe ")));
}

#[test]
fn passing_suite_exits_zero_with_json() {
    let out = qplane(&["verify", "--suite", "ybe", "--output", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert!(!rows.is_empty());
    for row in rows {
        assert!(row["name"].is_string());
        assert!(["pass", "reported"].contains(&row["status"].as_str().unwrap()));
        assert!(row["elapsed_ms"].is_u64());
    }
}

#[test]
fn failing_suite_exits_one() {
    let out = qplane(&["verify", "--suite", "critical-pairs"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("fail"));
}

#[test]
fn bad_input_exits_two() {
    for args in [
        &["verify", "--suite", "nope"][..],
        &["verify", "--suite", "ybe", "--bindings", "p="],
        &["verify", "--suite", "ybe", "--bindings", "p=0"],
        &["verify", "--suite", "ybe", "--bindings", "p=2,q'=1/2"],
        &["verify"],
    ] {
        let out = qplane(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn no_timing_output_is_byte_identical() {
    let args = [
        "verify",
        "--suite",
        "all",
        "--no-timing",
        "--output",
        "json",
        "--seed",
        "7",
    ];
    let a = qplane(&args);
    let b = qplane(&args);
    assert_eq!(a.status.code(), Some(1));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bindings_reach_the_suite() {
    let out = qplane(&[
        "verify",
        "--suite",
        "det-inverse",
        "--bindings",
        "q'=p",
        "--no-timing",
    ]);
    assert_eq!(out.status.code(), Some(0));
}
