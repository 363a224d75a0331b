use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strtopo"))
        .args(args)
        .output()
        .expect("run the CLI")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = run(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn validate_builtin_passes() {
    let o = run(&["validate", "--builtin", "S2xS2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
    let v = json(&["validate", "--builtin", "S2", "--emit", "json"]);
    assert!(v["axioms"]
        .as_array()
        .unwrap()
        .iter()
        .all(|a| a["passed"] == true));
}

#[test]
fn homology_table_of_s2() {
    let v = json(&[
        "homology",
        "--builtin",
        "S2",
        "--cyclic",
        "--max-degree",
        "8",
        "--emit",
        "json",
    ]);
    let dims: Vec<(i64, u64)> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r[0].as_i64().unwrap(), r[2].as_u64().unwrap()))
        .collect();
    let want: Vec<(i64, u64)> = (0..=8)
        .map(|d| (d, u64::from(d >= 2 && d % 2 == 0)))
        .collect();
    assert_eq!(dims, want);
}

#[test]
fn check_lie_passes() {
    assert_eq!(
        run(&["check-lie", "--builtin", "S2xS2", "--max-len", "4"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn lie_operations() {
    let o = run(&["bracket", "--builtin", "S2xS2", "a|t", "b"]);
    let s = stdout(&o);
    assert!(s.trim() == "1 N[t]" || s.trim() == "-1 N[t]", "{s}");
    let o = run(&["cobracket", "--builtin", "S2xS2", "N[a|t|b|t]"]);
    assert_eq!(stdout(&o).trim(), "2 N[t] ⊗ N[t]");
    let o = run(&["bracket", "--builtin", "S2xS2", "a", "b"]);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn quantum_operations() {
    let o = run(&["qmul", "--builtin", "S2xS2", "N[(a,1)]", "N[(b,1)]"]);
    assert_eq!(stdout(&o).trim(), "N[(a,1)] * N[(b,2)]");
    let v = json(&[
        "qcoproduct",
        "--builtin",
        "S2xS2",
        "N[(a,1)]",
        "--emit",
        "json",
    ]);
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    let v = json(&[
        "qcoproduct",
        "--builtin",
        "S2xS2",
        "N[(a,1)|(t,2)|(b,3)|(t,4)]",
        "--n",
        "3",
        "--emit",
        "json",
    ]);
    assert!(v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .any(|t| t["h_exponent"] == 1));
    let o = run(&["antipode", "--builtin", "S2xS2", "N[(a,1)]"]);
    assert_eq!(stdout(&o).trim(), "-N[(a,1)]");
    let o = run(&["qdiff", "--builtin", "S2", "N[(e2,1)|(e2,2)|(e2,3)]"]);
    assert_eq!(stdout(&o).trim(), "0");
    let o = run(&["qdiff", "--builtin", "S2xS2", "N[(e0,1)]"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&[
        "qdiff",
        "--builtin",
        "S2xS2",
        "--all-letters",
        "N[(e0,1)|(t,2)]",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verification_suites_exit_codes() {
    let ok = [
        "check-complex",
        "--builtin",
        "CP2",
        "--max-len",
        "4",
        "--max-len-connes",
        "3",
    ];
    assert_eq!(run(&ok).status.code(), Some(0));
    let ok = [
        "check-hopf",
        "--builtin",
        "S2xS2",
        "--max-len",
        "3",
        "--all-letters",
    ];
    assert_eq!(run(&ok).status.code(), Some(0));
    let ok = [
        "check-quantization",
        "--builtin",
        "S2xS2",
        "--max-len",
        "3",
        "--bracket-len",
        "2",
    ];
    assert_eq!(run(&ok).status.code(), Some(0));
    let ok = ["pbw-check", "--builtin", "S3", "--max-len", "4"];
    assert_eq!(run(&ok).status.code(), Some(0));
    // Coideal letters alone do not square b to zero on S2xS2.
    let bad = ["check-differential", "--builtin", "S2xS2", "--max-len", "3"];
    let o = run(&bad);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness"));
    let good = [
        "check-differential",
        "--builtin",
        "S2xS2",
        "--max-len",
        "3",
        "--all-letters",
    ];
    assert_eq!(run(&good).status.code(), Some(0));
}

#[test]
fn input_errors_exit_two() {
    for args in [
        vec!["validate"],
        vec!["validate", "--builtin", "T2"],
        vec!["validate", "--file", "/does/not/exist"],
        vec!["homology", "--builtin", "S2", "--max-degree", "4"],
        vec!["check-lie", "--builtin", "S2", "--max-len", "0"],
        vec!["pbw-check", "--builtin", "S2", "--max-len", "7"],
        vec![
            "qmul",
            "--builtin",
            "S2xS2",
            "N[(a,1)|(a,2)|(a,3)|(a,4)]",
            "N[(b,1)|(b,2)|(b,3)]",
        ],
        vec!["qmul", "--builtin", "S2xS2", "N[(q,1)]", "1"],
        vec!["frobnicate"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn reports_are_deterministic() {
    let args = [
        "check-hopf",
        "--builtin",
        "CP2",
        "--max-len",
        "3",
        "--seed",
        "11",
        "--scrambles",
        "40",
        "--emit",
        "json",
    ];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}
