use std::process::{Command, Output};

use schubert_mf::io::{
    ClassifyJson, CoeffJson, MaxDegreeJson, MfCheckJson, MultipathJson, SchubertVectorJson,
    SingleDivisorJson, TraceJson, VerifyJson,
};
use schubert_mf::multipath::is_multipath;
use schubert_mf::{Kind, RootSystem};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert-mf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn coeff_text_and_errors() {
    let out = run(&["coeff", "-r", "A2", "-w", "1 2 1", "-n", "2,1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");

    let out = run(&["coeff", "-r", "A2", "-w", "1 2 1", "-n", "0,0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degree mismatch"));

    for bad in [
        vec!["coeff", "-r", "B2", "-w", "1", "-n", "1,0"],
        vec!["coeff", "-r", "A2", "-w", "1 x", "-n", "2,0"],
        vec!["coeff", "-r", "A2", "-w", "1", "-n", "1"],
        vec!["coeff", "-r", "A2"],
        vec!["frobnicate"],
    ] {
        assert_eq!(run(&bad).status.code(), Some(2), "{bad:?}");
    }
}

#[test]
fn coeff_methods_agree() {
    for method in ["pieri", "sorting", "checked"] {
        let out = run(&["--format", "json", "coeff", "-r", "A3", "-w", "1 2 1 3 2 1", "-n", "3,2,1", "--method", method]);
        let parsed: CoeffJson = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(parsed.coeff.to_string(), "1", "{method}");
    }
}

#[test]
fn max_degree_for_e8() {
    let out = run(&["max-degree", "-r", "E8"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().next(), Some("34"));

    let out = run(&["--format", "json", "max-degree", "-r", "E8"]);
    let parsed: MaxDegreeJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed.max_degree, 34);
    let rs = RootSystem::build(Kind::E, 8).unwrap();
    let mp = parsed.multipath.to_multipath(&rs).unwrap();
    assert!(is_multipath(&rs, &mp));
    assert_eq!(mp.total_length(), 34);

    let out = run(&["--format", "json", "max-degree", "-r", "A3", "--involved", "2"]);
    let parsed: MaxDegreeJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed.max_degree, 2);
    assert_eq!(parsed.multipath, MultipathJson(vec![vec![2, 1]]));
}

#[test]
fn classify_outputs_a_trace() {
    let out = run(&["--format", "json", "classify", "-r", "A2", "-w", "1 2 1", "-n", "2,1", "--checked"]);
    assert!(out.status.success());
    let parsed: ClassifyJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed.verdict, "UNIT");
    let trace: TraceJson = parsed.trace.unwrap();
    assert_eq!(trace.layers.len(), 2);
    assert_eq!(trace.layers[0].indices, vec![1]);

    let out = run(&["classify", "-r", "A2", "-w", "1 2 1", "-n", "3,0"]);
    assert_eq!(stdout(&out).trim(), "NON_UNIT 0");
}

#[test]
fn expand_round_trips() {
    let out = run(&["--format", "json", "expand", "-r", "A3", "-n", "1,1,1"]);
    let parsed: SchubertVectorJson = serde_json::from_str(&stdout(&out)).unwrap();
    let rs = RootSystem::build(Kind::A, 3).unwrap();
    let v = parsed.to_vector(&rs).unwrap();
    assert_eq!(v, schubert_mf::expand_monomial(&rs, &[1, 1, 1]).unwrap());
    let again = SchubertVectorJson::from_vector(&rs, &v);
    assert_eq!(again, parsed);
}

#[test]
fn mf_check_and_single_divisor() {
    let out = run(&["--format", "json", "mf-check", "-r", "A2", "-n", "2,1"]);
    let parsed: MfCheckJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(parsed.multiplicity_free);
    assert_eq!(parsed.witness.as_deref(), Some("1 2 1"));
    let out = run(&["mf-check", "-r", "A2", "-n", "3,0"]);
    assert_eq!(stdout(&out).trim(), "NONE");

    let out = run(&["single-divisor", "-r", "D4", "-i", "1"]);
    assert_eq!(stdout(&out).trim(), "3");
    let out = run(&["--format", "json", "single-divisor", "-r", "A2", "-i", "1", "-w", "2 1"]);
    let parsed: SingleDivisorJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed.max_power, 2);
    assert_eq!(parsed.multiplicity_free, Some(false));
    let out = run(&["--format", "json", "single-divisor", "-r", "A2", "-i", "2", "-w", "2 1"]);
    let parsed: SingleDivisorJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed.sequence, Some(vec![vec![0, 1], vec![1, 1]]));
}

#[test]
fn verify_suite_passes() {
    let out = run(&["--format", "json", "verify", "-r", "A3", "--suite", "main-theorem"]);
    assert!(out.status.success());
    let parsed: VerifyJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed.reports.len(), 1);
    assert!(parsed.reports[0].checked > 0);
    assert_eq!(parsed.reports[0].failures, 0);
    assert_eq!(run(&["verify", "-r", "A3", "--suite", "bogus"]).status.code(), Some(2));
}

#[test]
fn enumeration_cap_is_enforced() {
    let out = Command::new(env!("CARGO_BIN_EXE_schubert-mf"))
        .args(["verify", "-r", "A3", "--suite", "main-theorem"])
        .env("SCHUBERT_MF_MAX_ELEMENTS", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["--format", "json", "expand", "-r", "D4", "-n", "2,1,1,1"],
        vec!["--format", "json", "classify", "-r", "A3", "-w", "1 2 1 3 2 1", "-n", "3,2,1"],
        vec!["--format", "json", "max-degree", "-r", "E7"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
