use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use upq_packets::cli::{run, EXIT_BAD_INPUT, EXIT_INTERNAL, EXIT_OK};

fn cli(args: &[&str]) -> (i32, String) {
    let out = run(std::iter::once("upq-packets").chain(args.iter().copied()));
    (out.code, out.stdout)
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, text) = cli(args);
    (code, serde_json::from_str(&text).expect("stdout is JSON"))
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(path).expect("golden file")
}

#[test]
fn classify_psi_trivial_parameter() {
    let (code, v) = json(&["classify-psi", "--p", "1", "--q", "1", "--psi", r#"[{"t":0,"a":2}]"#]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["contains"], true);
    assert_eq!(v["lowest_k_type"], serde_json::json!([0, 0]));
}

#[test]
fn classify_lambda_finds_one_parameter() {
    let (code, v) = json(&["classify-lambda", "--p", "1", "--q", "1", "--lambda", "[1,-1]"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        v,
        serde_json::json!([{"p":1,"q":1,"summands":[{"t":1,"a":1},{"t":-1,"a":1}]}])
    );
}

#[test]
fn verify_small_window_is_clean() {
    let (code, v) = json(&["verify", "--max-n", "2", "--window", "2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["mismatches"], serde_json::json!([]));
    assert!(v["instances_checked"].as_u64().unwrap() > 0);
}

#[test]
fn output_matches_golden_files() {
    let cases: [(&str, &[&str]); 4] = [
        ("u11_chi0_s2.json", &["classify-psi", "--p", "1", "--q", "1", "--psi", r#"[{"t":0,"a":2}]"#]),
        (
            "u11_chi1_s1_chim1_s1.json",
            &["classify-psi", "--p", "1", "--q", "1", "--psi", r#"[{"t":1,"a":1},{"t":-1,"a":1}]"#],
        ),
        ("u11_lambda_1_0.json", &["classify-lambda", "--p", "1", "--q", "1", "--lambda", "[1,0]"]),
        (
            "u12_chi1_s2_chim2_s1.json",
            &["classify-psi", "--p", "1", "--q", "2", "--psi", r#"[{"t":1,"a":2},{"t":-2,"a":1}]"#],
        ),
    ];
    for (file, args) in cases {
        let (code, text) = cli(args);
        assert_eq!(code, EXIT_OK, "{file}");
        assert_eq!(text, golden(file), "{file}");
        assert_eq!(cli(args).1, text, "{file} is not byte-stable");
    }
}

#[test]
fn ascii_and_json_agree() {
    let args = ["classify-psi", "--p", "1", "--q", "2", "--psi", r#"[{"t":-2,"a":1},{"t":1,"a":2}]"#];
    let (_, v) = json(&args);
    let lam: Vec<i64> = serde_json::from_value(v["lowest_k_type"].clone()).unwrap();
    let (_, text) = cli(&[&["--output", "ascii"][..], &args[..]].concat());
    assert_eq!(lam, vec![1, 0, -1]);
    assert!(text.contains("(1 | 0,-1)"), "{text}");

    let tab = ["tableau", "--p", "1", "--q", "2", "--blocks", "[[1,1],[0,1]]", "--values", "[0,0]"];
    let (_, v) = json(&tab);
    let (_, text) = cli(&[&["--output", "ascii"][..], &tab[..]].concat());
    assert_eq!(v["outcome"]["kind"], "non_zero");
    assert!(text.starts_with("[1+][-1-]\n[0-]\n"), "{text}");
}

#[test]
fn packet_lists_every_member() {
    let (code, v) = json(&["packet", "--p", "1", "--q", "1", "--psi", r#"[{"t":1,"a":1},{"t":-1,"a":1}]"#]);
    assert_eq!(code, EXIT_OK);
    let members = v.as_array().unwrap();
    assert_eq!(members.len(), 2);
    assert!(members.iter().all(|m| m["nonzero"] == true));
}

#[test]
fn bad_input_exits_with_two() {
    let cases: [&[&str]; 5] = [
        &["classify-psi", "--p", "1", "--q", "1", "--psi", r#"[{"t":1,"a":2}]"#],
        &["classify-psi", "--p", "1", "--q", "1", "--psi", "not json"],
        &["classify-lambda", "--p", "1", "--q", "1", "--lambda", "[0,5]"],
        &["tableau", "--p", "1", "--q", "1", "--blocks", "[[1,0]]", "--values", "[0]"],
        &["frobnicate"],
    ];
    for args in cases {
        let (code, v) = json(args);
        assert_eq!(code, EXIT_BAD_INPUT, "{args:?}");
        assert!(v["error"]["kind"].is_string() && v["error"]["message"].is_string());
    }
    let (_, v) = json(&["classify-psi", "--p", "1", "--q", "1", "--psi", r#"[{"t":0,"a":1},{"t":1,"a":1}]"#]);
    assert!(v["error"]["message"].as_str().unwrap().contains("summand 1"));
}

#[test]
fn closed_form_inconsistency_exits_with_three() {
    let (code, v) = json(&[
        "classify-psi",
        "--p",
        "3",
        "--q",
        "3",
        "--psi",
        r#"[{"t":0,"a":2},{"t":-1,"a":3},{"t":-1,"a":1}]"#,
    ]);
    assert_eq!(code, EXIT_INTERNAL);
    assert_eq!(v["error"]["kind"], "inconsistency");
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_upq-packets");
    let ok = Command::new(bin)
        .args(["classify-lambda", "--p", "1", "--q", "1", "--lambda", "[0,0]"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    let bad = Command::new(bin).args(["verify", "--max-n", "0", "--window", "1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_BAD_INPUT));
}
