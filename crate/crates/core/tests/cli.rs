//! End-to-end checks of the `yw` command line through `cli::run`.

use serde_json::Value;
use yw_core::cli::{run, EXIT_GUARD, EXIT_INVALID, EXIT_OK};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn yw(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("yw").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn diagnostic(o: &Output) -> Value {
    let lines: Vec<&str> = o.stderr.lines().collect();
    assert_eq!(
        lines.len(),
        1,
        "expected one diagnostic line, got {:?}",
        o.stderr
    );
    serde_json::from_str(lines[0]).expect("diagnostic is JSON")
}

#[test]
fn overpartitions_of_three_count() {
    let o = yw(&[
        "enumerate",
        "--set",
        "overpartitions",
        "--size",
        "3",
        "--count-only",
    ]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout, "8\n");
}

#[test]
fn enumerate_emits_json_parts() {
    let o = yw(&["enumerate", "--set", "overpartitions", "--size", "2"]);
    assert_eq!(o.code, EXIT_OK);
    let v: Value = serde_json::from_str(o.stdout.trim()).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 4);
    assert_eq!(arr[0], serde_json::json!([{"v": 2, "bar": false}]));
}

#[test]
fn enumerate_text_marks_empty_partition() {
    let o = yw(&[
        "enumerate",
        "--set",
        "partitions",
        "--size",
        "0",
        "--format",
        "text",
    ]);
    assert_eq!(o.stdout, "()\n");
}

#[test]
fn verify_ao_passes_for_d2() {
    let o = yw(&[
        "verify",
        "--identity",
        "ao",
        "--family",
        "D2",
        "--rank",
        "3",
        "--weight",
        "L0",
        "--max-size",
        "15",
    ]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let v: Value = serde_json::from_str(o.stdout.trim()).unwrap();
    assert_eq!(v["identity"], "ao");
    assert_eq!(v["family"], "D2");
    assert_eq!(v["rank"], 3);
    assert_eq!(v["weight"], "L0");
    assert_eq!(v["pass"], true);
    let rows = v["results"].as_array().unwrap();
    assert_eq!(rows.len(), 16);
    for r in rows {
        assert_eq!(r["lhs"], r["rhs"]);
        assert_eq!(r["pass"], true);
    }
}

#[test]
fn verify_tsv_mirrors_json() {
    let base = [
        "verify",
        "--identity",
        "fock",
        "--family",
        "B1",
        "--rank",
        "3",
        "--weight",
        "Ln",
        "--max-size",
        "8",
    ];
    let json = yw(&base);
    let mut tsv_args = base.to_vec();
    tsv_args.extend(["--format", "tsv"]);
    let tsv = yw(&tsv_args);
    assert_eq!(json.code, EXIT_OK);
    assert_eq!(tsv.code, EXIT_OK);
    let v: Value = serde_json::from_str(json.stdout.trim()).unwrap();
    let lines: Vec<&str> = tsv.stdout.lines().collect();
    assert_eq!(
        lines[0],
        "identity\tfamily\trank\tweight\tm\tlhs\trhs\tpass"
    );
    let rows = v["results"].as_array().unwrap();
    assert_eq!(lines.len(), rows.len() + 1);
    for (line, row) in lines[1..].iter().zip(rows) {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols[4], row["m"].to_string());
        assert_eq!(cols[5], row["lhs"].to_string());
        assert_eq!(cols[6], row["rhs"].to_string());
    }
}

#[test]
fn bijection_trace_shows_transpose_and_image() {
    let o = yw(&[
        "bijection",
        "--family",
        "A2odd",
        "--rank",
        "4",
        "--weight",
        "L0",
        "--direction",
        "forward",
        "--input",
        "33,31,28~,28~,21,21,15,9,7,1",
        "--trace",
    ]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(*lines.last().unwrap(), "47,45,42~,28~,15,9,8");
    let tr = lines[..lines.len() - 1]
        .iter()
        .map(|l| serde_json::from_str::<Value>(l).unwrap())
        .find(|v| v["step"] == "lambda_tr")
        .expect("lambda_tr step");
    assert_eq!(tr["value"], serde_json::json!([3, 3, 3, 2, 1, 1, 1]));
}

#[test]
fn bijection_backward_inverts_forward() {
    let o = yw(&[
        "bijection",
        "--family",
        "A2odd",
        "--rank",
        "4",
        "--weight",
        "L0",
        "--direction",
        "backward",
        "--input",
        "47,45,42~,28~,15,9,8",
    ]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert_eq!(o.stdout, "33,31,28~,28~,21,21,15,9,7,1\n");
}

#[test]
fn reductions_are_reachable() {
    let b = yw(&[
        "bijection",
        "--family",
        "A2odd",
        "--rank",
        "4",
        "--weight",
        "L0",
        "--algorithm",
        "b",
        "--input",
        "20,14,14,13,11,7~,7~,7~,5,3",
    ]);
    assert_eq!(b.stdout, "20,13,11,7~,5,3 (2,2,1,1)\n");
    let c = yw(&[
        "bijection",
        "--family",
        "B1",
        "--rank",
        "3",
        "--weight",
        "Ln",
        "--algorithm",
        "c",
        "--input",
        "31,17,15~,15~,13,7,5,3,3",
    ]);
    assert_eq!(c.stdout, "31,17,15~,13,7,5 (5,1,1)\n");
    let f = yw(&[
        "bijection",
        "--family",
        "A2odd",
        "--rank",
        "4",
        "--weight",
        "L0",
        "--algorithm",
        "e",
        "--direction",
        "backward",
        "--input",
        "19,17,14~,8,2,1",
        "--lambda",
        "6,6,4,3",
    ]);
    assert_eq!(f.stdout, "33,31,28,28,21~,21,15,9,7,1\n");
}

#[test]
fn series_matches_product() {
    let o = yw(&[
        "series",
        "--family",
        "A2even",
        "--rank",
        "2",
        "--weight",
        "L0",
        "--max-degree",
        "6",
        "--format",
        "text",
    ]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout.trim().split(',').count(), 7);
    assert!(o.stdout.starts_with("1,1,1,"));
}

#[test]
fn selfcheck_passes() {
    let o = yw(&["selfcheck"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stdout);
    assert!(!o.stdout.contains("FAIL"));
    assert!(o.stdout.lines().count() > 20);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "--jobs",
        "3",
        "verify",
        "--identity",
        "ao",
        "--family",
        "B1",
        "--rank",
        "3",
        "--weight",
        "L1",
        "--max-size",
        "12",
    ];
    let a = yw(&args);
    let b = yw(&args);
    let c = yw(&args[2..]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn invalid_spec_exit_code() {
    for args in [
        &[
            "enumerate",
            "--set",
            "ao1",
            "--family",
            "E8",
            "--rank",
            "3",
            "--weight",
            "L0",
            "--size",
            "3",
        ][..],
        &[
            "enumerate",
            "--set",
            "ao1",
            "--family",
            "D2",
            "--rank",
            "0",
            "--weight",
            "L0",
            "--size",
            "3",
        ][..],
        &["enumerate", "--set", "ao1", "--size", "3"][..],
        &[
            "bijection",
            "--family",
            "A2odd",
            "--rank",
            "4",
            "--weight",
            "L0",
            "--input",
            "8,x",
        ][..],
        &[
            "bijection",
            "--family",
            "A2odd",
            "--rank",
            "4",
            "--weight",
            "L0",
            "--input",
            "8,8",
        ][..],
        &["frobnicate"][..],
        &["--jobs", "0", "selfcheck"][..],
    ] {
        let o = yw(args);
        assert_eq!(o.code, EXIT_INVALID, "{args:?}");
        let d = diagnostic(&o);
        assert_eq!(d["error"], "invalid-spec");
        assert_eq!(d["code"], EXIT_INVALID);
    }
}

#[test]
fn series_overflow_trips_guard() {
    let o = yw(&[
        "series",
        "--family",
        "D2",
        "--rank",
        "3",
        "--weight",
        "L0",
        "--max-degree",
        "2000",
    ]);
    assert_eq!(o.code, EXIT_GUARD, "{}", o.stderr);
    assert_eq!(diagnostic(&o)["error"], "resource-guard");
}

#[test]
fn max_space_env_trips_guard() {
    let o = std::process::Command::new(env!("CARGO_BIN_EXE_yw"))
        .args([
            "enumerate",
            "--set",
            "partitions",
            "--size",
            "30",
            "--count-only",
        ])
        .env("YW_MAX_SPACE", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(EXIT_GUARD));
    assert!(o.stdout.is_empty());
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    let d: Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(d["error"], "resource-guard");
}

#[test]
fn binary_matches_library_output() {
    let o = std::process::Command::new(env!("CARGO_BIN_EXE_yw"))
        .args([
            "enumerate",
            "--set",
            "overpartitions",
            "--size",
            "3",
            "--count-only",
        ])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "8\n");
}

#[test]
fn help_exits_zero() {
    let o = yw(&["--help"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("enumerate"));
}
