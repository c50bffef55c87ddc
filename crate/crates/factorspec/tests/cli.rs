use std::path::PathBuf;
use std::process::{Command, Output};

use factorspec_core::{graph6, Graph};
use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_factorspec"))
        .args(args)
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = bin(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    });
    (v, out.status.code().unwrap())
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn tmp(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("factorspec-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn check_k3_fractional() {
    let (v, code) = json(&[
        "check",
        "--g6",
        "Bw",
        "--a",
        "1",
        "--b",
        "2",
        "--mode",
        "fractional",
        "--json",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["min_value"], -1);
    assert_eq!(v["witness_s"].as_array().unwrap().len(), 1);

    let out = bin(&[
        "check",
        "--g6",
        "Bw",
        "--a",
        "1",
        "--b",
        "2",
        "--mode",
        "fractional",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("fails") && text.contains("{0}"), "{text}");
}

#[test]
fn check_holds_exits_zero() {
    let k6 = graph6::encode_string(&Graph::complete(6));
    let (v, code) = json(&["check", "--g6", &k6, "--a", "1", "--b", "2", "--json"]);
    assert_eq!((v["verdict"].as_bool(), code), (Some(true), 0));
}

#[test]
fn check_edge_list_and_functions() {
    let edges = tmp("c4.txt", "# 4-cycle\n4\n0 1\n1 2\n2 3\n3 0\n");
    // p = (2,1,1,1) has no fractional factor on C_4
    let (v, code) = json(&[
        "check",
        "--edges",
        &edges,
        "--a",
        "1",
        "--b",
        "2",
        "--mode",
        "fractional",
        "--json",
    ]);
    assert_eq!((v["n"].as_u64(), code), (Some(4), 1));
    let c4 = graph6::encode_string(&Graph::cycle(4));
    let (w, _) = json(&[
        "check",
        "--g6",
        &c4,
        "--a",
        "1",
        "--b",
        "2",
        "--mode",
        "fractional",
        "--json",
    ]);
    assert_eq!(v, w);

    let twos = tmp("twos.txt", "2 2 2 2\n");
    let (v, code) = json(&[
        "check", "--edges", &edges, "--mode", "gf", "--g", &twos, "--f", &twos, "--json",
    ]);
    assert_eq!((v["verdict"].as_bool(), code), (Some(true), 0));
    let threes = tmp("threes.txt", "3 3 3 3\n");
    let (_, code) = json(&[
        "check", "--edges", &edges, "--mode", "gf", "--g", &threes, "--f", &threes, "--json",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn rho_hnb_exceeds() {
    let (v, code) = json(&["rho", "--hnb", "48,4", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["n_minus_2"], 46);
    assert_eq!(v["exceeds"], true);
    let rho = v["rho"].as_f64().unwrap();
    assert!(46.0 < rho && rho < 47.0);

    let (v, _) = json(&["rho", "--g6", "Bw", "--json"]);
    assert_eq!(v["rho"].as_f64(), Some(2.0));
    assert_eq!(v["exceeds"], true);
}

#[test]
fn construct_hnb() {
    let out = bin(&["construct", "hnb", "--n", "6", "--b", "3"]);
    assert!(out.status.success());
    let g = graph6::parse(String::from_utf8(out.stdout).unwrap().trim().as_bytes()).unwrap();
    assert_eq!(g.degrees(), vec![2, 5, 5, 4, 4, 4]);
    let (v, _) = json(&["construct", "g2", "--b", "2", "--n", "20", "--json"]);
    assert_eq!(
        (
            v["left"].as_u64(),
            v["center"].as_u64(),
            v["right"].as_u64()
        ),
        (Some(2), Some(8), Some(10))
    );
}

#[test]
fn verify_grids_pass() {
    for args in [
        &["verify", "lemma24", "--n-max", "12", "--json"][..],
        &["verify", "lemma23", "--b-max", "3", "--json"],
        &["verify", "quotient", "--n", "10,30", "--b", "2,3", "--json"],
        &["verify", "k1join", "--n", "10,20", "--json"],
    ] {
        let (v, code) = json(args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(v["failures"], 0);
    }
    let (v, code) = json(&[
        "verify",
        "hong",
        "--input",
        &data("graphs5.g6"),
        &data("graphs6.g6"),
        "--json",
    ]);
    assert_eq!((v["cases_run"].as_u64(), code), (Some(21 + 112), 0));
}

#[test]
fn suite_and_mine_json_is_deterministic() {
    let args = [
        "suite",
        "--input",
        &data("graphs5.g6"),
        &data("graphs6.g6"),
        "--nmax",
        "6",
        "--grid",
        "1:2,2:3",
        "--json",
    ];
    let first = bin(&args);
    assert!(first.status.success());
    let (v, _) = json(&args);
    assert_eq!(v["cases_run"], 2 * (21 + 112));
    assert_eq!(v["mismatches"].as_array().unwrap().len(), 0);
    assert!(v.get("elapsed").is_none());

    let single = Command::new(env!("CARGO_BIN_EXE_factorspec"))
        .args(args)
        .env("FACTORSPEC_WORKERS", "1")
        .output()
        .unwrap();
    assert_eq!(first.stdout, single.stdout);

    let mine = [
        "mine",
        "--input",
        &data("graphs6.g6"),
        "--a",
        "1",
        "--b",
        "2",
        "--mode",
        "fractional",
        "--json",
    ];
    let (v, code) = json(&mine);
    assert_eq!(code, 0);
    assert_eq!(v["params"]["n"], 6);
    assert_eq!(bin(&mine).stdout, bin(&mine).stdout);
    let (timed, _) = json(&[
        "mine",
        "--input",
        &data("graphs4.g6"),
        "--a",
        "1",
        "--b",
        "2",
        "--timing",
        "--json",
    ]);
    assert!(timed["elapsed"].is_number());
}

#[test]
fn usage_and_input_errors_exit_two() {
    for args in [
        &["check", "--bogus"][..],
        &["check", "--g6", "Bw"],
        &["frobnicate"],
        &["check", "--g6", "~~~~", "--a", "1", "--b", "2"],
        &["suite", "--input", "/definitely/missing.g6"],
        &["rho", "--hnb", "48"],
        &["construct", "hnb", "--n", "3", "--b", "5"],
    ] {
        let out = bin(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let bad = tmp("mixed.g6", "Bw\nZZZ\n");
    let out = bin(&["mine", "--input", &bad, "--a", "1", "--b", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let out = bin(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}
