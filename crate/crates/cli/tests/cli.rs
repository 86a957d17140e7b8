use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn balrig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_balrig"))
        .args(args)
        .env_remove("BALRIG_SEED")
        .output()
        .expect("binary runs")
}

fn json_out(args: &[&str]) -> Value {
    let out = balrig(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn error_of(out: &Output) -> Value {
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_slice(&out.stderr).expect("stderr is json");
    v["error"].clone()
}

const K33: &str = r#"{"a_size":3,"b_size":3,"edges":[[1,1],[1,2],[1,3],[2,1],[2,2],[2,3],[3,1],[3,2],[3,3]]}"#;

#[test]
fn k33_is_22_rigid_with_one_stress() {
    let r = json_out(&["analyze", "--graph", K33, "-k", "2", "-l", "2"]);
    assert_eq!(r["rank"], 8);
    assert_eq!(r["max_rank"], 8);
    assert_eq!(r["is_rigid"], true);
    assert_eq!(r["is_stress_free"], false);
    assert_eq!(r["stress_dim"], 1);
    assert_eq!(r["trials"], 3);
}

#[test]
fn explicit_order_cross_check_agrees() {
    let r = json_out(&["analyze", "--graph", K33, "-k", "2", "-l", "2", "--order", "1 2 1' 2' 3 3'"]);
    assert_eq!(r["shift_check"]["agrees"], true);
    let out = balrig(&["analyze", "--graph", K33, "-k", "2", "-l", "2", "--order", "1 1' 3 2 2' 3'"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn stresses_are_listed_with_their_edges() {
    let r = json_out(&["analyze", "--graph", K33, "-k", "2", "-l", "2", "--stresses"]);
    let basis = r["stresses"]["basis"].as_array().unwrap();
    assert_eq!(basis.len(), 1);
    assert_eq!(basis[0].as_array().unwrap().len(), 9);
    assert_eq!(r["stresses"]["edges"][0], serde_json::json!([1, 1]));
}

#[test]
fn shifting_keeps_the_edge_count() {
    for seed in ["1", "2", "3"] {
        let g = json_out(&["generate", "random-bipartite", "--n", "5", "--m", "4", "--edges", "11", "--seed", seed]);
        let s = json_out(&["shift", "--graph", &g.to_string()]);
        assert_eq!(s["edges"].as_array().unwrap().len(), 11);
        assert_eq!(s["metadata"]["seed"], 0);
        assert!(s["metadata"]["order"].is_string());
    }
}

#[test]
fn shifting_a_complex_keeps_the_facet_count() {
    let s = json_out(&["shift", "--family", "cross-polytope d=3"]);
    assert_eq!(s["facets"].as_array().unwrap().len(), 8);
    assert_eq!(s["color_sizes"], serde_json::json!([2, 2, 2]));
}

#[test]
fn generate_cycle_is_c4() {
    let out = balrig(&["generate", "cycle", "--n", "2"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "{\"a_size\":2,\"b_size\":2,\"edges\":[[1,1],[1,2],[2,1],[2,2]]}\n");
}

#[test]
fn graph_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_balrig"))
        .args(["laman", "--graph", "-", "-k", "1", "-l", "1"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(br#"{"a_size":2,"b_size":1,"edges":[[1,1],[2,1]]}"#).unwrap();
    let out = child.wait_with_output().unwrap();
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["holds"], true);
}

#[test]
fn laman_reports_a_witness() {
    // K_{3,3} has 9 > 1*3 + 1*3 - 1 edges; the count fails, and so does
    // the hereditary bound on the whole graph.
    let r = json_out(&["laman", "--graph", K33, "-k", "1", "-l", "1"]);
    assert_eq!(r["holds"], false);
    assert_eq!(r["count_ok"], false);
}

#[test]
fn mcheck_on_the_octahedron() {
    let r = json_out(&["mcheck", "--family", "cross-polytope d=3", "-l", "2"]);
    assert_eq!(r["rows_independent"], true);
    let h = json_out(&["mcheck", "--family", "cross-polytope d=3", "--heawood"]);
    assert_eq!(h["inequality_holds"], true);
}

#[test]
fn identical_inputs_give_identical_bytes() {
    let args = ["shift", "--family", "random-bipartite n=6 m=6 edges=20", "--seed", "11"];
    assert_eq!(balrig(&args).stdout, balrig(&args).stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_balrig"))
        .args(["shift", "--family", "random-bipartite n=6 m=6 edges=20"])
        .env("BALRIG_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(env.stdout, balrig(&args).stdout);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["analyze", "--graph", K33, "-k", "1"][..],
        &["analyze", "--graph", K33, "-k", "1", "-l", "1", "--prime", "15"],
        &["analyze", "--graph", K33, "-k", "1", "-l", "1", "--trials", "0"],
        &["analyze", "--graph", K33, "--family", "cycle n=2", "-k", "1", "-l", "1"],
        &["frobnicate"],
    ] {
        let out = balrig(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert_eq!(error_of(&out)["kind"], "usage");
    }
}

#[test]
fn input_errors_exit_3() {
    for args in [
        &["analyze", "--graph", "/nonexistent/g.json", "-k", "1", "-l", "1"][..],
        &["analyze", "--graph", "{\"a_size\":1}", "-k", "1", "-l", "1"],
        &["analyze", "--graph", r#"{"a_size":1,"b_size":1,"edges":[[0,1]]}"#, "-k", "1", "-l", "1"],
        &["analyze", "--graph", r#"{"a_size":1,"b_size":1,"edges":[[2,1]]}"#, "-k", "1", "-l", "1"],
        &["generate", "no-such-family"],
        &["generate", "cycle"],
    ] {
        let out = balrig(args);
        assert_eq!(out.status.code(), Some(3), "{args:?}");
        assert_eq!(error_of(&out)["code"], 3);
    }
}

#[test]
fn size_cap_exits_4() {
    let out = balrig(&["laman", "--family", "complete-bipartite n=23 m=23", "-k", "1", "-l", "1"]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(error_of(&out)["kind"], "size-cap");
}

#[test]
fn trial_disagreement_exits_5() {
    // Over F_2 the random specializations are far from generic.
    let out = balrig(&[
        "analyze", "--family", "random-bipartite n=5 m=5 edges=12", "-k", "2", "-l", "2", "--prime", "2", "--seed", "2",
    ]);
    assert_eq!(out.status.code(), Some(5));
    assert_eq!(error_of(&out)["kind"], "trial-disagreement");
}

#[test]
fn selftest_single_criteria() {
    let r = json_out(&["selftest", "--criterion", "1", "--criterion", "9"]);
    assert_eq!(r["failed"], 0);
    assert_eq!(r["criteria"].as_array().unwrap().len(), 3);
    let table = balrig(&["selftest", "--criterion", "8", "--format", "table"]);
    let text = String::from_utf8(table.stdout).unwrap();
    assert!(text.contains("[PASS]  8"));
    assert!(text.ends_with("2/2 passed\n"));
}

#[test]
fn selftest_rejects_a_corrupted_prime() {
    let out = balrig(&["selftest", "--prime", "4611686018427387849"]);
    assert_eq!(out.status.code(), Some(1));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["criteria"][0]["title"], "prime field arithmetic");
    assert_eq!(r["criteria"][0]["passed"], false);
}

#[test]
fn selftest_seed_override_is_reproducible() {
    let a = balrig(&["selftest", "--criterion", "2", "--seed", "5"]);
    let b = Command::new(env!("CARGO_BIN_EXE_balrig"))
        .args(["selftest", "--criterion", "2"])
        .env("BALRIG_SEED", "5")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn help_exits_0() {
    let out = balrig(&["--help"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("selftest"));
}
