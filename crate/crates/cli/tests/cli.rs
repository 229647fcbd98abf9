use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn grpf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grpf")).args(args).output().expect("binary runs")
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn report<'a>(doc: &'a Value, claim: &str) -> &'a Value {
    doc["reports"].as_array().unwrap().iter().find(|r| r["claim_id"] == claim).unwrap()
}

#[test]
fn gen_writes_schema_valid_instance() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("inst.json");
    let out = grpf(&["gen", "--seed", "7", "--prime", "31", "-o", p.to_str().unwrap()]);
    assert!(out.status.success());
    let v = read_json(&p);
    assert_eq!(v["W"].as_array().unwrap().len(), 7);
    assert_eq!(v["M"].as_array().unwrap().len(), 14);
    assert_eq!(v["p"], 31);
    assert_eq!(v["provenance"], "random");
}

#[test]
fn verify_degrees_reports_global_invariants() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("inst.json");
    let rep = dir.path().join("rep.json");
    assert!(grpf(&["gen", "--seed", "7", "--prime", "31", "-o", inst.to_str().unwrap()]).status.success());
    let out = grpf(&["verify", inst.to_str().unwrap(), "--checks", "degrees", "-o", rep.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc = read_json(&rep);
    let r = report(&doc, "degrees");
    assert_eq!(r["verdict"], "pass");
    let c = &r["counters"];
    assert_eq!((c["G.proj_dim"].as_i64(), c["G.degree"].as_i64()), (Some(10), Some(42)));
    assert_eq!((c["Pf.proj_dim"].as_i64(), c["Pf.degree"].as_i64()), (Some(17), Some(14)));
    assert_eq!(doc["instance_hash"].as_str().unwrap().len(), 64);
}

#[test]
fn singular_instance_smoothness_report() {
    let dir = tempfile::tempdir().unwrap();
    let s = dir.path().join("s.json");
    let rep = dir.path().join("rep.json");
    assert!(grpf(&["gen", "--singular", "--seed", "3", "-o", s.to_str().unwrap()]).status.success());
    assert_eq!(read_json(&s)["provenance"], "engineered");
    let out = grpf(&["verify", s.to_str().unwrap(), "--checks", "smoothness", "-o", rep.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc = read_json(&rep);
    let r = report(&doc, "smoothness");
    assert_eq!(r["verdict"], "pass");
    assert_eq!(r["counters"]["witnesses_singular_both_routes"], 1);
    assert!(r["witnesses"].as_array().unwrap().iter().any(|w| w.get("instance_hash").is_some()));
}

#[test]
fn reruns_are_byte_identical_and_order_independent() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (path, checks) in [(&a, "tangency,chart,schubert"), (&b, "schubert,tangency,chart")] {
        let out = grpf(&["verify", "--seed", "5", "--checks", checks, "--no-timings", "-o", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let doc = read_json(&a);
    let ids: Vec<&str> = doc["reports"].as_array().unwrap().iter().map(|r| r["claim_id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn malformed_instance_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("inst.json");
    assert!(grpf(&["gen", "--seed", "1", "-o", good.to_str().unwrap()]).status.success());
    let mut v = read_json(&good);
    v["W"][2][3] = Value::from(999);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    let out = grpf(&["verify", bad.to_str().unwrap(), "--checks", "chart"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("W[2][3]"));

    let mut v = read_json(&good);
    v.as_object_mut().unwrap().remove("seed");
    std::fs::write(&bad, v.to_string()).unwrap();
    let out = grpf(&["verify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("seed"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(grpf(&["verify", "--checks", "nope"]).status.code(), Some(2));
    assert_eq!(grpf(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(grpf(&["gen", "--prime", "9"]).status.code(), Some(2));
    assert_eq!(grpf(&["verify", "/nonexistent/inst.json"]).status.code(), Some(2));
    assert_eq!(grpf(&["verify", "--trials", "0"]).status.code(), Some(2));
}

#[test]
fn rank_two_pf_branch_is_a_reasoned_skip() {
    let out = grpf(&["verify", "--seed", "4", "--checks", "pf-tangent", "--no-timings"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let r = report(&doc, "pf-tangent-rank2");
    assert_eq!(r["verdict"], "skipped");
    assert!(r["witnesses"].to_string().contains("singular point of Pf"));
    assert_eq!(report(&doc, "pf-tangent")["verdict"], "pass");
}

fn form_matrix(coords: &[Value], p: i64) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; 7]; 7];
    let mut k = 0;
    for i in 0..7 {
        for j in i + 1..7 {
            let c = coords[k].as_i64().unwrap();
            m[i][j] = c;
            m[j][i] = (p - c) % p;
            k += 1;
        }
    }
    m
}

#[test]
fn smooth_points_posing_as_witnesses_fail_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("inst.json");
    assert!(grpf(&["gen", "--seed", "6", "-o", inst.to_str().unwrap()]).status.success());
    let xs: Value = serde_json::from_slice(&grpf(&["sample", inst.to_str().unwrap(), "--what", "x", "--count", "1"]).stdout).unwrap();
    let ys: Value = serde_json::from_slice(&grpf(&["sample", inst.to_str().unwrap(), "--what", "y", "--count", "1"]).stdout).unwrap();
    let mut v = read_json(&inst);
    v["provenance"] = Value::from("engineered");
    v["witnesses"] = serde_json::json!({
        "x": xs["points"][0]["point"]["coords"],
        "y": form_matrix(ys["points"][0]["coords"].as_array().unwrap(), 31),
    });
    let fake = dir.path().join("fake.json");
    std::fs::write(&fake, v.to_string()).unwrap();
    let out = grpf(&["verify", fake.to_str().unwrap(), "--checks", "smoothness"]);
    assert_eq!(out.status.code(), Some(1));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let r = report(&doc, "smoothness");
    assert_eq!(r["verdict"], "fail");
    assert_eq!(r["counters"]["witnesses_singular_both_routes"], 0);
    assert_eq!(doc["all_passed"], false);
}

#[test]
fn sample_dumps_points() {
    let out = grpf(&["sample", "--seed", "2", "--what", "x", "--count", "5"]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["points"].as_array().unwrap().len(), 5);
    assert_eq!(doc["stats"]["emitted"], 5);
    let out = grpf(&["sample", "--seed", "2", "--what", "curve", "--count", "4"]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(doc["y"].is_object());
    assert!(!doc["points"].as_array().unwrap().is_empty());
}

#[test]
fn curve_subcommand() {
    let out = grpf(&["curve", "--seed", "2", "--no-timings"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let r = report(&doc, "curves");
    assert_eq!(r["verdict"], "pass");
    assert_eq!(r["counters"]["degree"], 14);
}
