use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn fqring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fqring"))
        .args(args)
        .env_remove("FQRING_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = fqring(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn make_to(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let path_str = path.to_str().unwrap().to_string();
    let mut full = vec!["make"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &path_str]);
    let out = fqring(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path_str
}

#[test]
fn make_s_spec() {
    let out = fqring(&["make", "S", "--p", "2"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"field\":{\"p\":2,\"k\":1},\"dim\":3,\"unity\":[1,0,0],\"table\":\
         [[[1,0,0],[0,1,0],[0,0,1]],[[0,1,0],[0,1,0],[0,1,0]],[[0,0,1],[0,0,1],[0,0,1]]]}\n"
    );
    let zm = stdout(&fqring(&["make", "Zm", "--moduli", "4"]));
    assert_eq!(zm, "{\"moduli\":[4],\"unity\":[1],\"table\":[[[1]]]}\n");
    let m2 = json(&["make", "matrix", "--p", "2", "--n", "2"]);
    assert_eq!(m2["dim"], 4);
}

#[test]
fn analyze_reports() {
    let dir = tempfile::tempdir().unwrap();
    let s = make_to(dir.path(), "s.json", &["S", "--p", "2"]);
    let a = json(&["--json", "analyze", &s]);
    assert_eq!(a["cardinality"], 8);
    assert_eq!(a["center"], 2);
    assert_eq!(a["idempotents"], 6);
    assert_eq!(a["radical"], 2);
    assert_eq!(a["densities"]["r_q"], "3/4");

    let m2 = make_to(dir.path(), "m2.json", &["matrix", "--p", "2", "--n", "2"]);
    let a = json(&["--json", "analyze", &m2]);
    assert_eq!(a["idempotents"], 8);
    assert_eq!(a["densities"]["r_q"], "1/2");

    let f3f2 = make_to(dir.path(), "f3f2.json", &["Zm", "--moduli", "3,2"]);
    let a = json(&["--json", "analyze", &f3f2]);
    assert_eq!(a["idempotents"], 4);
    assert_eq!(a["densities"]["i"], "2/3");
}

#[test]
fn make_then_analyze_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let s = make_to(dir.path(), "s.json", &["S", "--p", "3"]);
    let first = stdout(&fqring(&["analyze", &s]));
    let again = make_to(dir.path(), "s2.json", &["S", "--p", "3"]);
    assert_eq!(fs::read(&s).unwrap(), fs::read(&again).unwrap());
    assert_eq!(first, stdout(&fqring(&["analyze", &again])));

    let f = make_to(dir.path(), "f.json", &["qring", "--p", "3", "--n", "1"]);
    let prod = make_to(dir.path(), "p.json", &["product", "--left", &s, "--right", &f]);
    let a = json(&["--json", "analyze", &prod]);
    assert_eq!(a["cardinality"], 81);
    assert_eq!(a["factor_sizes"], serde_json::json!([3, 27]));
}

#[test]
fn verify_catalog_passes() {
    let out = fqring(&["verify", "--catalog"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains(", 0 failing"));

    let all = json(&["--json", "verify", "--catalog"]);
    let rings = all.as_array().unwrap();
    assert_eq!(rings.len(), 26);
    for ring in rings {
        for r in ring["reports"].as_array().unwrap() {
            assert_ne!(r["verdict"], "fails", "{r}");
        }
    }
}

#[test]
fn verify_single_spec_table() {
    let dir = tempfile::tempdir().unwrap();
    let s = make_to(dir.path(), "s.json", &["S", "--p", "2"]);
    let out = fqring(&["verify", &s]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("solution_density_bound"));
    assert!(text.contains("equality_r_q"));
}

#[test]
fn corrupted_table_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    // e_1 e_1 = e_2 and e_1 e_2 = e_1 break associativity
    fs::write(
        &path,
        r#"{"field":{"p":2,"k":1},"dim":3,"unity":[1,0,0],"table":[[[1,0,0],[0,1,0],[0,0,1]],[[0,1,0],[0,0,1],[0,1,0]],[[0,0,1],[0,0,0],[0,0,0]]]}"#,
    )
    .unwrap();
    let out = fqring(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("!="));

    fs::write(&path, "{\"moduli\":[4],\n\"unity\":[1],\n\"table\":[[[1]]],}").unwrap();
    let out = fqring(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(fqring(&["make", "S", "--p", "2", "--bogus"]).status.code(), Some(2));
    assert_eq!(fqring(&["make", "octonions"]).status.code(), Some(2));
    assert_eq!(fqring(&["make", "S"]).status.code(), Some(2));
    assert_eq!(fqring(&["make", "S", "--p", "4"]).status.code(), Some(2));
    assert_eq!(fqring(&["verify"]).status.code(), Some(2));
}

#[test]
fn census_counts() {
    let r = json(&["--json", "census", "--p", "2", "--dim", "3"]);
    let non: Vec<&Value> = r["classes"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["noncommutative"] == true)
        .collect();
    assert_eq!(non.len(), 1);
    assert_eq!(r["candidates_scanned"], 4096);

    let r = json(&["--json", "census", "--p", "2", "--dim", "2"]);
    assert!(r["classes"].as_array().unwrap().iter().all(|c| c["noncommutative"] == false));

    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("census.json");
    let out = fqring(&["census", "--p", "3", "--dim", "3", "--out", out_path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("1 noncommutative"));
    let saved: Value = serde_json::from_str(&fs::read_to_string(&out_path).unwrap()).unwrap();
    let rep = saved["classes"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["noncommutative"] == true)
        .unwrap()["representative"]
        .clone();
    // representatives reload as algebra specs
    let rep_path = dir.path().join("rep.json");
    fs::write(&rep_path, rep.to_string()).unwrap();
    let a = json(&["--json", "analyze", rep_path.to_str().unwrap()]);
    assert_eq!(a["radical"], 3);
}

#[test]
fn census_respects_budget() {
    let out = fqring(&["--budget", "1000", "census", "--p", "2", "--dim", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_fqring"))
        .args(["census", "--p", "2", "--dim", "3"])
        .env("FQRING_BUDGET", "1000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_densities() {
    let out = fqring(&["sweep", "--builtin", "S", "--primes", "2,3,5,7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for d in ["3/4", "7/9", "21/25", "43/49"] {
        assert!(text.contains(d), "{d} missing from {text}");
    }
    let j = json(&["--json", "sweep", "--primes", "2,3"]);
    assert_eq!(j["rows"][1]["r_p"], "7/9");
    assert_eq!(j["report"]["verdict"], "holds");
    assert_eq!(fqring(&["sweep", "--primes", "4"]).status.code(), Some(2));
}
