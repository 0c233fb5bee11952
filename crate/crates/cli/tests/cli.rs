use std::process::{Command, Output};

use serde_json::Value;

fn dwpf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dwpf"))
        .args(args)
        .env_remove("DWPF_MAX_N")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn six_vertex_single_site_is_one() {
    let out = dwpf(&[
        "compute",
        "--model",
        "6v",
        "--n",
        "1",
        "--zeta-sqrt",
        "2",
        "--z-sqrt",
        "3",
        "--q-sqrt",
        "5",
    ]);
    assert!(out.status.success());
    let doc = json(&out);
    let values = doc["values"].as_array().unwrap();
    for name in ["enumerate", "izergin"] {
        let entry = values.iter().find(|v| v["method"] == name).unwrap();
        assert_eq!(entry["value"], "1", "{name}");
    }
    assert_eq!(doc["verdict"], "exact-equal");
}

#[test]
fn delta_two_matches_the_short_list() {
    let out = dwpf(&["delta", "--n", "2"]);
    assert!(out.status.success());
    let doc = json(&out);
    let deltas = doc["deltas"].as_array().unwrap();
    assert_eq!(deltas.len(), 5);
    let expected = [
        vec![("1", "1")],
        vec![("2", "zeta1"), ("-1", "z1"), ("2", "zeta2"), ("-1", "z2")],
    ];
    for (k, want) in expected.iter().enumerate() {
        let terms: Vec<(String, String)> = deltas[k]["terms"]
            .as_array()
            .unwrap()
            .iter()
            .map(|t| {
                (
                    t[0].as_str().unwrap().to_string(),
                    t[1].as_str().unwrap().to_string(),
                )
            })
            .collect();
        let mut got = terms.clone();
        got.sort();
        let mut want: Vec<(String, String)> = want
            .iter()
            .map(|(c, m)| (c.to_string(), m.to_string()))
            .collect();
        want.sort();
        assert_eq!(got, want, "Delta_{k}");
    }
    // the generating and elementary constructions export the same table
    let other = json(&dwpf(&[
        "delta",
        "--n",
        "2",
        "--construction",
        "elementary",
    ]));
    assert_eq!(doc["deltas"], other["deltas"]);
}

#[test]
fn nineteen_vertex_suite_at_the_cubic_root() {
    let out = dwpf(&[
        "verify", "--model", "19v", "--q", "cyclo12", "--n", "3", "--seed", "7",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let doc = json(&out);
    let reports = doc["reports"].as_array().unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r["verdict"] == "exact-equal"));
    assert_eq!(doc["failing"].as_array().unwrap().len(), 0);
}

#[test]
fn seeded_runs_are_byte_identical() {
    let args = [
        "verify", "--model", "6v", "--q", "rational", "--n", "3", "--seed", "11",
    ];
    let a = dwpf(&args);
    let b = dwpf(&args);
    let c = dwpf(&[&args[..], &["--threads", "3"]].concat());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let compute = [
        "compute", "--model", "19v", "--q", "cyclo12", "--n", "2", "--seed", "5",
    ];
    assert_eq!(dwpf(&compute).stdout, dwpf(&compute).stdout);
}

#[test]
fn errors_are_json_with_nonzero_exit() {
    let out = dwpf(&["compute", "--model", "19v", "--n", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let doc = json(&out);
    assert!(doc["error"].as_str().unwrap().contains("capacity"));

    let out = dwpf(&[
        "compute",
        "--model",
        "6v",
        "--zeta-sqrt",
        "1",
        "2",
        "--z-sqrt",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["error"].is_string());

    let out = dwpf(&[
        "compute", "--model", "6v", "--n", "1", "--method", "nonsense",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn capacity_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_dwpf"))
        .args(["compute", "--model", "6v", "--n", "3"])
        .env("DWPF_MAX_N", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_flag_writes_the_document() {
    let dir = std::env::temp_dir().join(format!("dwpf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("delta.json");
    let out = dwpf(&["delta", "--n", "1", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["n"], 1);
    std::fs::remove_dir_all(&dir).unwrap();
}
