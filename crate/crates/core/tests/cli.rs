use std::fs;
use std::process::Command;

use gaf_cells::cli::{manifest_path, run};
use serde_json::Value;

fn run_args(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("gaf-cells").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = run_args(args);
    let value = serde_json::from_str(&out).unwrap_or_else(|e| panic!("bad json ({e}): {out}\n{err}"));
    (code, value)
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    rdr.records().map(|r| r.unwrap().iter().map(str::to_string).collect()).collect()
}

#[test]
fn partition_gaf_grid() {
    let (code, v) = json(&["partition", "--scheme", "gaf", "--r", "0.4472", "--width", "10", "--height", "10", "--radio-range", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["cells"].as_array().unwrap().len(), 529);
    for key in ["field", "params", "cells", "adjacency", "grid_offset"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["params"]["scheme"], "gaf");
}

#[test]
fn partition_two_type_tags() {
    let (code, v) = json(&["partition", "--scheme", "ehgaf-twotype", "--k", "4", "--width", "8", "--height", "6.928203230275509"]);
    assert_eq!(code, 0);
    let types: Vec<&str> = v["cells"].as_array().unwrap().iter().map(|c| c["type"].as_str().unwrap()).collect();
    assert!(types.contains(&"A") && types.contains(&"B"));
}

#[test]
fn partition_rejects_bad_subdivision() {
    let (code, out, err) = run_args(&["partition", "--scheme", "hgaf", "--r", "1", "--d", "0.3"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(!err.is_empty());
}

#[test]
fn verify_examples() {
    let (code, v) = json(&["verify", "--scheme", "gaf", "--width", "3", "--height", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["binding"], "ReqI");

    let (code, v) = json(&["verify", "--scheme", "gaf", "--r", "0.5", "--width", "3", "--height", "3"]);
    assert_eq!(code, 1);
    assert!((v["report"]["req1_worst"].as_f64().unwrap() - 1.25f64.sqrt()).abs() < 1e-9);

    let (code, v) = json(&["verify", "--scheme", "ehgaf-twotype", "--k", "4", "--width", "8", "--height", "6.928203230275509"]);
    assert_eq!(code, 0);
    assert_eq!(v["connected"], true);
    let low_degree = v["degree_histogram"].as_object().unwrap().keys().any(|d| d.parse::<usize>().unwrap() < 4);
    assert!(low_degree);
}

#[test]
fn verify_reads_partition_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    let p = path.to_str().unwrap();
    assert_eq!(run_args(&["partition", "--scheme", "ehgaf", "--r", "0.7", "--d", "0.1", "--width", "2.1", "--height", "2.1", "--out", p]).0, 0);
    let (code, v) = json(&["verify", "--partition", p, "--resolution", "0.01"]);
    assert_eq!(code, 0);
    let oracle = v["brute_force"]["req1_worst"].as_f64().unwrap();
    let closed = v["analytic"]["req1_worst"].as_f64().unwrap();
    assert!((oracle - closed).abs() < 0.03);

    assert_eq!(run_args(&["verify", "--partition", dir.path().join("missing.json").to_str().unwrap()]).0, 2);
    fs::write(&path, "{\"cells\": 3}").unwrap();
    assert_eq!(run_args(&["verify", "--partition", p]).0, 2);
}

#[test]
fn simulate_seed_rows_and_summary() {
    let (code, out, _) = run_args(&["simulate", "--scheme", "ehgaf", "--seeds", "20", "--width", "3", "--height", "3", "--nodes", "90"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("scheme,seed,lifetime,mean_active_count\n"));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 21);
    assert_eq!(rows[20][1], "median");
    let seeds: Vec<u64> = rows[..20].iter().map(|r| r[1].parse().unwrap()).collect();
    assert_eq!(seeds, (0..20).collect::<Vec<_>>());
}

#[test]
fn simulate_single_node() {
    let (code, out, _) = run_args(&[
        "simulate", "--scheme", "ehgaf", "--r", "1", "--width", "1", "--height", "1", "--nodes", "1", "--initial-energy", "10",
    ]);
    assert_eq!(code, 0);
    assert_eq!(csv_rows(&out)[0][2], "10");
}

#[test]
fn simulate_all_schemes_ordering() {
    let (code, out, _) = run_args(&[
        "simulate", "--all-schemes", "--width", "6", "--height", "10.392304845413264", "--nodes", "6000", "--initial-energy", "1",
        "--criterion", "cells-dead:0.5", "--seeds", "3",
    ]);
    assert_eq!(code, 0);
    let rows = csv_rows(&out);
    let summary: Vec<&str> = rows.iter().filter(|r| r[1] == "median").map(|r| r[0].as_str()).collect();
    assert_eq!(summary, ["gaf", "hgaf", "ehgaf", "ehgaf-triangle", "ehgaf-twotype"]);
}

#[test]
fn simulate_rejects_bad_config() {
    assert_eq!(run_args(&["simulate", "--scheme", "gaf", "--e-sleep", "2"]).0, 2);
    assert_eq!(run_args(&["simulate", "--scheme", "gaf", "--criterion", "whenever"]).0, 2);
    assert_eq!(run_args(&["simulate", "--scheme", "gaf", "--all-schemes"]).0, 2);
}

#[test]
fn tables_values() {
    let (code, out, _) = run_args(&["tables"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("scheme,max_cell_area,pct_of_bound,published_pct\n"));
    let rows = csv_rows(&out);
    let want = [
        ("gaf", 0.2, 10.45, 11.0),
        ("hgaf", 0.5, 26.13, 26.0),
        ("ehgaf", 1.0, 52.27, 52.0),
        ("ehgaf-triangle", 1.2990381, 67.90, 68.0),
        ("ehgaf-twotype", 1.7320508, 90.53, 91.0),
        ("bound", 1.9132230, 100.0, 100.0),
    ];
    assert_eq!(rows.len(), want.len());
    for (row, (name, area, pct, printed)) in rows.iter().zip(want) {
        assert_eq!(row[0], name);
        assert!((row[1].parse::<f64>().unwrap() - area).abs() < 1e-7);
        assert!((row[2].parse::<f64>().unwrap() - pct).abs() < 0.005);
        assert_eq!(row[3].parse::<f64>().unwrap(), printed);
    }
}

#[test]
fn bounds_json() {
    let (code, v) = json(&["bounds", "--samples", "200000", "--max-n", "3"]);
    assert_eq!(code, 0);
    assert!((v["bounds"]["delta"].as_f64().unwrap() - 1.2283697).abs() < 1e-7);
    assert!((v["bounds"]["limit"].as_f64().unwrap() - 1.9132230).abs() < 1e-7);
    assert_eq!(v["chain_checks"].as_array().unwrap().len(), 2);
    assert_eq!(run_args(&["bounds", "--max-n", "1"]).0, 2);
}

#[test]
fn outputs_are_byte_identical_and_have_manifests() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 3] = [
        &["simulate", "--scheme", "hgaf", "--r", "0.6", "--d", "0.2", "--width", "2.4", "--height", "2.4", "--nodes", "120", "--seeds", "4", "--seed", "9"],
        &["bounds", "--samples", "50000", "--max-n", "3", "--seed", "4"],
        &["partition", "--scheme", "ehgaf-triangle", "--r", "1.3", "--d", "0.1", "--width", "4", "--height", "4"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let mut bodies = Vec::new();
        for rep in 0..2 {
            let path = dir.path().join(format!("out{i}_{rep}"));
            let mut full: Vec<&str> = args.to_vec();
            let p = path.to_str().unwrap().to_string();
            full.extend(["--out", &p]);
            let (code, stdout, _) = run_args(&full);
            assert_eq!(code, 0);
            assert!(stdout.is_empty());
            bodies.push(fs::read(&path).unwrap());
            let manifest: Value = serde_json::from_slice(&fs::read(manifest_path(&path)).unwrap()).unwrap();
            assert_eq!(manifest["command"], args[0]);
            assert_eq!(manifest["version"], env!("CARGO_PKG_VERSION"));
            assert_eq!(manifest["outputs"][0], p);
            assert!(manifest["config"].is_object());
        }
        assert_eq!(bodies[0], bodies[1], "{args:?}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gaf-cells");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["tables"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("ehgaf-twotype"));
    assert_eq!(status(&["verify", "--scheme", "gaf", "--r", "0.5", "--width", "2", "--height", "2"]).status.code(), Some(1));
    let bad = status(&["partition", "--scheme", "hgaf", "--r", "1", "--d", "0.3"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}
