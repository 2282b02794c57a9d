//! The command line through `run`, plus a few spawned-binary checks.

use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn scx(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("scx").chain(args.iter().copied());
    let code = scx_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--output", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = scx(&full);
    assert!(code == 0 || code == 1, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn generate(dir: &Path, name: &str, family: &str) -> String {
    let path = dir.join(name).display().to_string();
    let mut args = vec!["gen"];
    args.extend(family.split(' '));
    args.extend(["-o", &path]);
    let (code, _, err) = scx(&args);
    assert_eq!(code, 0, "{err}");
    path
}

#[test]
fn gen_round_trips_through_the_file_format() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = scx(&["gen", "cross_polytope", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("family: cross_polytope 4"));
    let facets = out.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()).count();
    assert_eq!(facets, 16);
    let path = generate(dir.path(), "c.scx", "cross_polytope 4");
    let v = json(&["connectivity", &path]);
    assert_eq!((v["n"].as_u64(), v["kappa"].as_u64()), (Some(8), Some(6)));
    assert_eq!(v["schema"], "scx/1");
    assert_eq!(v["command"], "connectivity");

    let seeded = json(&["gen", "random_flag", "7", "0.5", "11"]);
    assert_eq!(seeded["seed"], 11);
    assert_eq!(seeded, json(&["gen", "random_flag", "7", "0.5", "11"]));
}

#[test]
fn betti_and_homology_values() {
    let dir = tempfile::tempdir().unwrap();
    let sq = generate(dir.path(), "sq.scx", "cycle 4");
    let v = json(&["betti", &sq]);
    let entries: Vec<(u64, u64, u64)> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["i"].as_u64().unwrap(), e["j"].as_u64().unwrap(), e["b"].as_u64().unwrap()))
        .collect();
    assert_eq!(entries, vec![(0, 0, 1), (1, 2, 2), (2, 4, 1)]);
    assert_eq!(v["stats"]["regularity"], 2);

    let (code, out, _) = scx(&["betti", &sq]);
    assert_eq!(code, 0);
    assert!(out.contains("total:"));

    let rp2 = generate(dir.path(), "rp2.scx", "rp2_6");
    assert_eq!(json(&["homology", &rp2])["ranks"], serde_json::json!([0, 0, 1, 1]));
    assert_eq!(json(&["--field", "q", "homology", &rp2])["ranks"], serde_json::json!([0, 0, 0, 0]));
    let (_, out, _) = scx(&["--field", "gf3", "check", "--minimal-cycle", &rp2]);
    assert!(out.contains("minimal cycle over GF(3): false"), "{out}");
}

#[test]
fn checks_and_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let octa = generate(dir.path(), "o.scx", "cross_polytope 3");
    let v = json(&["check", &octa]);
    assert_eq!(v["flag"], true);
    assert_eq!(v["pseudomanifold"], true);
    assert_eq!(v["banner_number"], 0);
    assert_eq!(v["property_a"]["holds"], true);
    assert_eq!(v["max_b_index"], 2);

    let tet = generate(dir.path(), "t.scx", "simplex_boundary 3");
    let v = json(&["check", "--banner", "--prop-B", "1", &tet]);
    assert_eq!(v["banner"]["witness"], serde_json::json!([1, 2, 3, 4]));
    assert_eq!(v["property_b"]["holds"], true);
    assert!(v.get("flag").is_none());

    let (_, out, _) = scx(&["connectivity", "--witness", &octa]);
    assert_eq!(out, "kappa = 4\nseparator: {2,3,5,6}\n");
    let (_, out, _) = scx(&["connectivity", "--witness", &tet]);
    assert!(out.contains("none (complete graph)"));
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let octa = generate(dir.path(), "o.scx", "cross_polytope 3");
    let (code, out, _) = scx(&["verify", &octa]);
    assert_eq!(code, 0);
    assert!(out.ends_with("12 checks, 12 applicable, 12 passed, 0 failed\n"), "{out}");

    // the literal reading of the top strand is too strict on simplex boundaries
    let tet = generate(dir.path(), "t.scx", "simplex_boundary 4");
    let (code, out, _) = scx(&["--convention", "literal", "verify", "--theorems", "strand_difference", &tet]);
    assert_eq!(code, 1);
    assert!(out.starts_with("FAIL"), "{out}");
    let (code, _, _) = scx(&["verify", "--theorems", "strand_difference", &tet]);
    assert_eq!(code, 0);

    let v = json(&["verify", "--theorems", "poincare_inequality,banner_connectivity", &octa]);
    let names: Vec<&str> = v["entries"].as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["poincare_inequality", "banner_connectivity"]);
    let (code, _, err) = scx(&["verify", "--theorems", "nonsense", &octa]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
}

#[test]
fn input_errors_and_usage() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, err) = scx(&["betti", "/nonexistent/x.scx"]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot read"));

    let bad = dir.path().join("bad.scx");
    std::fs::write(&bad, "1 2 3\n1 x\n").unwrap();
    let (code, _, err) = scx(&["homology", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
    std::fs::write(&bad, "1 2 3\n1 1\n").unwrap();
    let (code, _, err) = scx(&["homology", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("repeats vertex 1"), "{err}");

    let big = dir.path().join("big.scx");
    std::fs::write(&big, (1..=22).map(|i| format!("{i} {}\n", i + 1)).collect::<String>()).unwrap();
    let (code, _, err) = scx(&["betti", big.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("23"), "{err}");

    assert_eq!(scx(&["--max-vertices", "27", "betti", big.to_str().unwrap()]).0, 2);
    assert_eq!(scx(&["--field", "gf4", "betti", big.to_str().unwrap()]).0, 2);
    assert_eq!(scx(&["frobnicate"]).0, 2);
    assert_eq!(scx(&["gen", "cycle", "2"]).0, 2);
    let (code, out, _) = scx(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn json_input_and_stdin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    std::fs::write(&path, r#"{"facets": [[1, 2], [2, 3], [3, 4], [1, 4]]}"#).unwrap();
    assert_eq!(json(&["connectivity", path.to_str().unwrap()])["kappa"], 2);

    let out = Command::new(env!("CARGO_BIN_EXE_scx"))
        .args(["homology", "-"])
        .stdin(std::fs::File::open(&path).unwrap())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("H~_1: 1"));
}
