//! End-to-end runs of the command-line tool on the fixtures in `tests/data`.

use std::process::Command;

use orient_expr::cli::{run, Outcome};
use serde_json::Value;

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn ok(args: &[&str]) -> Value {
    let out = cli(args);
    assert_eq!(out.status, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("orient-expr").chain(args.iter().copied()))
}

#[test]
fn envelope_fields() {
    let v = ok(&["spectrum", "-F", &data("bipartite.forb"), "--range", "4..12"]);
    assert_eq!(v["tool_version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["subcommand"], "spectrum");
    assert_eq!(v["inputs_digest"].as_str().unwrap().len(), 64);
    assert_eq!(v["result"]["spectrum"], serde_json::json!([4, 6, 8, 10, 12]));
}

#[test]
fn reports_are_byte_identical() {
    let args = ["holes", "analyze", "-spec", &data("primes.spec")];
    assert_eq!(cli(&args), cli(&args));
    let other = cli(&["holes", "analyze", "-spec", &data("odd_tail.spec")]);
    let a: Value = serde_json::from_str(&cli(&args).stdout).unwrap();
    let b: Value = serde_json::from_str(&other.stdout).unwrap();
    assert_ne!(a["inputs_digest"], b["inputs_digest"]);
}

#[test]
fn orientations() {
    let c4 = ok(&["orient", "-g", &data("c4.graph"), "-F", &data("b1.forb"), "--mode", "induced", "--acyclic"]);
    assert_eq!(c4["result"]["admits"], false);
    assert_eq!(c4["result"]["mode"], "induced+acyclic");
    let k3 = ok(&["orient", "-g", &data("k3.graph"), "-F", &data("b1.forb"), "--mode", "induced", "--acyclic"]);
    assert_eq!(k3["result"]["admits"], true);
    assert_eq!(k3["result"]["witness_verified"], true);
    // a triangle needs three colours, so every orientation has a directed 3-path image
    let hom = ok(&["orient", "-g", &data("k3.graph"), "-F", &data("dipath3.digraph"), "--mode", "hom"]);
    assert_eq!(hom["result"]["admits"], false);
    let c4 = ok(&["orient", "-g", &data("c4.graph"), "-F", &data("dipath3.digraph"), "--mode", "overlap"]);
    assert_eq!(c4["result"]["witness_verified"], true);
}

#[test]
fn homomorphisms_and_cores() {
    let v = ok(&["hom", &data("c6.digraph"), &data("c3.digraph")]);
    assert_eq!(v["result"]["exists"], true);
    assert_eq!(v["result"]["witness_verified"], true);
    let v = ok(&["hom", &data("c3.digraph"), &data("tt2.digraph")]);
    assert_eq!(v["result"]["exists"], false);
    let v = ok(&["core", &data("c6.digraph")]);
    assert_eq!(v["result"]["core"]["n"], 6);
    let v = ok(&["core", &data("two_triangles.digraph")]);
    assert_eq!(v["result"]["core"]["n"], 3);
    assert_eq!(cli(&["core", &data("bipartite.forb")]).status, 1);
}

#[test]
fn dualities() {
    let v = ok(&["duality", "verify", "-A", &data("dipath3.digraph"), "-B", &data("tt2.digraph"), "--n", "4"]);
    assert!(v["result"]["counterexample"].is_null());
    assert_eq!(v["result"]["checked"], 238);
    let v = ok(&["duality", "verify", "-A", &data("c3.digraph"), "-B", &data("tt2.digraph")]);
    assert_eq!(v["result"]["counterexample_verified"], true);
    let serial = ok(&["duality", "verify-gen", "-F", &data("bipartite.forb"), "-M", &data("tt2.digraph")]);
    let parallel = ok(&["--jobs", "4", "duality", "verify-gen", "-F", &data("bipartite.forb"), "-M", &data("tt2.digraph")]);
    assert_eq!(serial["result"], parallel["result"]);
}

#[test]
fn languages() {
    let a = data("bipartite.factors");
    let v = ok(&["lang", "periods", "-A", &a, "--kmax", "10"]);
    assert_eq!(v["result"]["periods"], serde_json::json!([2, 4, 6, 8, 10]));
    let v = ok(&["lang", "structure", "-A", &a]);
    assert_eq!(v["result"]["gcd_r"], 2);
    assert_eq!(v["result"]["threshold_t0"], 2);
    assert_eq!(ok(&["lang", "transitive", "-A", &a])["result"]["transitive"], true);
    assert_eq!(ok(&["lang", "sync", "-A", &a])["result"]["sync_bound"], 2);
    let v = ok(&["lang", "periods", "-A", &a, "--nonconstant", "--kmax", "6"]);
    assert_eq!(v["result"]["periods"], serde_json::json!([2, 4, 6]));
}

#[test]
fn translation() {
    let v = ok(&["translate", &data("dipath3.digraph")]);
    let words: Vec<&str> = v["result"]["words"].as_array().unwrap().iter().map(|w| w.as_str().unwrap()).collect();
    assert!(words.contains(&">>") && words.contains(&"<<"));
}

#[test]
fn hole_classes() {
    let v = ok(&["holes", "analyze", "-spec", &data("primes.spec")]);
    assert_eq!(v["result"]["overall"], "NotExpressibleAcyclic");
    let v = ok(&["holes", "analyze", "--spec", &data("odd_tail.spec"), "--kmax", "40"]);
    assert_eq!(v["result"]["overall"], "NecessaryConditionsPass");
    let v = ok(&["holes", "analyze", "-spec", &data("chordal.spec")]);
    assert_eq!(v["result"]["overall"], "NotExpressibleAny");
    let v = ok(&["holes", "analyze", "-spec", &data("even_holes.spec")]);
    let tags: Vec<&str> = v["result"]["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["condition"].as_str().unwrap())
        .collect();
    assert!(tags.contains(&"nec:multiples"));
}

#[test]
fn errors_and_exit_codes() {
    let out = cli(&["orient", "-g", &data("bad.graph"), "-F", &data("b1.forb"), "--mode", "induced"]);
    assert_eq!(out.status, 1);
    assert!(out.stderr.contains("bad.graph:3"), "{}", out.stderr);
    assert_eq!(cli(&["core", &data("missing.digraph")]).status, 1);
    assert_eq!(cli(&["spectrum", "-F", &data("bipartite.forb"), "--range", "9..4"]).status, 1);
    assert_eq!(cli(&["holes", "analyze", "-spec", &data("primes.spec"), "--kmax", "80"]).status, 1);
    let out = cli(&["--budget", "1", "orient", "-g", &data("c4.graph"), "-F", &data("b1.forb"), "--mode", "induced", "--acyclic"]);
    assert_eq!(out.status, 2, "{}", out.stderr);
}

#[test]
fn text_output() {
    let out = cli(&["--format", "text", "lang", "sync", "-A", &data("bipartite.factors")]);
    assert_eq!(out.status, 0);
    assert!(out.stdout.starts_with("lang sync"));
    assert!(out.stdout.contains("sync_bound: 2"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_orient-expr");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["translate", "><"]), Some(0));
    assert_eq!(status(&["orient"]), Some(1));
    assert_eq!(
        status(&["--budget", "1", "orient", "-g", &data("c4.graph"), "-F", &data("b1.forb"), "--acyclic"]),
        Some(2)
    );
}
