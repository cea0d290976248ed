use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn mg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mg")).args(args).output().expect("mg runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = mg(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let v: Value = serde_json::from_str(&ok(&all)).unwrap();
    assert_eq!(v["command"], args[0]);
    assert!(v["warnings"].is_array());
    v
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn similar_matches_the_cyclic_formula() {
    let out = ok(&["similar", "--a", "cyclic:10", "--b", "free:1", "--max-radius", "16"]);
    assert!(out.starts_with("radius: 4\n"), "{out}");
    let v = json(&["similar", "--a", "cyclic:10", "--b", "free:1", "--max-radius", "16"]);
    assert_eq!(v["result"]["radius"], 4);
    assert_eq!(v["result"]["capped"], false);
    let d = json(&["dist", "--a", "cyclic:10", "--b", "free:1"]);
    assert_eq!(d["result"]["distance"], "2^-4");
}

#[test]
fn growth_of_free_group() {
    assert_eq!(ok(&["growth", "--group", "free:2", "--max-radius", "3"]), "1 5 17 53\n");
    let v = json(&["growth", "--group", "zn:2", "--max-radius", "3"]);
    assert_eq!(v["result"]["sizes"], serde_json::json!([1, 5, 13, 25]));
}

#[test]
fn surface_presentation_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let text = ok(&["family", "--spec", "surface:2", "--emit", "presentation"]);
    let file = write(dir.path(), "surface2.gp", &text);
    let out = ok(&["check-sc", "--file", file.to_str().unwrap(), "--lambda", "1/6"]);
    assert!(out.contains("passed: true"));
    assert!(out.contains("max_ratio: 1/8"));
    let v = json(&["check-sc", "--file", file.to_str().unwrap(), "--lambda", "1/6"]);
    assert_eq!(v["result"]["max_ratio"], "1/8");

    let t1 = write(dir.path(), "surface1.gp", &ok(&["family", "--spec", "surface:1", "--emit", "presentation"]));
    let v = json(&["check-sc", "--file", t1.to_str().unwrap()]);
    assert_eq!(v["result"]["passed"], false);
    assert_eq!(v["result"]["max_ratio"], "1/4");
}

#[test]
fn word_problem_prints_a_replayable_trace() {
    let dir = tempfile::tempdir().unwrap();
    let a5 = write(dir.path(), "a5.gp", "gens: a\nrel: a^5\n");
    let out = ok(&["wp", "--file", a5.to_str().unwrap(), "--word", "a a a"]);
    assert!(out.starts_with("verdict: nontrivial\n"), "{out}");
    let v = json(&["wp", "--file", a5.to_str().unwrap(), "--word", "a^7 a^3"]);
    assert_eq!(v["result"]["verdict"], "trivial");
    assert_eq!(v["result"]["trace"]["final_word"], "1");

    // a presentation outside C'(1/6) is a computation error
    let torus = write(dir.path(), "torus.gp", "gens: a b\nrel: a b a^-1 b^-1\n");
    assert_eq!(mg(&["wp", "--file", torus.to_str().unwrap(), "--word", "a"]).status.code(), Some(2));
    // a word outside the alphabet is a usage error
    assert_eq!(mg(&["wp", "--file", a5.to_str().unwrap(), "--word", "b"]).status.code(), Some(1));
}

#[test]
fn ball_and_signature_documents() {
    let b = json(&["ball", "--group", "cyclic:3", "--radius", "1"]);
    assert_eq!(b["result"]["vertices"], 3);
    assert_eq!(b["result"]["reps"], serde_json::json!(["1", "a", "a^-1"]));
    assert_eq!(b["result"]["transitions"], serde_json::json!([[1, 2], [2, 0], [0, 1]]));
    let s = json(&["signature", "--group", "free:1", "--radius", "1"]);
    assert!(s["result"].get("reps").is_none());
    assert_eq!(s["result"]["transitions"], serde_json::json!([[1, 2], [-1, 0], [0, -1]]));
}

#[test]
fn exit_codes() {
    assert_eq!(mg(&["growth"]).status.code(), Some(1));
    assert_eq!(mg(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(mg(&["growth", "--group", "bogus:3"]).status.code(), Some(1));
    assert_eq!(mg(&["growth", "--group", "free:3", "--max-radius", "9", "--cap", "50"]).status.code(), Some(2));
    assert_eq!(mg(&["check-sc", "--file", "/nonexistent/x.gp"]).status.code(), Some(2));
    assert_eq!(mg(&["--help"]).status.code(), Some(0));
    // a false verdict is still a successful run
    assert_eq!(mg(&["up-check", "--group", "free:5", "--p", "3"]).status.code(), Some(0));
    assert_eq!(mg(&["up-check", "--group", "free:4", "--p", "3"]).status.code(), Some(2));
}

#[test]
fn nielsen_kernel_and_chabauty() {
    let v = json(&["nielsen", "--group", "zn:2", "--moves", "swap:1,2; rmul:1,2,-"]);
    assert_eq!(v["result"]["markers"][0]["word"], "b a^-1");
    assert_eq!(mg(&["nielsen", "--group", "zn:2", "--moves", "destab:1"]).status.code(), Some(1));

    let k = json(&["kernel", "--group", "cyclic:3", "--max-len", "3"]);
    assert_eq!(k["result"]["words"], serde_json::json!(["a^3", "a^-3"]));

    let c = json(&["chabauty", "--group", "cyclic:2", "--in", "a^2", "--out", "a"]);
    assert_eq!(c["result"]["member"], true);
    let c = json(&["chabauty", "--group", "free:1", "--in", "a^2,a^4", "--out", "a"]);
    assert_eq!(c["result"]["member"], false);
}

#[test]
fn injectivity_and_certificates() {
    let v = json(&["inj-radius", "--src", "free:1", "--dst", "cyclic:5"]);
    assert_eq!(v["result"]["radius"], 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", r#"{"stages": ["free:1", "cyclic:4", "cyclic:2"], "radii": [2, 1], "deltas": ["1/2", 1]}"#);
    let v = json(&["lh-check", "--sequence", bad.to_str().unwrap()]);
    assert_eq!(v["result"]["first_failure"], 1);
    assert_eq!(v["result"]["deltas_status"], "UNVERIFIED");
    let short = write(dir.path(), "short.json", r#"{"stages": ["free:1", "cyclic:4"], "radii": [2, 1], "deltas": [1]}"#);
    assert_eq!(mg(&["lh-check", "--sequence", short.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn model_checking_tables() {
    let dir = tempfile::tempdir().unwrap();
    let z3 = write(dir.path(), "z3.json", r#"{"order": 3, "names": ["e", "g", "h"], "mul": [[0,1,2],[1,2,0],[2,0,1]]}"#);
    let z3 = z3.to_str().unwrap();
    let v = json(&["modelcheck", "--table", z3, "--formula", "zeta"]);
    assert_eq!(v["result"]["holds"], false);
    let f = write(dir.path(), "cube.f", "; every cube is trivial\n(forall x (= (* x x x) e))\n");
    let v = json(&["modelcheck", "--table", z3, "--formula", f.to_str().unwrap()]);
    assert_eq!(v["result"]["holds"], true);

    // D4 as (Z/2)^2 x| Z/2: elements (v, s) with v in {0..3}, the swap acting on v's bits
    let enc = |v: usize, s: usize| v + 4 * s;
    let swap = |v: usize| ((v & 1) << 1) | (v >> 1);
    let mut rows = Vec::new();
    for x in 0..8 {
        let (v1, s1) = (x % 4, x / 4);
        let row: Vec<usize> = (0..8)
            .map(|y| {
                let (v2, s2) = (y % 4, y / 4);
                let v2 = if s1 == 1 { swap(v2) } else { v2 };
                enc(v1 ^ v2, s1 ^ s2)
            })
            .collect();
        rows.push(row);
    }
    let names: Vec<String> = (0..8).map(|i| format!("g{i}")).collect();
    let doc = serde_json::json!({ "order": 8, "names": names, "mul": rows });
    let d4 = write(dir.path(), "d4.json", &doc.to_string());
    let v = json(&["modelcheck", "--table", d4.to_str().unwrap(), "--formula", "phi:2"]);
    assert_eq!(v["result"]["holds"], true);
    assert_eq!(v["result"]["witness"]["check"]["normal_subgroup"], true);

    let budget = mg(&["modelcheck", "--table", d4.to_str().unwrap(), "--formula", "phi:2", "--budget", "10"]);
    assert_eq!(budget.status.code(), Some(2));
    assert_eq!(mg(&["modelcheck", "--table", z3, "--formula", "psi:0"]).status.code(), Some(1));
    let open = write(dir.path(), "open.f", "(= x e)");
    assert_eq!(mg(&["modelcheck", "--table", z3, "--formula", open.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn up_check_and_pattern_sentence() {
    let v = json(&["up-check", "--group", "Hp:3", "--p", "3"]);
    assert_eq!(v["result"]["member"], true);
    let v = json(&["up-check", "--group", "free:5", "--p", "3"]);
    assert_eq!(v["result"]["member"], false);
    assert_eq!(ok(&["pattern-sentence", "--group", "cyclic:1", "--radius", "0"]), "(exists x_1 (= x_1 e))\n");
}

#[test]
fn family_summaries() {
    let v = json(&["family", "--spec", "Wnk:2,30"]);
    assert_eq!(v["result"]["relator_lengths"], serde_json::json!([495, 525]));
    assert_eq!(v["result"]["small_cancellation"]["passed"], true);
    let v = json(&["family", "--spec", "Wnk:2,10"]);
    assert_eq!(v["result"]["oracle"], false);
    assert_eq!(v["warnings"].as_array().unwrap().len(), 1);
}

#[test]
fn machine_output_is_deterministic() {
    let args = ["--json", "ball", "--group", "Wnk:1,30", "--radius", "3"];
    assert_eq!(ok(&args), ok(&args));
}
