use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn berge(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_berge")).current_dir(dir).args(args).output().expect("spawn berge")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json stdout")
}

fn gen_g4(dir: &Path) {
    let o = berge(dir, &["gen", "gk", "--k", "3", "--parts", "3,3,3,3", "--delta", "12", "-o", "g.bg"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn exit_code_matrix() {
    let d = TempDir::new().unwrap();
    let p = d.path();
    gen_g4(p);
    fs::write(p.join("k44.bg"), "4 4\n0 1 2 3\n0 1 2 3\n0 1 2 3\n0 1 2 3\n").unwrap();
    let cases: &[(&[&str], i32)] = &[
        (&["ham", "k44.bg"], 0),
        (&["ham", "g.bg"], 1),
        (&["ham", "g.bg", "--budget", "5"], 3),
        (&["conn", "g.bg", "--k", "3"], 0),
        (&["conn", "g.bg", "--k", "4"], 1),
        (&["longest", "k44.bg"], 0),
        (&["sharpness", "--k", "2", "--delta", "6"], 0),
        (&["sharpness", "--k", "3", "--delta", "4", "--parts", "1,1,1,1"], 1),
        (&["verify", "--n", "4", "--m", "4..6", "--delta", "4", "--predicate", "three_conn_quarter"], 0),
        (&["verify", "--n", "4", "--m", "4", "--predicate", "nope"], 2),
        (&["verify", "--n", "4", "--m", "6..4", "--predicate", "long_cycle"], 2),
        (&["verify", "--n", "4", "--m", "4", "--predicate", "k_conn_general"], 2),
        (&["gen", "gk", "--k", "3", "--parts", "1,1", "--delta", "12"], 2),
        (&["ham", "missing.bg"], 2),
        (&["transform", "g.bg", "-o", "out.bg"], 2),
        (&["frobnicate"], 2),
    ];
    for (args, want) in cases {
        let o = berge(p, args);
        assert_eq!(code(&o), *want, "berge {}: {}", args.join(" "), String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn gen_writes_graph_and_certificate() {
    let d = TempDir::new().unwrap();
    gen_g4(d.path());
    let text = fs::read_to_string(d.path().join("g.bg")).unwrap();
    assert!(text.starts_with("12 39\n"));
    let cert: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(d.path().join("g.bg.cert.json")).unwrap()).unwrap();
    assert_eq!(cert["claimed_min_x_degree"], 12);
    assert_eq!(cert["cut"].as_array().unwrap().len(), 3);
}

#[test]
fn invalid_gen_writes_nothing() {
    let d = TempDir::new().unwrap();
    let o = berge(d.path(), &["gen", "gk", "--k", "3", "--parts", "3,3", "--delta", "12", "-o", "bad.bg"]);
    assert_eq!(code(&o), 2);
    assert_eq!(fs::read_dir(d.path()).unwrap().count(), 0);
}

#[test]
fn ham_reports_absence() {
    let d = TempDir::new().unwrap();
    gen_g4(d.path());
    let o = berge(d.path(), &["ham", "g.bg"]);
    assert!(stdout(&o).contains("no X-spanning cycle"));
}

#[test]
fn con4_round_trip_and_no_berge_cycle() {
    let d = TempDir::new().unwrap();
    let p = d.path();
    assert_eq!(code(&berge(p, &["gen", "con4", "--n", "6", "-o", "h.hg"])), 0);
    assert_eq!(code(&berge(p, &["ham", "h.hg"])), 1);
    assert_eq!(code(&berge(p, &["transform", "h.hg", "-o", "h.bg"])), 0);
    assert_eq!(code(&berge(p, &["transform", "h.bg", "-o", "back.hg"])), 0);
    assert_eq!(fs::read_to_string(p.join("h.hg")).unwrap(), fs::read_to_string(p.join("back.hg")).unwrap());
}

#[test]
fn hypergraph_ham_gives_berge_cycle() {
    let d = TempDir::new().unwrap();
    fs::write(d.path().join("t.hg"), "4 4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
    let o = berge(d.path(), &["--json", "ham", "t.hg"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["found"], true);
    assert_eq!(v["berge"]["edges"].as_array().unwrap().len(), 4);
}

#[test]
fn verify_json_and_resume() {
    let d = TempDir::new().unwrap();
    let p = d.path();
    let args = [
        "--json",
        "verify",
        "--n",
        "4",
        "--m",
        "4..6",
        "--delta",
        "4",
        "--predicate",
        "three_conn_quarter",
        "--resume",
        "prog.txt",
        "-o",
        "report.json",
    ];
    let first = json(&berge(p, &args));
    assert_eq!(first["totals"]["examined"], 19);
    assert_eq!(first["totals"]["failed"], 0);
    assert_eq!(first["resumed_units"], 0);
    let second = json(&berge(p, &args));
    assert_eq!(second["totals"], first["totals"]);
    assert_eq!(second["resumed_units"], second["units"]);
    let saved: serde_json::Value = serde_json::from_str(&fs::read_to_string(p.join("report.json")).unwrap()).unwrap();
    assert_eq!(saved["totals"], first["totals"]);
}

#[test]
fn seeded_runs_are_deterministic() {
    let d = TempDir::new().unwrap();
    let p = d.path();
    gen_g4(p);
    let hunt = [
        "--json",
        "hunt",
        "--n",
        "5",
        "--m",
        "5..7",
        "--delta",
        "5",
        "--predicate",
        "three_conn_quarter",
        "--samples",
        "300",
        "--seed",
        "9",
    ];
    let a = json(&berge(p, &hunt));
    let b = json(&berge(p, &[&hunt[..], &["--jobs", "1"]].concat()));
    assert_eq!(a["totals"], b["totals"]);
    assert_eq!(a["findings"], b["findings"]);
    assert_eq!(a, json(&berge(p, &hunt)));
    let imp = ["improve", "g.bg", "--rounds", "40", "--seed", "4"];
    assert_eq!(stdout(&berge(p, &imp)), stdout(&berge(p, &imp)));
}

#[test]
fn improve_spans_dense_graph_and_logs() {
    let d = TempDir::new().unwrap();
    fs::write(d.path().join("k44.bg"), "4 4\n0 1 2 3\n0 1 2 3\n0 1 2 3\n0 1 2 3\n").unwrap();
    let o = berge(d.path(), &["--json", "improve", "k44.bg", "--log", "trace.jsonl"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["spans_x"], true);
    assert_eq!(v["length"], 8);
    let lines = fs::read_to_string(d.path().join("trace.jsonl")).unwrap();
    for l in lines.lines() {
        serde_json::from_str::<serde_json::Value>(l).unwrap();
    }
}

#[test]
fn fan_and_classify() {
    let d = TempDir::new().unwrap();
    fs::write(d.path().join("f.bg"), "3 3\n0 1 2\n0 1\n0 2\n").unwrap();
    let o = berge(d.path(), &["--json", "fan", "f.bg", "--x", "2", "--cycle", "x0 y0 x1 y1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["paths"].as_array().unwrap().len(), 2);
    let o = berge(d.path(), &["--json", "classify", "f.bg", "--cycle", "x0 y0 x1 y1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["apex"], 2);
    let o = berge(d.path(), &["fan", "f.bg", "--x", "2", "--cycle", "x0 y0 x2 y1"]);
    assert_eq!(code(&o), 2);
}
