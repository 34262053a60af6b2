use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn dynkin(args: &[&str]) -> Output {
    run(args, None, &[])
}

fn run(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_dynkin"));
    cmd.args(args)
        .env_remove("DYNKIN_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    let mut pipe = child.stdin.take().unwrap();
    if let Some(text) = stdin {
        pipe.write_all(text.as_bytes()).unwrap();
    }
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

fn enumerate_to(path: &Path, extra: &[&str]) -> Output {
    let mut args = vec!["enumerate", "--out", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    dynkin(&args)
}

#[test]
fn classify_rank_two_hyperbolic() {
    let o = dynkin(&["classify", "2 -3; -2 2"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("kind: indefinite"), "{out}");
    assert!(out.contains("hyperbolic: true"));
    assert!(out.contains("compact: true"));
    assert!(out.contains("symmetrizer: diag(2,3)"));
}

#[test]
fn classify_json_fields() {
    let o = dynkin(&["classify", "--format", "json", "2 -1 0; -1 2 -1; 0 -1 2"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["kind"], "finite");
    assert_eq!(v["symmetrizer"], serde_json::json!([1, 1, 1]));
    assert_eq!(v["orbit_blocks"], serde_json::json!([[1, 2, 3]]));
    assert_eq!(v["orbit_semantics"], "verified");
}

#[test]
fn classify_reads_files_and_stdin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g2.txt");
    std::fs::write(&path, "# G2\n2 -1\n-3 2\n").unwrap();
    let o = dynkin(&["classify", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("kind: finite"));
    let o = run(&["classify", "--input", "-"], Some("2 -2\n-2 2\n"), &[]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("kind: affine"));
}

#[test]
fn non_symmetrizable_witness() {
    let o = dynkin(&["symmetrize", "2 -1 -1; -2 2 -2; -2 -1 2"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.starts_with("N.S."), "{out}");
    assert!(out.contains("cycle (1,2,3,1) has forward product -4 and reverse product -2"), "{out}");
}

#[test]
fn symmetrize_prints_form() {
    let o = dynkin(&["symmetrize", "--format", "json", "2 -1; -4 2"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["symmetrizer"], serde_json::json!([4, 1]));
    assert_eq!(v["bilinear_form"], serde_json::json!([[8, -4], [-4, 2]]));
}

#[test]
fn exit_codes() {
    // axiom violation
    let o = dynkin(&["classify", "2 -1; -4 3"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("(2,2)"), "{}", stderr(&o));
    let o = dynkin(&["classify", "2 -1; 0 2"]);
    assert_eq!(code(&o), 1);
    // syntax, missing input, bad path
    assert_eq!(code(&dynkin(&["classify", "2 x; -1 2"])), 2);
    assert_eq!(code(&dynkin(&["classify"])), 2);
    assert_eq!(code(&dynkin(&["classify", "--input", "/nonexistent/m.txt"])), 2);
    assert_eq!(code(&dynkin(&["frobnicate"])), 2);
    // decomposable input to symmetrize
    assert_eq!(code(&dynkin(&["symmetrize", "2 0; 0 2"])), 1);
}

#[test]
fn orbits_subcommand() {
    let o = dynkin(&["orbits", "2 -1 0; -2 2 -1; 0 -1 2"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("{1} {2,3}"), "{out}");
    assert!(out.contains("orbit_semantics: verified"));
}

#[test]
fn extend_pipelines() {
    let o = dynkin(&["extend", "--mode", "affine", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "2 -2\n-2 2\n");

    let o = run(&["extend", "--mode", "overextend", "--input", "-"], Some(&stdout(&o)), &[]);
    assert_eq!(code(&o), 0);
    let o = run(&["classify", "--input", "-", "--format", "json"], Some(&stdout(&o)), &[]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["rank"], 3);
    assert_eq!(v["hyperbolic"], true);

    // json output feeds back in
    let e8 = "2 0 -1 0 0 0 0 0; 0 2 0 -1 0 0 0 0; -1 0 2 -1 0 0 0 0; 0 -1 -1 2 -1 0 0 0; \
              0 0 0 -1 2 -1 0 0; 0 0 0 0 -1 2 -1 0; 0 0 0 0 0 -1 2 -1; 0 0 0 0 0 0 -1 2";
    let o = dynkin(&["extend", "--mode", "affine", "--format", "json", e8]);
    assert_eq!(code(&o), 0);
    let o = run(
        &["extend", "--mode", "overextend", "--format", "json", "--input", "-"],
        Some(&stdout(&o)),
        &[],
    );
    assert_eq!(code(&o), 0);
    let o = run(&["classify", "--input", "-", "--format", "json"], Some(&stdout(&o)), &[]);
    let v = json(&o);
    assert_eq!(v["rank"], 10);
    assert_eq!(v["hyperbolic"], true);
    assert_eq!(v["compact"], false);

    assert_eq!(code(&dynkin(&["extend", "--mode", "affine", "2 -2; -2 2"])), 1);
    assert_eq!(code(&dynkin(&["extend", "--mode", "overextend", "2 -1; -1 2"])), 1);
    assert_eq!(
        code(&dynkin(&["extend", "--mode", "overextend", "--zero-vertex", "0", "2 -2; -2 2"])),
        2
    );
}

#[test]
fn classify_json_round_trips() {
    let o = dynkin(&["classify", "--format", "json", "2 -1 -1; -1 2 -1; -1 -1 2"]);
    let first = stdout(&o);
    let o = run(&["classify", "--format", "json", "--input", "-"], Some(&first), &[]);
    assert_eq!(stdout(&o), first);
}

#[test]
fn enumerate_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    let o = enumerate_to(&a, &[]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().next(), Some("total=238 symmetrizable=142"));
    let o = enumerate_to(&b, &["--jobs", "2"]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read(&a).unwrap();
    assert_eq!(text, std::fs::read(&b).unwrap(), "catalog output is deterministic");

    let o = dynkin(&["verify-catalog", "--in", a.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("properties passed"));
    let o = run(&["verify-catalog", "--in", a.to_str().unwrap()], None, &[("DYNKIN_SEED", "42")]);
    assert_eq!(code(&o), 0);
    let o = run(&["verify-catalog", "--in", a.to_str().unwrap()], None, &[("DYNKIN_SEED", "x")]);
    assert_eq!(code(&o), 2);

    // a partial catalog loads but fails the count checks
    let partial = dir.path().join("p.jsonl");
    assert_eq!(code(&enumerate_to(&partial, &["--max-rank", "4"])), 0);
    let o = dynkin(&["verify-catalog", "--in", partial.to_str().unwrap()]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("FAIL counts"), "{}", stdout(&o));

    // a corrupted file does not load
    let text = String::from_utf8(text).unwrap();
    let bad = dir.path().join("bad.jsonl");
    std::fs::write(&bad, text.replacen("\"rank\":3", "\"rank\":4", 1)).unwrap();
    assert_eq!(code(&dynkin(&["verify-catalog", "--in", bad.to_str().unwrap()])), 1);
    assert_eq!(code(&dynkin(&["verify-catalog", "--in", "/nonexistent.jsonl"])), 2);
}

#[test]
fn enumerate_tables() {
    let dir = tempfile::tempdir().unwrap();
    let tsv = dir.path().join("c.tsv");
    let o = enumerate_to(&tsv, &["--max-rank", "3", "--format", "tsv"]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&tsv).unwrap();
    assert_eq!(text.lines().count(), 124);
    assert!(text.starts_with("canonical_id\trank\tmatrix\t"));

    let o = dynkin(&["enumerate", "--min-rank", "9", "--max-rank", "10", "--format", "latex", "--out", "-"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("\\begin{longtable}"));
    assert_eq!(out.matches("smallmatrix}").count(), 2 * 9);
    assert!(stderr(&o).contains("total=9 symmetrizable=9"));
}

#[test]
fn enumerate_oracle_and_ranges() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("c.jsonl");
    let o = enumerate_to(&p, &["--max-rank", "5", "--oracle"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("oracle rank 3: pruned=123 unpruned=123"), "{out}");
    assert!(out.contains("oracle rank 4: pruned=53 unpruned=53"));
    assert!(out.contains("oracle rank 5: pruned=22 unpruned=22"));

    assert_eq!(code(&enumerate_to(&p, &["--min-rank", "2"])), 2);
    assert_eq!(code(&enumerate_to(&p, &["--min-rank", "6", "--max-rank", "5"])), 2);
    assert_eq!(code(&enumerate_to(&p, &["--max-rank", "12"])), 2);
    let o = enumerate_to(&p, &["--min-rank", "11", "--max-rank", "11"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("total=0 symmetrizable=0"));
}
