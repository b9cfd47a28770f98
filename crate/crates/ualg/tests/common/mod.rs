#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn fixture(name: &str) -> PathBuf {
    fixtures_dir().join(name)
}

pub fn all_fixtures() -> Vec<PathBuf> {
    let mut out: Vec<PathBuf> = std::fs::read_dir(fixtures_dir())
        .expect("fixtures directory")
        .map(|e| e.expect("dir entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "toml"))
        .collect();
    out.sort();
    out
}

pub fn ualg(args: &[&str]) -> Output {
    ualg_env(args, &[])
}

pub fn ualg_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ualg"));
    cmd.args(args).env_remove("UALG_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("run ualg")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

/// `fmt` output equals the file, and formatting that output again changes nothing.
pub fn round_trip_failure(path: &Path) -> Option<String> {
    let file = std::fs::read_to_string(path).expect("read fixture");
    let once = ualg(&["fmt", path.to_str().unwrap()]);
    if once.status.code() != Some(0) {
        return Some(format!(
            "fmt exited {:?}: {}",
            once.status.code(),
            stderr(&once)
        ));
    }
    let dir = tempfile::tempdir().expect("tempdir");
    let copy = dir.path().join("copy.toml");
    std::fs::write(&copy, &once.stdout).expect("write copy");
    let twice = ualg(&["fmt", copy.to_str().unwrap()]);
    if twice.stdout != once.stdout {
        return Some("second serialization differs from the first".into());
    }
    if once.stdout != file.as_bytes() {
        return Some("fixture is not in canonical form".into());
    }
    None
}

pub struct Case {
    pub name: &'static str,
    /// Document written to a temporary file and passed as `{doc}`.
    pub document: Option<String>,
    pub args: Vec<String>,
    pub env: Vec<(&'static str, &'static str)>,
    pub exit: i32,
    /// Expected on stdout or stderr.
    pub mentions: &'static str,
}

const Z3: &str = r#"format = "ualg/1"

[signatures.add]
ops = [["+", 2]]

[signatures.set]
ops = []

[algebras.z3]
signature = "add"
elements = ["0", "1", "2"]

[algebras.z3.ops]
"+" = [
  ["0", "1", "2"],
  ["1", "2", "0"],
  ["2", "0", "1"],
]

[algebras.m3]
signature = "set"
elements = ["a", "b", "c"]

[representations.t3]
domain = "z3"
space = "m3"
interp = { "+" = "compose" }
action = [
  ["a", "b", "c"],
  ["b", "c", "a"],
  ["c", "a", "b"],
]
"#;

fn doc_case(name: &'static str, document: String, exit: i32, mentions: &'static str) -> Case {
    Case {
        name,
        document: Some(document),
        args: vec!["validate".into(), "{doc}".into()],
        env: vec![],
        exit,
        mentions,
    }
}

fn arg_case(name: &'static str, args: &[&str], exit: i32, mentions: &'static str) -> Case {
    Case {
        name,
        document: None,
        args: args.iter().map(|s| s.to_string()).collect(),
        env: vec![],
        exit,
        mentions,
    }
}

pub fn malformed_matrix() -> Vec<Case> {
    let gf = fixture("gf_tower.toml").to_str().unwrap().to_owned();
    let tr = fixture("translations.toml").to_str().unwrap().to_owned();
    let st = fixture("sign_then_translate.toml")
        .to_str()
        .unwrap()
        .to_owned();
    let mut cases = vec![
        doc_case("baseline document is valid", Z3.into(), 0, "valid"),
        doc_case("toml syntax error", Z3.replace("[algebras.z3]", "[algebras.z3"), 1, "error"),
        doc_case("unsupported format tag", Z3.replace("ualg/1", "ualg/9"), 1, "unsupported format"),
        doc_case("unknown field", Z3.replace("signature = \"set\"", "signature = \"set\"\ncolour = 1"), 1, "unknown field"),
        doc_case("truncated table", Z3.replace("  [\"2\", \"0\", \"1\"],\n]", "]"), 2, "truncated table"),
        doc_case("entry out of range", Z3.replace("[\"1\", \"2\", \"0\"]", "[\"1\", \"2\", \"5\"]"), 2, "entry out of range"),
        doc_case("unknown signature", Z3.replace("signature = \"add\"", "signature = \"mul\""), 2, "unknown or invalid signature"),
        doc_case("short action row", Z3.replace("[\"b\", \"c\", \"a\"]", "[\"b\", \"c\"]"), 2, "2 entries"),
        doc_case("action breaks the homomorphism law", Z3.replace("[\"b\", \"c\", \"a\"]", "[\"c\", \"b\", \"a\"]"), 2, "law fails"),
        doc_case("unknown interpretation", Z3.replace("\"compose\"", "\"conjugate\""), 2, "is not compose"),
        doc_case(
            "word with an unknown operation",
            format!("{Z3}\n[generators.g]\ntarget = \"t3\"\nsets = [[\"a\"]]\n\n[words.w]\ntarget = \"t3\"\ngenerators = \"g\"\nword = \"op(*, gen(2, a))\"\n"),
            2,
            "not an operation",
        ),
        doc_case(
            "tower with mismatched layers",
            format!("{Z3}\n[towers.bad]\nreps = [\"t3\", \"t3\"]\n"),
            2,
            "acts on `m3`",
        ),
        arg_case("missing file", &["validate", "/nonexistent/ualg.toml"], 1, "No such file"),
        arg_case("unknown subcommand", &["frobnicate", &gf], 1, "unrecognized subcommand"),
        arg_case("unknown target", &["closure", &gf, "--target", "nope", "--set", "w;"], 1, "no representation or tower named"),
        arg_case("bad label in seed", &["closure", &gf, "--target", "gf", "--set", "w;9:9"], 1, "is not an element"),
        arg_case("wrong number of seed layers", &["closure", &gf, "--target", "gf", "--set", "w"], 1, "1 sets given"),
        arg_case("layer out of range", &["derive", &gf, "--tower", "gf", "--layer", "2"], 1, "layer + span"),
        arg_case("budget exhausted", &["automorphisms", &gf, "--target", "gf", "--budget", "50"], 1, "budget exceeded"),
        arg_case("morphism square fails", &["morphism-check", &tr, "--morphism", "broken"], 3, "FAILS"),
        arg_case("decompose a non-morphism", &["decompose", &tr, "--morphism", "broken"], 3, "invalid morphism"),
        arg_case("extension loses effectiveness", &["extend", &st, "--tower", "st"], 3, "act equally"),
    ];
    let mut env_case = arg_case(
        "budget from the environment",
        &["automorphisms", &gf, "--target", "gf"],
        1,
        "budget exceeded",
    );
    env_case.env = vec![("UALG_BUDGET", "50")];
    cases.push(env_case);
    cases
}

/// Runs one case; `None` when exit code and message match.
pub fn run_case(case: &Case) -> Option<String> {
    let dir = tempfile::tempdir().expect("tempdir");
    let doc = dir.path().join("doc.toml");
    if let Some(text) = &case.document {
        std::fs::write(&doc, text).expect("write document");
    }
    let args: Vec<String> = case
        .args
        .iter()
        .map(|a| a.replace("{doc}", doc.to_str().unwrap()))
        .collect();
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let out = ualg_env(&args, &case.env);
    let text = format!("{}{}", stdout(&out), stderr(&out));
    if out.status.code() != Some(case.exit) {
        return Some(format!(
            "exit {:?}, expected {}: {text}",
            out.status.code(),
            case.exit
        ));
    }
    if !text.contains(case.mentions) {
        return Some(format!("output lacks `{}`: {text}", case.mentions));
    }
    None
}
