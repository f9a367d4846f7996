//! Byte-exact output checks. Set `UPDATE_GOLDEN=1` to rewrite the files.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests")
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_burau"))
        .args(args)
        .current_dir(dir())
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

const CASES: &[(&str, &[&str])] = &[
    ("burau_s1", &["burau", "--braid", "s1", "-n", "2"]),
    ("burau_s1_inv", &["burau", "--braid", "s1^-1", "-n", "2"]),
    ("burau_s1s2s1", &["burau", "--braid", "s1 s2 s1", "-n", "3"]),
    ("burau_s2s1s2", &["burau", "--braid", "s2 s1 s2", "-n", "3"]),
    ("burau_identity", &["burau", "--file", "data/valid/identity.tangle"]),
    ("burau_kink", &["burau", "--file", "data/valid/kink.tangle"]),
    ("burau_threaded_kink", &["burau", "--file", "data/valid/threaded_kink.tangle"]),
    ("burau_threaded_kink_eval", &["burau", "--file", "data/valid/threaded_kink.tangle", "--eval", "1/2"]),
    ("burau_s1_json", &["burau", "--braid", "s1", "-n", "2", "--json"]),
    ("series_s1", &["series", "--braid", "s1", "-n", "2", "--k", "3"]),
    ("compose", &["compose", "--braid", "s1", "-n", "2", "--with-braid", "s1^-1"]),
    ("power", &["power", "--file", "data/valid/trefoil_braid.tangle", "--times", "2"]),
    ("mirror", &["mirror", "--braid", "s1 s2^-1", "-n", "3"]),
    ("move_list", &["move", "--braid", "s1 s2 s1", "-n", "3", "--list"]),
    ("move_r3", &["move", "--braid", "s1 s2 s1", "-n", "3", "--move", "r3:1:2:3"]),
    ("move_r1", &["move", "--braid", "s1", "-n", "2", "--move", "r1:2:1:-:uo"]),
    ("vassiliev_s1", &["vassiliev", "--braid", "s1", "-n", "2", "--double", "1"]),
    ("vassiliev_file", &["vassiliev", "--file", "data/singular.tangle", "--k", "2"]),
    ("bk_two_points", &["bk", "--braid", "s1 s2 s1", "-n", "3", "--double", "1,3", "--k", "1"]),
    ("bk_s1", &["bk", "--braid", "s1", "-n", "2", "--k", "1"]),
    ("markov_s1", &["markov", "--braid", "s1", "-n", "2", "--t", "1/2"]),
    ("markov_s1_json", &["markov", "--braid", "s1", "-n", "2", "--t", "1/2", "--json"]),
    ("markov_split", &["markov", "--braid", "s1 s3", "-n", "4", "--t", "0.25"]),
    ("simulate", &["simulate", "--braid", "s1 s2", "-n", "3", "--t", "3/4", "--trials", "20000", "--seed", "42"]),
    ("stationary", &["stationary", "--braid", "s1 s2 s1 s2", "-n", "3", "--t", "1/2"]),
    ("entropy", &["entropy", "--braid", "s1", "-n", "2", "--t", "1/2"]),
    ("persistence", &["persistence", "--braid", "s1", "-n", "2", "--t", "1/2", "--nmax", "100"]),
    ("validate_ok", &["validate", "--file", "data/valid/threaded_kink.tangle"]),
    ("validate_singular", &["validate", "--singular", "--file", "data/singular.tangle"]),
];

#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut failures = Vec::new();
    for (name, args) in CASES {
        let (code, out, err) = run(args);
        assert_eq!(code, 0, "{name}: {err}");
        let path = dir().join("golden").join(format!("{name}.out"));
        if update {
            fs::write(&path, &out).unwrap();
        } else if fs::read_to_string(&path).ok().as_deref() != Some(out.as_str()) {
            failures.push(format!("{name}:\n{out}"));
        }
    }
    assert!(failures.is_empty(), "golden mismatch:\n{}", failures.join("\n"));
}

#[test]
fn braid_relation_is_byte_identical() {
    assert_eq!(run(&["burau", "--braid", "s1 s2 s1", "-n", "3"]).1, run(&["burau", "--braid", "s2 s1 s2", "-n", "3"]).1);
}

#[test]
fn validate_accepts_exactly_the_parser() {
    for entry in fs::read_dir(dir().join("data/valid")).unwrap() {
        let p = entry.unwrap().path();
        let (code, out, _) = run(&["validate", "--file", p.to_str().unwrap()]);
        assert_eq!(code, 0, "{}", p.display());
        assert!(out.starts_with("ok:"));
        assert!(burau_core::parse_tangle(&fs::read_to_string(&p).unwrap()).is_ok());
    }
    for entry in fs::read_dir(dir().join("data/invalid")).unwrap() {
        let p = entry.unwrap().path();
        let (code, out, err) = run(&["validate", "--file", p.to_str().unwrap()]);
        assert_eq!(code, 2, "{}", p.display());
        assert!(out.is_empty());
        assert!(err.contains("line "), "{err}");
        assert!(burau_core::parse_tangle(&fs::read_to_string(&p).unwrap()).is_err());
    }
}

#[test]
fn json_matrix_round_trips() {
    let (_, out, _) = run(&["burau", "--file", "data/valid/threaded_kink.tangle", "--json"]);
    let parsed: burau_core::matrix::MatrixJson = serde_json::from_str(&out).unwrap();
    let m = burau_core::BurauMatrix::from_json(&parsed).unwrap();
    let d = burau_core::parse_tangle(&fs::read_to_string(dir().join("data/valid/threaded_kink.tangle")).unwrap()).unwrap();
    assert_eq!(m, burau_core::burau_matrix(&d).unwrap());
}

#[test]
fn markov_json_has_the_report_fields() {
    let (_, out, _) = run(&["markov", "--braid", "s1 s2", "-n", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for key in ["matrix", "u", "entropy", "N", "diagnostics"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn error_statuses_and_streams() {
    let cases: &[(&[&str], i32, &str)] = &[
        (&["markov", "--braid", "s1^-1", "-n", "2"], 1, "requires positive string links"),
        (&["stationary", "--braid", "s1 s3", "-n", "4"], 1, ""),
        (&["move", "--braid", "s1 s2", "-n", "3", "--move", "r3:1:2:3"], 1, ""),
        (&["markov", "--braid", "s1", "-n", "2", "--t", "2"], 2, "--t"),
        (&["burau", "--braid", "s3", "-n", "2"], 2, "line 1, column 1"),
        (&["burau", "--braid", "s1"], 2, "-n"),
        (&["burau", "--braid", "s1", "-n", "2", "--file", "x"], 2, "not both"),
        (&["burau", "--file", "data/does_not_exist.tangle"], 2, "does_not_exist"),
        (&["burau", "--file", "data/invalid/bad_token.tangle"], 2, "line 3, column 26"),
        (&["move", "--braid", "s1", "-n", "2", "--move", "r9:1"], 2, "unknown move kind"),
        (&["frobnicate"], 2, ""),
        (&["power", "--braid", "s1", "-n", "2"], 2, "--times"),
        (&["vassiliev", "--braid", "s1", "-n", "2", "--double", "5"], 1, "5"),
    ];
    for (args, status, needle) in cases {
        let (code, out, err) = run(args);
        assert_eq!(code, *status, "{args:?}: {err}");
        assert!(out.is_empty(), "{args:?} wrote to stdout");
        assert!(err.contains(needle), "{args:?}: {err}");
    }
}

#[test]
fn tempfile_input() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    std::io::Write::write_all(&mut f, b"strands 2\ncrossing 1 +\nstrand 1 from 1 to 2: O1\nstrand 2 from 2 to 1: U1\n").unwrap();
    let (code, out, _) = run(&["burau", "--file", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "[1 - t, t]\n[1, 0]\n");
}
