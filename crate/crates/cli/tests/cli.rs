use std::path::PathBuf;
use std::process::Command;

use ialc::corpus::{self, FixtureKind};

fn corpus_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(rel)
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn ialc(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_ialc")).args(args).output().expect("binary runs");
    let run = Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    };
    let results = run.stdout.lines().filter(|l| l.starts_with("RESULT:")).count();
    assert_eq!(results, 1, "{args:?} printed {results} RESULT lines:\n{}", run.stdout);
    run
}

fn result(run: &Run) -> &str {
    run.stdout.lines().find_map(|l| l.strip_prefix("RESULT: ")).unwrap()
}

/// Standard output without the `RESULT:` line.
fn body(run: &Run) -> String {
    run.stdout.lines().filter(|l| !l.starts_with("RESULT:")).map(|l| format!("{l}\n")).collect()
}

/// One CLI invocation per fixture item, with the exit codes the fixture's
/// expected verdict implies.
#[test]
fn manifest_exit_codes() {
    for f in corpus::manifest().unwrap() {
        let path = corpus_path(&f.path);
        let p = path.to_str().unwrap();
        let bound = f.expected.bound.map(|b| b.to_string());
        let word = f.expected.word.as_str();
        match f.kind {
            FixtureKind::IalcModel => {
                let code = if word == "lint-pass" { 0 } else { 1 };
                assert_eq!(ialc(&["lint-model", p]).code, code, "{}", f.id);
            }
            FixtureKind::IalcProof => {
                let code = if word == "accepted" { 0 } else { 1 };
                assert_eq!(ialc(&["check-proof", p]).code, code, "{}", f.id);
            }
            FixtureKind::SdlTrace => {
                let code = if word == "accepted" { 0 } else { 1 };
                assert_eq!(ialc(&["sdl", "check", p]).code, code, "{}", f.id);
            }
            FixtureKind::SdlSet => {
                let t = corpus::load_trace(&f.path).unwrap();
                let list = t.assumptions.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ");
                let code = if word == "sat" { 0 } else { 1 };
                let run = ialc(&["sdl", "sat", &list, "--max", bound.as_deref().unwrap()]);
                assert_eq!(run.code, code, "{}", f.id);
                assert_eq!(result(&run), f.expected.to_string(), "{}", f.id);
            }
            FixtureKind::IalcSequent => {
                let codes: Vec<i32> = corpus::load_sequents(&f.path)
                    .unwrap()
                    .iter()
                    .map(|s| {
                        let s = s.to_string();
                        let b = bound.as_deref().unwrap_or("");
                        match (word, &f.model) {
                            (_, Some(model)) => ialc(&["valid", corpus_path(model).to_str().unwrap(), &s]).code,
                            ("valid", None) => ialc(&["countermodel", &s, "--max", b]).code,
                            ("countermodel", None) => 1 - ialc(&["countermodel", &s, "--max", b]).code,
                            ("provable" | "unprovable", None) => ialc(&["prove", &s, "--depth", b]).code,
                            (w, _) => panic!("unhandled verdict {w}"),
                        }
                    })
                    .collect();
                match word {
                    // Every item must come out as expected.
                    "valid" | "provable" => assert!(codes.iter().all(|&c| c == 0), "{}: {codes:?}", f.id),
                    "countermodel" => assert!(codes.iter().all(|&c| c == 0), "{}: {codes:?}", f.id),
                    "unprovable" => assert!(codes.iter().all(|&c| c == 1), "{}: {codes:?}", f.id),
                    w => panic!("unhandled verdict {w}"),
                }
            }
        }
    }
}

#[test]
fn countermodel_output_lints() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("witness.ikm");
    let run = ialc(&["countermodel", "|- x:(A or not A)", "--max", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(run.code, 1);
    assert_eq!(result(&run), "countermodel@2");
    assert_eq!(std::fs::read_to_string(&out).unwrap().lines().filter(|l| l.starts_with("world")).count(), 2);
    assert_eq!(ialc(&["lint-model", out.to_str().unwrap()]).code, 0);

    // The plain report minus its RESULT line is itself a model file.
    let piped = dir.path().join("piped.ikm");
    std::fs::write(&piped, body(&run)).unwrap();
    assert_eq!(ialc(&["lint-model", piped.to_str().unwrap()]).code, 0);
    let v = ialc(&["valid", piped.to_str().unwrap(), "|- x:(A or not A)"]);
    assert_eq!(v.code, 1, "{}", v.stdout);
}

#[test]
fn prove_output_checks() {
    let dir = tempfile::tempdir().unwrap();
    for theorem in corpus::load_sequents("sequents/axiom_theorems.seq").unwrap() {
        let out = dir.path().join("proof.ipf");
        let run = ialc(&["prove", &theorem.to_string(), "--depth", "8", "--out", out.to_str().unwrap()]);
        assert_eq!(run.code, 0, "{theorem}");
        assert_eq!(ialc(&["check-proof", out.to_str().unwrap()]).code, 0, "{theorem}");
        std::fs::write(&out, body(&run)).unwrap();
        assert_eq!(ialc(&["check-proof", out.to_str().unwrap()]).code, 0, "{theorem}");
    }
}

#[test]
fn negative_proof_search() {
    let run = ialc(&["prove", "|- x : A or not A", "--depth", "8"]);
    assert_eq!((run.code, result(&run)), (1, "unprovable@8"));
}

#[test]
fn eval_top_is_every_world() {
    let m = corpus_path("models/chisholm.ikm");
    let run = ialc(&["eval", m.to_str().unwrap(), "Top"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("{l0, l1, l2, l3, l4}"), "{}", run.stdout);
    let rec = ialc(&["--format", "records", "eval", m.to_str().unwrap(), "Top"]);
    assert!(rec.stdout.lines().any(|l| l == "extension=l0,l1,l2,l3,l4"), "{}", rec.stdout);
}

#[test]
fn demos_pass() {
    for name in ["chisholm", "free-choice", "axioms"] {
        let run = ialc(&["demo", name]);
        assert_eq!((run.code, result(&run)), (0, "demo-pass"), "{name}:\n{}", run.stdout);
    }
}

#[test]
fn records_are_key_value_lines() {
    let m = corpus_path("models/chisholm.ikm");
    for args in [
        vec!["--format", "records", "lint-model", m.to_str().unwrap()],
        vec!["--format", "records", "demo", "chisholm"],
        vec!["--format", "records", "sdl", "sat", "O(p); O(~p)", "--max", "2"],
    ] {
        let run = ialc(&args);
        for l in run.stdout.lines().filter(|l| !l.starts_with("RESULT:")) {
            assert!(l.split_once('=').is_some_and(|(k, _)| !k.is_empty() && !k.contains(' ')), "{args:?}: {l}");
        }
    }
}

#[test]
fn usage_and_input_errors_exit_2() {
    let bad_model = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(bad_model.path(), "world a\nworld b\nprec a b\natom A a\n").unwrap();
    let bad = bad_model.path().to_str().unwrap();
    for args in [
        vec!["frobnicate"],
        vec!["prove", "|- x : A"],
        vec!["parse", "x : A and"],
        vec!["countermodel", "|- x : A", "--max", "9"],
        vec!["prove", "|- x : A", "--depth", "13"],
        vec!["sdl", "sat", "O(p", "--max", "2"],
        vec!["check-proof", "/nonexistent.ipf"],
        // Heredity fails: A holds at a but not at its refinement b.
        vec!["eval", bad, "A"],
    ] {
        let run = ialc(&args);
        assert_eq!(run.code, 2, "{args:?}");
        assert!(!run.stderr.is_empty(), "{args:?}");
    }
    // lint-model reports the violation as a negative verdict instead.
    let run = ialc(&["lint-model", bad]);
    assert_eq!(run.code, 1);
    assert!(run.stdout.contains("HEREDITY"), "{}", run.stdout);
    assert_eq!(ialc(&["lint-model", bad, "--close"]).code, 0);
}

#[test]
fn help_has_one_result_line() {
    assert_eq!(ialc(&["--help"]).code, 0);
}
