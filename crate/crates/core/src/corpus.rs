//! Bundled fixtures for the worked examples, stored as text in the formats
//! of their owning modules and embedded at compile time.
//!
//! `manifest.txt` lists one fixture per line:
//!
//! ```text
//! <id> <KIND> <path> <expected> [<model path>]
//! ```
//!
//! Kinds: `IALC_MODEL`, `IALC_PROOF`, `IALC_SEQUENT`, `SDL_TRACE`, `SDL_SET`.
//! Expected verdicts: `lint-pass`, `accepted`, `rejected`, `valid` (in the
//! given model), `valid@n` (on every linted model up to n entities),
//! `provable@d`, `countermodel@n`, `sat@n`, `unsat@n`. A `.seq` file holds
//! one sequent per line.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::calculus::{check_proof, parse_proof, prove_bounded, ProofTree};
use crate::sdl::{check_derivation, find_model, parse_trace, Formula, Trace};
use crate::semantics::{check_frame_conditions, find_countermodel, load_model, parse_model, Interpretation, ModelSpace, Signature};
use crate::syntax::{parse_sequent, Sequent, Statement};

macro_rules! embed {
    ($($path:literal),* $(,)?) => {
        &[$(($path, include_str!(concat!("../../../corpus/", $path))),)*]
    };
}

/// Every corpus file, by path relative to the corpus root.
pub const FILES: &[(&str, &str)] = embed![
    "manifest.txt",
    "models/chisholm.ikm",
    "proofs/exists_bot.ipf",
    "proofs/exists_k.ipf",
    "proofs/exists_k_broken.ipf",
    "proofs/exists_or.ipf",
    "proofs/forall_from_exists.ipf",
    "proofs/forall_k.ipf",
    "sdl/chisholm.sdt",
    "sdl/chisholm_set.sdt",
    "sdl/chisholm_without_fact.sdt",
    "sdl/free_choice.sdt",
    "sdl/free_choice_without_fcp.sdt",
    "sequents/axiom_theorems.seq",
    "sequents/axioms.seq",
    "sequents/chisholm.seq",
    "sequents/paracomplete.seq",
    "sequents/unlabeled_axioms.seq",
];

/// Axiom proofs in the order of the axiom list: K for `all`, K for
/// `some`, distribution of `some` over `or`, `some R.Bot` is empty, and
/// the `some`/`all` interaction axiom.
pub const AXIOM_PROOFS: &[&str] = &[
    "proofs/forall_k.ipf",
    "proofs/exists_k.ipf",
    "proofs/exists_or.ipf",
    "proofs/exists_bot.ipf",
    "proofs/forall_from_exists.ipf",
];

pub fn file(path: &str) -> Option<&'static str> {
    FILES.iter().find(|(p, _)| *p == path).map(|(_, text)| *text)
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("no corpus file `{0}`")]
    Missing(String),
    #[error("manifest line {line}: {message}")]
    Manifest { line: usize, message: String },
    #[error("{path}: {message}")]
    Load { path: String, message: String },
}

fn text(path: &str) -> Result<&'static str, CorpusError> {
    file(path).ok_or_else(|| CorpusError::Missing(path.to_string()))
}

fn load_err(path: &str, e: impl fmt::Display) -> CorpusError {
    CorpusError::Load { path: path.to_string(), message: e.to_string() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureKind {
    IalcModel,
    IalcProof,
    IalcSequent,
    SdlTrace,
    SdlSet,
}

impl FixtureKind {
    pub fn name(self) -> &'static str {
        match self {
            FixtureKind::IalcModel => "IALC_MODEL",
            FixtureKind::IalcProof => "IALC_PROOF",
            FixtureKind::IalcSequent => "IALC_SEQUENT",
            FixtureKind::SdlTrace => "SDL_TRACE",
            FixtureKind::SdlSet => "SDL_SET",
        }
    }
}

impl FromStr for FixtureKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [FixtureKind::IalcModel, FixtureKind::IalcProof, FixtureKind::IalcSequent, FixtureKind::SdlTrace, FixtureKind::SdlSet]
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown fixture kind `{s}`"))
    }
}

/// A verdict word with an optional bound, e.g. `accepted` or `unsat@3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub word: String,
    pub bound: Option<usize>,
}

impl Verdict {
    fn new(word: &str, bound: Option<usize>) -> Self {
        Verdict { word: word.to_string(), bound }
    }
}

impl FromStr for Verdict {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.split_once('@') {
            None => Ok(Verdict::new(s, None)),
            Some((w, n)) => Ok(Verdict::new(w, Some(n.parse().map_err(|_| format!("bad bound in `{s}`"))?))),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.bound {
            None => f.write_str(&self.word),
            Some(n) => write!(f, "{}@{n}", self.word),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub id: String,
    pub kind: FixtureKind,
    pub path: String,
    pub expected: Verdict,
    pub model: Option<String>,
}

pub fn manifest() -> Result<Vec<Fixture>, CorpusError> {
    parse_manifest(text("manifest.txt")?)
}

pub fn parse_manifest(text: &str) -> Result<Vec<Fixture>, CorpusError> {
    let mut out = Vec::new();
    for (ix, raw) in text.lines().enumerate() {
        let line = ix + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let err = |message: String| CorpusError::Manifest { line, message };
        let words: Vec<&str> = content.split_whitespace().collect();
        let (id, kind, path, expected, model) = match words.as_slice() {
            [id, kind, path, expected] => (id, kind, path, expected, None),
            [id, kind, path, expected, model] => (id, kind, path, expected, Some(model.to_string())),
            _ => return Err(err("expected `id KIND path expected [model]`".into())),
        };
        out.push(Fixture {
            id: id.to_string(),
            kind: kind.parse().map_err(err)?,
            path: path.to_string(),
            expected: expected.parse().map_err(err)?,
            model,
        });
    }
    Ok(out)
}

pub fn load_sequents(path: &str) -> Result<Vec<Sequent>, CorpusError> {
    text(path)?
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| parse_sequent(l).map_err(|e| load_err(path, e)))
        .collect()
}

pub fn load_proof(path: &str) -> Result<ProofTree, CorpusError> {
    parse_proof(text(path)?).map_err(|e| load_err(path, e))
}

pub fn load_trace(path: &str) -> Result<Trace, CorpusError> {
    parse_trace(text(path)?).map_err(|e| load_err(path, e))
}

pub fn load_interpretation(path: &str) -> Result<Interpretation, CorpusError> {
    load_model(text(path)?, false).map_err(|e| load_err(path, e))
}

/// The five-law Chisholm model and the four statements it must satisfy.
pub fn load_chisholm_ialc() -> (Interpretation, Vec<Statement>) {
    let m = load_interpretation("models/chisholm.ikm").expect("bundled model loads");
    let statements = load_sequents("sequents/chisholm.seq").expect("bundled statements parse");
    (m, statements.into_iter().map(|s| s.succedent).collect())
}

/// The SDL formalization of the Chisholm scenario and the trace deriving
/// `false` from it.
pub fn load_chisholm_sdl() -> (Vec<Formula>, Trace) {
    let trace = load_trace("sdl/chisholm.sdt").expect("bundled trace parses");
    (trace.assumptions.clone(), trace)
}

/// Theorem and proof for each axiom, in [`AXIOM_PROOFS`] order.
pub fn load_axiom_proofs() -> Vec<(Sequent, ProofTree)> {
    AXIOM_PROOFS
        .iter()
        .map(|p| {
            let t = load_proof(p).expect("bundled proof parses");
            (t.conclusion.clone(), t)
        })
        .collect()
}

pub fn load_free_choice_trace() -> Trace {
    load_trace("sdl/free_choice.sdt").expect("bundled trace parses")
}

/// Runs the checker that owns `f` and reports the observed verdict in the
/// manifest's vocabulary, using the expected verdict's bound.
pub fn observe(f: &Fixture) -> Result<Verdict, CorpusError> {
    let bound = f.expected.bound;
    let need_bound = || bound.ok_or_else(|| load_err(&f.path, "this verdict needs a bound"));
    let yes_no = |ok: bool, yes: &str, no: &str, b: Option<usize>| Verdict::new(if ok { yes } else { no }, b);
    let v = match f.kind {
        FixtureKind::IalcModel => {
            let m = parse_model(text(&f.path)?).map_err(|e| load_err(&f.path, e))?;
            yes_no(check_frame_conditions(&m).passed, "lint-pass", "lint-fail", None)
        }
        FixtureKind::IalcProof => yes_no(check_proof(&load_proof(&f.path)?).accepted, "accepted", "rejected", None),
        FixtureKind::SdlTrace => yes_no(check_derivation(&load_trace(&f.path)?).accepted, "accepted", "rejected", None),
        FixtureKind::SdlSet => {
            let n = need_bound()?;
            let t = load_trace(&f.path)?;
            let found = find_model(&t.assumptions, n, true).map_err(|e| load_err(&f.path, e))?;
            yes_no(found.is_some(), "sat", "unsat", Some(n))
        }
        FixtureKind::IalcSequent => {
            let seqs = load_sequents(&f.path)?;
            match (f.expected.word.as_str(), &f.model) {
                (_, Some(model)) => {
                    let m = load_interpretation(model)?;
                    let mut all = true;
                    for s in &seqs {
                        all &= m.sequent_valid(s).map_err(|e| load_err(&f.path, e))?;
                    }
                    yes_no(all, "valid", "invalid", None)
                }
                ("valid" | "invalid", None) => {
                    let n = need_bound()?;
                    let mut all = true;
                    for s in &seqs {
                        let space = ModelSpace::new(Signature::of_sequent(s), n).map_err(|e| load_err(&f.path, e))?;
                        all &= space.valid(s).map_err(|e| load_err(&f.path, e))?;
                    }
                    yes_no(all, "valid", "invalid", Some(n))
                }
                ("provable" | "unprovable", None) => {
                    let d = need_bound()?;
                    let mut all = true;
                    for s in &seqs {
                        all &= prove_bounded(s, d).map_err(|e| load_err(&f.path, e))?.is_some();
                    }
                    yes_no(all, "provable", "unprovable", Some(d))
                }
                ("countermodel" | "no-countermodel", None) => {
                    let n = need_bound()?;
                    let mut all = true;
                    for s in &seqs {
                        all &= find_countermodel(&Signature::of_sequent(s), s, n).map_err(|e| load_err(&f.path, e))?.is_some();
                    }
                    yes_no(all, "countermodel", "no-countermodel", Some(n))
                }
                (w, None) => return Err(load_err(&f.path, format!("unknown sequent verdict `{w}`"))),
            }
        }
    };
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_lists_only_bundled_files() {
        for f in manifest().unwrap() {
            assert!(file(&f.path).is_some(), "{}", f.path);
            if let Some(m) = &f.model {
                assert!(file(m).is_some(), "{m}");
            }
        }
    }

    #[test]
    fn chisholm_model_shape() {
        let (m, statements) = load_chisholm_ialc();
        assert_eq!(m.entities(), ["l0", "l1", "l2", "l3", "l4"]);
        assert_eq!(statements.len(), 4);
        for s in &statements {
            assert!(m.satisfies(s).unwrap(), "{s}");
        }
    }

    #[test]
    fn axiom_proofs_in_order() {
        let proofs = load_axiom_proofs();
        assert_eq!(proofs.len(), 5);
        assert!(proofs[0].1.rules_used().contains(&crate::calculus::RuleName::PForall));
        assert!(proofs[1].1.rules_used().contains(&crate::calculus::RuleName::PExists));
    }
}
