//! The line-based `.ikm` model format:
//!
//! ```text
//! world <id>
//! prec <id> <id>          # generator of the refinement preorder
//! role <Name> <id> <id>
//! atom <Name> <id>
//! nominal <name> <id>
//! ```
//!
//! `#` starts a comment. [`write_model`] emits worlds and `prec` lines in
//! stored order, then roles, atoms and nominals sorted by name.

use thiserror::Error;

use super::lint::{check_frame_conditions, LintReport};
use super::{Interpretation, SemanticsError};
use crate::syntax::is_reserved;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ModelFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Semantics { line: usize, source: SemanticsError },
    #[error("model fails lint: {}", summarize(.0))]
    Lint(LintReport),
}

fn summarize(r: &LintReport) -> String {
    r.violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

fn upper_name(s: &str) -> bool {
    s.starts_with(|c: char| c.is_ascii_uppercase())
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !is_reserved(s)
}

fn lower_name(s: &str) -> bool {
    s.starts_with(|c: char| c.is_ascii_lowercase())
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !is_reserved(s)
}

/// Parses a model without closing or linting it.
pub fn parse_model(text: &str) -> Result<Interpretation, ModelFileError> {
    let mut m = Interpretation::new();
    for (ix, raw) in text.lines().enumerate() {
        let line = ix + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        let syntax = |message: String| ModelFileError::Syntax { line, message };
        let sem = |source| ModelFileError::Semantics { line, source };
        match words.as_slice() {
            ["world", id] => {
                m.add_entity(*id).map_err(sem)?;
            }
            ["prec", a, b] => m.add_precedence(a, b).map_err(sem)?,
            ["role", r, a, b] => {
                if !upper_name(r) {
                    return Err(syntax(format!("role names start uppercase, found `{r}`")));
                }
                m.add_role_pair(r, a, b).map_err(sem)?
            }
            ["atom", p, e] => {
                if !upper_name(p) {
                    return Err(syntax(format!("atom names start uppercase, found `{p}`")));
                }
                m.add_atom_fact(p, e).map_err(sem)?
            }
            ["nominal", x, e] => {
                if !lower_name(x) {
                    return Err(syntax(format!("nominals start lowercase, found `{x}`")));
                }
                m.set_nominal(x, e).map_err(sem)?
            }
            [kw, ..] if ["world", "prec", "role", "atom", "nominal"].contains(kw) => {
                return Err(syntax(format!("wrong number of fields for `{kw}`")));
            }
            [kw, ..] => return Err(syntax(format!("unknown directive `{kw}`"))),
            [] => unreachable!(),
        }
    }
    Ok(m)
}

/// Parses, optionally applies the hereditary closure, and rejects models
/// that fail lint (without `close`, a non-hereditary valuation is an error).
pub fn load_model(text: &str, close: bool) -> Result<Interpretation, ModelFileError> {
    let mut m = parse_model(text)?;
    if close {
        m = m.hereditary_closure();
    }
    let report = check_frame_conditions(&m);
    if report.passed {
        Ok(m)
    } else {
        Err(ModelFileError::Lint(report))
    }
}

pub fn write_model(m: &Interpretation) -> String {
    let mut out = String::new();
    let e = m.entities();
    for w in e {
        out.push_str(&format!("world {w}\n"));
    }
    for (a, b) in m.generators() {
        out.push_str(&format!("prec {a} {b}\n"));
    }
    for role in m.role_names() {
        for (a, b) in m.role_pairs(role) {
            out.push_str(&format!("role {role} {} {}\n", e[a], e[b]));
        }
    }
    for atom in m.atom_names() {
        for i in m.atom(atom).iter() {
            out.push_str(&format!("atom {atom} {}\n", e[i]));
        }
    }
    for (x, i) in m.nominals() {
        out.push_str(&format!("nominal {x} {}\n", e[i]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const CHAIN: &str = "world w0\nworld w1\nprec w0 w1\natom A w0\nnominal x w0\n";

    #[test]
    fn heredity_is_an_error_unless_closed() {
        assert!(matches!(load_model(CHAIN, false), Err(ModelFileError::Lint(_))));
        let m = load_model(CHAIN, true).unwrap();
        assert_eq!(m.names_of(m.atom("A")), ["w0", "w1"]);
    }

    #[test]
    fn write_then_parse() {
        let m = parse_model(CHAIN).unwrap();
        assert_eq!(write_model(&m), CHAIN);
    }

    #[test]
    fn syntax_errors_have_lines() {
        let err = parse_model("world a\nprec a b\n").unwrap_err();
        assert_eq!(err, ModelFileError::Semantics { line: 2, source: SemanticsError::UnknownEntity("b".into()) });
        let err = parse_model("world a\nfoo\n").unwrap_err();
        assert!(matches!(err, ModelFileError::Syntax { line: 2, .. }));
        assert!(parse_model("world a\natom p a\n").is_err());
        assert!(parse_model("world a\nnominal Not a\n").is_err());
        assert!(parse_model("world a\nworld a\n").is_err());
    }

    #[test]
    fn comments_and_blank_lines() {
        let m = parse_model("# header\n\nworld a # the only one\n").unwrap();
        assert_eq!(m.entities(), ["a"]);
    }
}
