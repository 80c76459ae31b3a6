//! The `.ipf` proof format: one numbered node per line,
//!
//! ```text
//! 1. A |- A [AX]
//! 2. B |- B [AX]
//! 3. A -> B; A |- B [SUBS-L premises=1,2]
//! ```
//!
//! Optional fields follow the rule name in the order `premises=`, `fresh=`,
//! `cut=`; `cut=` takes the rest of the bracket as a statement. Lines are
//! numbered 1, 2, ... in order, premises refer to earlier lines, the last
//! line is the root, and every other line is used exactly once. Blank lines
//! and lines starting with `#` are ignored.

use thiserror::Error;

use super::{Instantiation, ProofTree, RuleName};
use crate::syntax::{parse_sequent, parse_statement, Sequent};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct IpfError {
    pub line: usize,
    pub message: String,
}

struct Line {
    text_line: usize,
    conclusion: Sequent,
    rule: RuleName,
    premises: Vec<usize>,
    inst: Instantiation,
}

pub fn parse_proof(text: &str) -> Result<ProofTree, IpfError> {
    let mut lines: Vec<Line> = Vec::new();
    for (ix, raw) in text.lines().enumerate() {
        let text_line = ix + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let err = |message: String| IpfError { line: text_line, message };
        let (num, rest) = content.split_once('.').ok_or_else(|| err("expected `n.` at line start".into()))?;
        let n: usize = num.trim().parse().map_err(|_| err(format!("bad node number `{num}`")))?;
        if n != lines.len() + 1 {
            return Err(err(format!("expected node {}, found {n}", lines.len() + 1)));
        }
        let open = rest.rfind('[').ok_or_else(|| err("missing `[RULE ...]`".into()))?;
        let inner = rest[open + 1..].trim_end();
        let inner = inner.strip_suffix(']').ok_or_else(|| err("missing closing `]`".into()))?;
        let conclusion = parse_sequent(&rest[..open]).map_err(|e| err(format!("sequent: {e}")))?;

        let (fields, cut) = match inner.find("cut=") {
            Some(i) => {
                let stmt = parse_statement(&inner[i + 4..]).map_err(|e| err(format!("cut statement: {e}")))?;
                (&inner[..i], Some(stmt))
            }
            None => (inner, None),
        };
        let mut words = fields.split_whitespace();
        let rule_name = words.next().ok_or_else(|| err("missing rule name".into()))?;
        let rule: RuleName = rule_name.parse().map_err(|e| err(format!("{e}")))?;
        let mut premises = Vec::new();
        let mut fresh = None;
        for w in words {
            if let Some(list) = w.strip_prefix("premises=") {
                for p in list.split(',') {
                    let p: usize = p.parse().map_err(|_| err(format!("bad premise reference `{p}`")))?;
                    if p == 0 || p >= n {
                        return Err(err(format!("premise {p} must refer to an earlier line")));
                    }
                    premises.push(p);
                }
            } else if let Some(y) = w.strip_prefix("fresh=") {
                fresh = Some(y.to_string());
            } else {
                return Err(err(format!("unknown field `{w}`")));
            }
        }
        lines.push(Line { text_line, conclusion, rule, premises, inst: Instantiation { fresh, cut } });
    }
    if lines.is_empty() {
        return Err(IpfError { line: 0, message: "empty proof".into() });
    }
    let mut uses = vec![0usize; lines.len() + 1];
    for l in &lines {
        for &p in &l.premises {
            uses[p] += 1;
        }
    }
    for (i, l) in lines.iter().enumerate() {
        let n = i + 1;
        let expected = if n == lines.len() { 0 } else { 1 };
        if uses[n] != expected {
            let message = match (expected, uses[n]) {
                (_, 0) => format!("node {n} is not used by any later node"),
                (0, _) => format!("root node {n} is used as a premise"),
                (_, k) => format!("node {n} is used {k} times"),
            };
            return Err(IpfError { line: l.text_line, message });
        }
    }
    let mut slots: Vec<Option<Line>> = lines.into_iter().map(Some).collect();
    let root = slots.len();
    Ok(assemble(&mut slots, root))
}

fn assemble(slots: &mut [Option<Line>], n: usize) -> ProofTree {
    let line = slots[n - 1].take().expect("each node is used once");
    let premises = line.premises.iter().map(|&p| assemble(slots, p)).collect();
    ProofTree { conclusion: line.conclusion, rule: line.rule, premises, instantiation: line.inst }
}

/// Prints nodes in post-order, so premises always precede their conclusion.
pub fn write_proof(tree: &ProofTree) -> String {
    let mut out = Vec::new();
    emit(tree, &mut out);
    let mut s = out.join("\n");
    s.push('\n');
    s
}

fn emit(t: &ProofTree, out: &mut Vec<String>) -> usize {
    let refs: Vec<String> = t.premises.iter().map(|p| emit(p, out).to_string()).collect();
    let mut line = format!("{}. {} [{}", out.len() + 1, t.conclusion, t.rule);
    if !refs.is_empty() {
        line.push_str(&format!(" premises={}", refs.join(",")));
    }
    if let Some(y) = &t.instantiation.fresh {
        line.push_str(&format!(" fresh={y}"));
    }
    if let Some(c) = &t.instantiation.cut {
        line.push_str(&format!(" cut={c}"));
    }
    line.push(']');
    out.push(line);
    out.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "1. A |- A [AX]\n2. B |- B [AX]\n3. A -> B; A |- B [SUBS-L premises=1,2]\n";

    #[test]
    fn parse_and_print() {
        let t = parse_proof(SAMPLE).unwrap();
        assert_eq!(t.rule, RuleName::SubsL);
        assert_eq!(t.premises.len(), 2);
        assert_eq!(write_proof(&t), SAMPLE);
    }

    #[test]
    fn fields_round_trip() {
        let text = "1. x R y0; y0 : Bot |- x : Bot [BOT-L]\n2. x : some R.Bot |- x : Bot [EXISTS-L premises=1 fresh=y0]\n3. x : some R.Bot |- x : Bot [CUT premises=2,1 cut=x : (A and B)]\n";
        // not a valid proof, but syntactically fine apart from reuse of line 1
        assert!(parse_proof(text).is_err());
        let text = "1. A |- A [AX]\n2. A |- A [AX]\n3. A |- A [CUT premises=1,2 cut=A]\n";
        let t = parse_proof(text).unwrap();
        assert_eq!(write_proof(&t), text);
    }

    #[test]
    fn structural_errors() {
        assert_eq!(parse_proof("1. A |- A [AX]\n2. A |- A [AX]\n").unwrap_err().line, 1);
        assert!(parse_proof("1. A |- A [WEAK premises=2]\n2. A |- A [AX]\n").is_err());
        assert!(parse_proof("2. A |- A [AX]\n").is_err());
        assert!(parse_proof("1. A |- A [FOO]\n").unwrap_err().message.contains("unknown rule"));
        assert!(parse_proof("1. A |- A AX\n").is_err());
        assert!(parse_proof("# only a comment\n").is_err());
    }
}
