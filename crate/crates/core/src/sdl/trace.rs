//! Hilbert-style derivation traces and the `.sdt` format:
//!
//! ```text
//! assume O(p)
//! 1. O(p) [HYP]
//! 2. p => p | q [TAUT]
//! 3. O(p => p | q) [OB-NEC 2]
//! ```
//!
//! Justifications: `HYP`, `TAUT`, `OB-K`, `OB-D`, `FCP`, `MP i,j`,
//! `OB-NEC i`, `CP i`. Step numbers must increase; references to missing
//! or later steps are reported by [`check_derivation`], not by the parser.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use super::parse::parse_formula;
use super::{taut_check, Formula};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    Hyp,
    Taut,
    ObK,
    ObD,
    Fcp,
    /// Modus ponens from steps `i` and `j`, in either order.
    Mp(usize, usize),
    /// Necessitation; the referenced step must not depend on hypotheses.
    ObNec(usize),
    /// Contraposition: from `a => b` infer `~b => ~a`.
    Cp(usize),
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Hyp => f.write_str("HYP"),
            Justification::Taut => f.write_str("TAUT"),
            Justification::ObK => f.write_str("OB-K"),
            Justification::ObD => f.write_str("OB-D"),
            Justification::Fcp => f.write_str("FCP"),
            Justification::Mp(i, j) => write!(f, "MP {i},{j}"),
            Justification::ObNec(i) => write!(f, "OB-NEC {i}"),
            Justification::Cp(i) => write!(f, "CP {i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub number: usize,
    pub formula: Formula,
    pub justification: Justification,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trace {
    pub assumptions: Vec<Formula>,
    pub steps: Vec<TraceStep>,
}

impl Trace {
    /// The formula of the last step.
    pub fn conclusion(&self) -> Option<&Formula> {
        self.steps.last().map(|s| &s.formula)
    }

    /// The trace without the step numbered `n` (other numbers unchanged).
    pub fn without_step(&self, n: usize) -> Trace {
        Trace { assumptions: self.assumptions.clone(), steps: self.steps.iter().filter(|s| s.number != n).cloned().collect() }
    }

    /// Steps numbered up to and including `n`.
    pub fn prefix(&self, n: usize) -> Trace {
        Trace { assumptions: self.assumptions.clone(), steps: self.steps.iter().filter(|s| s.number <= n).cloned().collect() }
    }

    pub fn step(&self, n: usize) -> Option<&TraceStep> {
        self.steps.iter().find(|s| s.number == n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct TraceError {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdlFailure {
    pub step: usize,
    pub reason: String,
}

impl fmt::Display for SdlFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: {}", self.step, self.reason)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdlVerdict {
    pub accepted: bool,
    pub failures: Vec<SdlFailure>,
}

fn parse_justification(text: &str) -> Result<Justification, String> {
    let mut words = text.split_whitespace();
    let name = words.next().ok_or("missing justification")?;
    let args: Vec<usize> = match words.next() {
        None => Vec::new(),
        Some(list) => list.split(',').map(|n| n.trim().parse::<usize>().map_err(|_| format!("bad step reference `{n}`"))).collect::<Result<_, _>>()?,
    };
    if words.next().is_some() {
        return Err("trailing text after justification".into());
    }
    let j = match (name, args.as_slice()) {
        ("HYP", []) => Justification::Hyp,
        ("TAUT", []) => Justification::Taut,
        ("OB-K", []) => Justification::ObK,
        ("OB-D", []) => Justification::ObD,
        ("FCP", []) => Justification::Fcp,
        ("MP", [i, j]) => Justification::Mp(*i, *j),
        ("OB-NEC", [i]) => Justification::ObNec(*i),
        ("CP", [i]) => Justification::Cp(*i),
        ("HYP" | "TAUT" | "OB-K" | "OB-D" | "FCP" | "MP" | "OB-NEC" | "CP", _) => {
            return Err(format!("wrong number of step references for {name}"))
        }
        _ => return Err(format!("unknown justification `{name}`")),
    };
    Ok(j)
}

pub fn parse_trace(text: &str) -> Result<Trace, TraceError> {
    let mut trace = Trace::default();
    for (ix, raw) in text.lines().enumerate() {
        let line = ix + 1;
        let content = raw.trim();
        let err = |message: String| TraceError { line, message };
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        if let Some(rest) = content.strip_prefix("assume ") {
            if !trace.steps.is_empty() {
                return Err(err("assumptions must precede the steps".into()));
            }
            trace.assumptions.push(parse_formula(rest).map_err(|e| err(e.to_string()))?);
            continue;
        }
        let (num, rest) = content.split_once('.').ok_or_else(|| err("expected `assume` or `n.`".into()))?;
        let number: usize = num.trim().parse().map_err(|_| err(format!("bad step number `{num}`")))?;
        if trace.steps.last().is_some_and(|s| s.number >= number) {
            return Err(err("step numbers must increase".into()));
        }
        let open = rest.rfind('[').ok_or_else(|| err("missing `[JUSTIFICATION]`".into()))?;
        let just = rest[open + 1..].trim_end().strip_suffix(']').ok_or_else(|| err("missing closing `]`".into()))?;
        let formula = parse_formula(&rest[..open]).map_err(|e| err(e.to_string()))?;
        let justification = parse_justification(just).map_err(err)?;
        trace.steps.push(TraceStep { number, formula, justification });
    }
    Ok(trace)
}

pub fn write_trace(t: &Trace) -> String {
    let mut out = String::new();
    for a in &t.assumptions {
        out.push_str(&format!("assume {a}\n"));
    }
    for s in &t.steps {
        out.push_str(&format!("{}. {} [{}]\n", s.number, s.formula, s.justification));
    }
    out
}

fn is_ob_k(f: &Formula) -> bool {
    // O(a => b) => (O(a) => O(b))
    let Some((Formula::Ob(ab), rest)) = f.as_impl() else { return false };
    let (Some((a, b)), Some((Formula::Ob(a2), Formula::Ob(b2)))) = (ab.as_impl(), rest.as_impl()) else { return false };
    a == a2.as_ref() && b == b2.as_ref()
}

fn is_ob_d(f: &Formula) -> bool {
    // O(a) => ~O(~a)
    let Some((Formula::Ob(a), rhs)) = f.as_impl() else { return false };
    rhs.as_perm() == Some(a)
}

fn is_fcp(f: &Formula) -> bool {
    // P(a | b) => P(a) & P(b)
    let Some((lhs, Formula::Conj(pa, pb))) = f.as_impl() else { return false };
    let Some(Formula::Disj(a, b)) = lhs.as_perm() else { return false };
    pa.as_perm() == Some(a) && pb.as_perm() == Some(b)
}

/// Validates every step; `OB-NEC` only applies to steps whose derivation
/// uses no `HYP`.
pub fn check_derivation(t: &Trace) -> SdlVerdict {
    let mut failures = Vec::new();
    // number -> (formula, pure)
    let mut seen: HashMap<usize, (&Formula, bool)> = HashMap::new();
    for step in &t.steps {
        let f = &step.formula;
        let lookup = |i: usize| seen.get(&i).copied().ok_or_else(|| format!("step {i} is not an earlier step"));
        let result: Result<bool, String> = (|| match &step.justification {
            Justification::Hyp => {
                if t.assumptions.contains(f) {
                    Ok(false)
                } else {
                    Err("not an assumption".into())
                }
            }
            Justification::Taut => taut_check(f).then_some(true).ok_or_else(|| "not a tautology".into()),
            Justification::ObK => is_ob_k(f).then_some(true).ok_or_else(|| "not an instance of O(a => b) => O(a) => O(b)".into()),
            Justification::ObD => is_ob_d(f).then_some(true).ok_or_else(|| "not an instance of O(a) => ~O(~a)".into()),
            Justification::Fcp => is_fcp(f).then_some(true).ok_or_else(|| "not an instance of P(a | b) => P(a) & P(b)".into()),
            Justification::Mp(i, j) => {
                let (a, pa) = lookup(*i)?;
                let (b, pb) = lookup(*j)?;
                let fits = |minor: &Formula, major: &Formula| major.as_impl() == Some((minor, f));
                if fits(a, b) || fits(b, a) {
                    Ok(pa && pb)
                } else {
                    Err(format!("steps {i} and {j} do not yield this formula by MP"))
                }
            }
            Justification::ObNec(i) => {
                let (a, pure) = lookup(*i)?;
                if !pure {
                    return Err(format!("step {i} depends on a hypothesis"));
                }
                if *f == Formula::ob(a.clone()) {
                    Ok(true)
                } else {
                    Err(format!("not O of step {i}"))
                }
            }
            Justification::Cp(i) => {
                let (a, pure) = lookup(*i)?;
                let Some((x, y)) = a.as_impl() else { return Err(format!("step {i} is not an implication")) };
                if *f == Formula::imp(Formula::neg(y.clone()), Formula::neg(x.clone())) {
                    Ok(pure)
                } else {
                    Err(format!("not the contrapositive of step {i}"))
                }
            }
        })();
        match result {
            Ok(pure) => {
                seen.insert(step.number, (f, pure));
            }
            Err(reason) => {
                failures.push(SdlFailure { step: step.number, reason });
                // keep the formula available so one error is reported once
                seen.insert(step.number, (f, false));
            }
        }
    }
    SdlVerdict { accepted: failures.is_empty(), failures }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_hypothesis() {
        let t = parse_trace("assume O(p)\n1. O(p) [HYP]\n").unwrap();
        assert!(check_derivation(&t).accepted);
    }

    #[test]
    fn necessitation_needs_a_pure_step() {
        let t = parse_trace("assume p\n1. p [HYP]\n2. O(p) [OB-NEC 1]\n").unwrap();
        let v = check_derivation(&t);
        assert_eq!(v.failures.len(), 1);
        assert_eq!(v.failures[0].step, 2);
        let t = parse_trace("1. p => p [TAUT]\n2. O(p => p) [OB-NEC 1]\n").unwrap();
        assert!(check_derivation(&t).accepted);
    }

    #[test]
    fn schema_instances() {
        assert!(is_ob_k(&parse_formula("O(p => q) => O(p) => O(q)").unwrap()));
        assert!(!is_ob_k(&parse_formula("O(p => q) => O(q) => O(p)").unwrap()));
        assert!(is_ob_d(&parse_formula("O(p & q) => P(p & q)").unwrap()));
        assert!(is_fcp(&parse_formula("P(p | q) => P(p) & P(q)").unwrap()));
        assert!(!is_fcp(&parse_formula("P(p | q) => P(q) & P(p)").unwrap()));
    }

    #[test]
    fn dangling_reference_is_a_check_failure() {
        let t = parse_trace("1. p => p [TAUT]\n3. p [MP 1,2]\n").unwrap();
        let v = check_derivation(&t);
        assert!(!v.accepted);
        assert!(v.failures[0].reason.contains("not an earlier step"));
    }

    #[test]
    fn parse_errors() {
        assert!(parse_trace("2. p [TAUT]\n1. p [TAUT]\n").is_err());
        assert!(parse_trace("1. p [FOO]\n").is_err());
        assert!(parse_trace("1. p [MP 1]\n").is_err());
        assert!(parse_trace("1. p [TAUT]\nassume p\n").is_err());
    }

    #[test]
    fn print_round_trip() {
        let text = "assume O(p)\nassume ~p => O(~q)\n1. O(p) [HYP]\n2. O(p) => P(p) [OB-D]\n3. P(p) [MP 1,2]\n";
        assert_eq!(write_trace(&parse_trace(text).unwrap()), text);
    }
}
