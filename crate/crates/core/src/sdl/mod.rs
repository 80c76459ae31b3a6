//! Standard Deontic Logic (the normal modal logic KD): formulas, tautology
//! checking, Hilbert-style derivation traces and bounded search for serial
//! Kripke models.
//!
//! Concrete syntax, loosest first: `=>` (right-assoc), `|`, `&`, then the
//! prefix forms `~`, `O(..)`, `P(..)`. Propositions start lowercase; `false`
//! is the falsum. `P(f)` abbreviates `~O(~f)` and is desugared on parsing;
//! the printer shows that pattern as `P(..)` again.

mod model;
mod parse;
mod trace;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use model::{find_model, KdModel, ModelSearchError, MAX_WORLDS};
pub use parse::{parse_formula, parse_formula_list, SdlParseError};
pub use trace::{check_derivation, parse_trace, write_trace, Justification, SdlFailure, SdlVerdict, Trace, TraceError, TraceStep};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Prop(String),
    False,
    Neg(Box<Formula>),
    Impl(Box<Formula>, Box<Formula>),
    Conj(Box<Formula>, Box<Formula>),
    Disj(Box<Formula>, Box<Formula>),
    Ob(Box<Formula>),
}

impl Formula {
    pub fn prop(name: impl Into<String>) -> Self {
        Formula::Prop(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(f: Formula) -> Self {
        Formula::Neg(Box::new(f))
    }

    pub fn imp(a: Formula, b: Formula) -> Self {
        Formula::Impl(Box::new(a), Box::new(b))
    }

    pub fn conj(a: Formula, b: Formula) -> Self {
        Formula::Conj(Box::new(a), Box::new(b))
    }

    pub fn disj(a: Formula, b: Formula) -> Self {
        Formula::Disj(Box::new(a), Box::new(b))
    }

    pub fn ob(f: Formula) -> Self {
        Formula::Ob(Box::new(f))
    }

    /// `P(f)`, i.e. `~O(~f)`.
    pub fn perm(f: Formula) -> Self {
        Formula::neg(Formula::ob(Formula::neg(f)))
    }

    /// The body of `~O(~f)`.
    pub fn as_perm(&self) -> Option<&Formula> {
        match self {
            Formula::Neg(inner) => match inner.as_ref() {
                Formula::Ob(body) => match body.as_ref() {
                    Formula::Neg(f) => Some(f),
                    _ => None,
                },
                _ => None,
            },
            _ => None,
        }
    }

    pub fn as_impl(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Impl(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn props(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_props(&mut out);
        out
    }

    fn collect_props(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Prop(p) => {
                out.insert(p.clone());
            }
            Formula::False => {}
            Formula::Neg(a) | Formula::Ob(a) => a.collect_props(out),
            Formula::Impl(a, b) | Formula::Conj(a, b) | Formula::Disj(a, b) => {
                a.collect_props(out);
                b.collect_props(out);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Prop(_) | Formula::False => 1,
            Formula::Neg(a) | Formula::Ob(a) => 1 + a.depth(),
            Formula::Impl(a, b) | Formula::Conj(a, b) | Formula::Disj(a, b) => 1 + a.depth().max(b.depth()),
        }
    }
}

/// Propositional tautology test, treating each maximal `O(..)` subformula
/// as an opaque atom (so substitution instances of tautologies pass).
pub fn taut_check(f: &Formula) -> bool {
    let mut atoms: BTreeMap<Formula, usize> = BTreeMap::new();
    collect_atoms(f, &mut atoms);
    let k = atoms.len();
    assert!(k < 24, "too many atoms for a truth table");
    (0u32..1 << k).all(|row| truth(f, &atoms, row))
}

fn collect_atoms(f: &Formula, atoms: &mut BTreeMap<Formula, usize>) {
    match f {
        Formula::Prop(_) | Formula::Ob(_) => {
            let next = atoms.len();
            atoms.entry(f.clone()).or_insert(next);
        }
        Formula::False => {}
        Formula::Neg(a) => collect_atoms(a, atoms),
        Formula::Impl(a, b) | Formula::Conj(a, b) | Formula::Disj(a, b) => {
            collect_atoms(a, atoms);
            collect_atoms(b, atoms);
        }
    }
}

fn truth(f: &Formula, atoms: &BTreeMap<Formula, usize>, row: u32) -> bool {
    match f {
        Formula::Prop(_) | Formula::Ob(_) => row >> atoms[f] & 1 == 1,
        Formula::False => false,
        Formula::Neg(a) => !truth(a, atoms, row),
        Formula::Impl(a, b) => !truth(a, atoms, row) || truth(b, atoms, row),
        Formula::Conj(a, b) => truth(a, atoms, row) && truth(b, atoms, row),
        Formula::Disj(a, b) => truth(a, atoms, row) || truth(b, atoms, row),
    }
}

fn strength(f: &Formula) -> u8 {
    match f {
        Formula::Impl(..) => 1,
        Formula::Disj(..) => 2,
        Formula::Conj(..) => 3,
        _ => 4,
    }
}

struct Prec<'a>(&'a Formula, u8);

impl fmt::Display for Prec<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if strength(self.0) < self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(body) = self.as_perm() {
            return write!(f, "P({body})");
        }
        match self {
            Formula::Prop(p) => f.write_str(p),
            Formula::False => f.write_str("false"),
            Formula::Neg(a) => write!(f, "~{}", Prec(a, 4)),
            Formula::Ob(a) => write!(f, "O({a})"),
            Formula::Impl(a, b) => write!(f, "{} => {}", Prec(a, 2), Prec(b, 1)),
            Formula::Disj(a, b) => write!(f, "{} | {}", Prec(a, 2), Prec(b, 3)),
            Formula::Conj(a, b) => write!(f, "{} & {}", Prec(a, 3), Prec(b, 4)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn tautologies() {
        assert!(taut_check(&f("p => p | q")));
        assert!(taut_check(&f("O(p) => O(p)")));
        assert!(!taut_check(&f("p => q")));
        assert!(!taut_check(&f("O(p) => O(p | p)")));
        assert!(taut_check(&f("~false")));
        assert!(taut_check(&f("(a => b) => (b => c) => a => c")));
    }

    #[test]
    fn printing() {
        assert_eq!(f("~O(~p)").to_string(), "P(p)");
        assert_eq!(f("(p => q) => r").to_string(), "(p => q) => r");
        assert_eq!(f("p => (q => r)").to_string(), "p => q => r");
        assert_eq!(f("~(p & q) | r").to_string(), "~(p & q) | r");
        assert_eq!(f("p & (q & r)").to_string(), "p & (q & r)");
        assert_eq!(f("P(p | q) => P(p) & P(q)").to_string(), "P(p | q) => P(p) & P(q)");
    }
}
