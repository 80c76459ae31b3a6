//! Abstract syntax of iALC concepts, statements and sequents, together with
//! an ASCII concrete syntax that round-trips through [`parse_concept`],
//! [`parse_statement`], [`parse_sequent`] and the `Display` impls.
//!
//! Lexical conventions: nominals start lowercase, concept atoms and roles
//! start uppercase. `Top`, `Bot`, `not`, `and`, `or`, `some`, `all` and `tbox`
//! are reserved.

mod lexer;
mod parser;
mod print;

use std::collections::BTreeSet;

pub use lexer::ParseError;
pub use parser::{parse_concept, parse_sequent, parse_statement};

/// Words that can never be used as atom, role or nominal names.
pub const RESERVED: &[&str] = &["Top", "Bot", "not", "and", "or", "some", "all", "tbox"];

pub fn is_reserved(word: &str) -> bool {
    RESERVED.contains(&word)
}

/// An iALC concept. `Subs` is subsumption used as a concept constructor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Concept {
    Atom(String),
    Bottom,
    Top,
    Not(Box<Concept>),
    And(Box<Concept>, Box<Concept>),
    Or(Box<Concept>, Box<Concept>),
    Subs(Box<Concept>, Box<Concept>),
    Exists(String, Box<Concept>),
    Forall(String, Box<Concept>),
}

impl Concept {
    pub fn atom(name: impl Into<String>) -> Self {
        Concept::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(body: Concept) -> Self {
        Concept::Not(Box::new(body))
    }

    pub fn and(left: Concept, right: Concept) -> Self {
        Concept::And(Box::new(left), Box::new(right))
    }

    pub fn or(left: Concept, right: Concept) -> Self {
        Concept::Or(Box::new(left), Box::new(right))
    }

    pub fn subs(left: Concept, right: Concept) -> Self {
        Concept::Subs(Box::new(left), Box::new(right))
    }

    pub fn exists(role: impl Into<String>, body: Concept) -> Self {
        Concept::Exists(role.into(), Box::new(body))
    }

    pub fn forall(role: impl Into<String>, body: Concept) -> Self {
        Concept::Forall(role.into(), Box::new(body))
    }

    /// Reads `not C` as `C -> Bot`; the calculus uses this view for negation.
    pub fn as_subsumption(&self) -> Option<(&Concept, &Concept)> {
        match self {
            Concept::Subs(l, r) => Some((l, r)),
            Concept::Not(b) => Some((b, &Concept::Bottom)),
            _ => None,
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Concept::Atom(_) | Concept::Bottom | Concept::Top => 1,
            Concept::Not(b) | Concept::Exists(_, b) | Concept::Forall(_, b) => 1 + b.depth(),
            Concept::And(l, r) | Concept::Or(l, r) | Concept::Subs(l, r) => {
                1 + l.depth().max(r.depth())
            }
        }
    }

    pub fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Concept::Atom(a) => {
                out.insert(a.clone());
            }
            Concept::Bottom | Concept::Top => {}
            Concept::Not(b) | Concept::Exists(_, b) | Concept::Forall(_, b) => b.collect_atoms(out),
            Concept::And(l, r) | Concept::Or(l, r) | Concept::Subs(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    pub fn collect_roles(&self, out: &mut BTreeSet<String>) {
        match self {
            Concept::Atom(_) | Concept::Bottom | Concept::Top => {}
            Concept::Not(b) => b.collect_roles(out),
            Concept::Exists(r, b) | Concept::Forall(r, b) => {
                out.insert(r.clone());
                b.collect_roles(out);
            }
            Concept::And(l, r) | Concept::Or(l, r) | Concept::Subs(l, r) => {
                l.collect_roles(out);
                r.collect_roles(out);
            }
        }
    }
}

/// A formula: a concept read at an entity, a (possibly nested) nominal
/// assertion `x : body`, or a role assertion `x R y`.
///
/// The body of a `Nominal` is always a `Concept` or another `Nominal`; use
/// [`Statement::labeled`] to build one with that check.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Statement {
    Concept(Concept),
    Nominal(String, Box<Statement>),
    Role(String, String, String),
}

impl Statement {
    /// `x : C`
    pub fn at(nominal: impl Into<String>, concept: Concept) -> Self {
        Statement::Nominal(nominal.into(), Box::new(Statement::Concept(concept)))
    }

    /// `x : body` where body must itself be a concept or nominal assertion.
    pub fn labeled(nominal: impl Into<String>, body: Statement) -> Option<Self> {
        match body {
            Statement::Role(..) => None,
            body => Some(Statement::Nominal(nominal.into(), Box::new(body))),
        }
    }

    pub fn role(subject: impl Into<String>, role: impl Into<String>, object: impl Into<String>) -> Self {
        Statement::Role(subject.into(), role.into(), object.into())
    }

    /// The topmost label of a nominal assertion.
    pub fn outer_nominal(&self) -> Option<&str> {
        match self {
            Statement::Nominal(x, _) => Some(x),
            _ => None,
        }
    }

    /// For `x : C` (one level, concept body) returns `(x, C)`.
    pub fn as_labeled_concept(&self) -> Option<(&str, &Concept)> {
        match self {
            Statement::Nominal(x, body) => match body.as_ref() {
                Statement::Concept(c) => Some((x, c)),
                _ => None,
            },
            _ => None,
        }
    }

    pub fn as_concept(&self) -> Option<&Concept> {
        match self {
            Statement::Concept(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_concept(&self) -> bool {
        matches!(self, Statement::Concept(_))
    }

    pub fn depth(&self) -> usize {
        match self {
            Statement::Concept(c) => c.depth(),
            Statement::Nominal(_, b) => 1 + b.depth(),
            Statement::Role(..) => 1,
        }
    }

    pub fn collect_nominals(&self, out: &mut BTreeSet<String>) {
        match self {
            Statement::Concept(_) => {}
            Statement::Nominal(x, b) => {
                out.insert(x.clone());
                b.collect_nominals(out);
            }
            Statement::Role(x, _, y) => {
                out.insert(x.clone());
                out.insert(y.clone());
            }
        }
    }

    pub fn mentions_nominal(&self, name: &str) -> bool {
        match self {
            Statement::Concept(_) => false,
            Statement::Nominal(x, b) => x == name || b.mentions_nominal(name),
            Statement::Role(x, _, y) => x == name || y == name,
        }
    }

    pub fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Statement::Concept(c) => c.collect_atoms(out),
            Statement::Nominal(_, b) => b.collect_atoms(out),
            Statement::Role(..) => {}
        }
    }

    pub fn collect_roles(&self, out: &mut BTreeSet<String>) {
        match self {
            Statement::Concept(c) => c.collect_roles(out),
            Statement::Nominal(_, b) => b.collect_roles(out),
            Statement::Role(_, r, _) => {
                out.insert(r.clone());
            }
        }
    }
}

impl From<Concept> for Statement {
    fn from(c: Concept) -> Self {
        Statement::Concept(c)
    }
}

/// `Θ | Δ ⟹ δ`. The TBox holds subsumptions only; the antecedent is a
/// multiset (order is kept for printing and search, ignored by comparison).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sequent {
    pub theta: Vec<Concept>,
    pub antecedent: Vec<Statement>,
    pub succedent: Statement,
}

impl Sequent {
    pub fn new(antecedent: Vec<Statement>, succedent: Statement) -> Self {
        Sequent { theta: Vec::new(), antecedent, succedent }
    }

    pub fn with_theta(mut self, theta: Vec<Concept>) -> Self {
        self.theta = theta;
        self
    }

    pub fn items(&self) -> impl Iterator<Item = &Statement> {
        self.antecedent.iter().chain(std::iter::once(&self.succedent))
    }

    pub fn nominals(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for s in self.items() {
            s.collect_nominals(&mut out);
        }
        out
    }

    pub fn mentions_nominal(&self, name: &str) -> bool {
        self.items().any(|s| s.mentions_nominal(name))
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for c in &self.theta {
            c.collect_atoms(&mut out);
        }
        for s in self.items() {
            s.collect_atoms(&mut out);
        }
        out
    }

    pub fn roles(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for c in &self.theta {
            c.collect_roles(&mut out);
        }
        for s in self.items() {
            s.collect_roles(&mut out);
        }
        out
    }

    /// Order-insensitive key: TBox as a set, antecedent as a sorted multiset.
    pub fn canonical(&self) -> (Vec<Concept>, Vec<Statement>, Statement) {
        let mut theta = self.theta.clone();
        theta.sort();
        theta.dedup();
        let mut ant = self.antecedent.clone();
        ant.sort();
        (theta, ant, self.succedent.clone())
    }

    /// Equality up to TBox-as-set and antecedent-as-multiset.
    pub fn equivalent(&self, other: &Sequent) -> bool {
        self.canonical() == other.canonical()
    }
}
