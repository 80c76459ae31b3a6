//! Concept and statement evaluation over bitset views.
//!
//! Formulas are first compiled against a symbol table (atom, role and nominal
//! indices), then evaluated on a [`View`]. The same code path serves named
//! interpretations and the enumerator's anonymous structures.

use super::{full_mask, Interpretation, SemanticsError};
use crate::semantics::EntitySet;
use crate::syntax::{Concept, Sequent, Statement};

pub(crate) struct View<'a> {
    pub n: usize,
    pub up: &'a [u64],
    pub atoms: &'a [u64],
    pub roles: &'a [Vec<u64>],
    pub nominals: &'a [usize],
}

#[derive(Clone, Debug)]
pub(crate) enum CConcept {
    Atom(Option<usize>),
    Bottom,
    Top,
    Not(Box<CConcept>),
    And(Box<CConcept>, Box<CConcept>),
    Or(Box<CConcept>, Box<CConcept>),
    Subs(Box<CConcept>, Box<CConcept>),
    Exists(Option<usize>, Box<CConcept>),
    Forall(Option<usize>, Box<CConcept>),
}

#[derive(Clone, Debug)]
pub(crate) enum CStatement {
    Concept(CConcept),
    Nominal(usize, Box<CStatement>),
    Role(usize, Option<usize>, usize),
}

#[derive(Clone, Debug)]
pub(crate) struct CSequent {
    pub theta: Vec<CConcept>,
    pub antecedent: Vec<CStatement>,
    pub succedent: CStatement,
}

pub(crate) trait Symbols {
    fn atom(&self, name: &str) -> Option<usize>;
    fn role(&self, name: &str) -> Option<usize>;
    fn nominal(&self, name: &str) -> Result<usize, SemanticsError>;
}

pub(crate) fn compile_concept(c: &Concept, t: &impl Symbols) -> CConcept {
    let rec = |b: &Concept| Box::new(compile_concept(b, t));
    match c {
        Concept::Atom(a) => CConcept::Atom(t.atom(a)),
        Concept::Bottom => CConcept::Bottom,
        Concept::Top => CConcept::Top,
        Concept::Not(b) => CConcept::Not(rec(b)),
        Concept::And(l, r) => CConcept::And(rec(l), rec(r)),
        Concept::Or(l, r) => CConcept::Or(rec(l), rec(r)),
        Concept::Subs(l, r) => CConcept::Subs(rec(l), rec(r)),
        Concept::Exists(role, b) => CConcept::Exists(t.role(role), rec(b)),
        Concept::Forall(role, b) => CConcept::Forall(t.role(role), rec(b)),
    }
}

pub(crate) fn compile_statement(s: &Statement, t: &impl Symbols) -> Result<CStatement, SemanticsError> {
    Ok(match s {
        Statement::Concept(c) => CStatement::Concept(compile_concept(c, t)),
        Statement::Nominal(x, b) => CStatement::Nominal(t.nominal(x)?, Box::new(compile_statement(b, t)?)),
        Statement::Role(x, r, y) => CStatement::Role(t.nominal(x)?, t.role(r), t.nominal(y)?),
    })
}

pub(crate) fn compile_sequent(s: &Sequent, t: &impl Symbols) -> Result<CSequent, SemanticsError> {
    Ok(CSequent {
        theta: s.theta.iter().map(|c| compile_concept(c, t)).collect(),
        antecedent: s.antecedent.iter().map(|a| compile_statement(a, t)).collect::<Result<_, _>>()?,
        succedent: compile_statement(&s.succedent, t)?,
    })
}

impl View<'_> {
    fn all(&self) -> u64 {
        full_mask(self.n)
    }

    fn succ(&self, role: Option<usize>, i: usize) -> u64 {
        role.map_or(0, |r| self.roles[r][i])
    }

    pub fn concept(&self, c: &CConcept) -> u64 {
        match c {
            CConcept::Atom(a) => a.map_or(0, |i| self.atoms[i]),
            CConcept::Bottom => 0,
            CConcept::Top => self.all(),
            CConcept::Not(b) => {
                let b = self.concept(b);
                self.select(|x| self.up[x] & b == 0)
            }
            CConcept::And(l, r) => self.concept(l) & self.concept(r),
            CConcept::Or(l, r) => self.concept(l) | self.concept(r),
            CConcept::Subs(l, r) => {
                let (l, r) = (self.concept(l), self.concept(r));
                self.select(|x| self.up[x] & l & !r == 0)
            }
            CConcept::Exists(role, b) => {
                let b = self.concept(b);
                self.select(|x| self.succ(*role, x) & b != 0)
            }
            CConcept::Forall(role, b) => {
                let b = self.concept(b);
                // entities with some successor outside b
                let bad = self.select(|y| self.succ(*role, y) & !b != 0);
                self.select(|x| self.up[x] & bad == 0)
            }
        }
    }

    fn select(&self, pred: impl Fn(usize) -> bool) -> u64 {
        (0..self.n).filter(|&i| pred(i)).fold(0, |acc, i| acc | 1 << i)
    }

    /// Truth of an assertion; `None` for a bare concept, which is world-relative.
    pub fn assertion(&self, s: &CStatement) -> Option<bool> {
        match s {
            CStatement::Concept(_) => None,
            CStatement::Nominal(x, body) => Some(match body.as_ref() {
                CStatement::Concept(c) => {
                    let ext = self.concept(c);
                    self.up[self.nominals[*x]] & !ext == 0
                }
                inner => self.assertion(inner).unwrap_or(false),
            }),
            CStatement::Role(x, r, y) => {
                let yy = self.up[self.nominals[*y]];
                Some(EntitySet(self.up[self.nominals[*x]]).iter().all(|zx| self.succ(*r, zx) & yy == yy))
            }
        }
    }

    /// The set of entities at which `s` holds.
    pub fn statement_mask(&self, s: &CStatement) -> u64 {
        match s {
            CStatement::Concept(c) => self.concept(c),
            other => {
                if self.assertion(other).unwrap_or(false) {
                    self.all()
                } else {
                    0
                }
            }
        }
    }

    pub fn theta_holds(&self, theta: &[CConcept]) -> bool {
        let all = self.all();
        theta.iter().all(|c| self.concept(c) == all)
    }

    pub fn sequent(&self, s: &CSequent) -> bool {
        if !self.theta_holds(&s.theta) {
            return true;
        }
        let mut holds = self.all();
        for a in &s.antecedent {
            holds &= self.statement_mask(a);
            if holds == 0 {
                return true;
            }
        }
        holds & !self.statement_mask(&s.succedent) == 0
    }
}

/// Symbol table over a named interpretation.
struct Named<'a> {
    interp: &'a Interpretation,
    roles: Vec<Vec<u64>>,
    atoms: Vec<u64>,
    nominals: Vec<usize>,
}

impl<'a> Named<'a> {
    fn new(interp: &'a Interpretation) -> Self {
        Named {
            interp,
            roles: interp.raw_roles().values().cloned().collect(),
            atoms: interp.raw_atoms().values().copied().collect(),
            nominals: interp.nominals().map(|(_, e)| e).collect(),
        }
    }

    fn view(&self) -> View<'_> {
        View {
            n: self.interp.len(),
            up: self.interp.up_rows(),
            atoms: &self.atoms,
            roles: &self.roles,
            nominals: &self.nominals,
        }
    }
}

impl Symbols for Named<'_> {
    fn atom(&self, name: &str) -> Option<usize> {
        self.interp.raw_atoms().keys().position(|k| k == name)
    }

    fn role(&self, name: &str) -> Option<usize> {
        self.interp.raw_roles().keys().position(|k| k == name)
    }

    fn nominal(&self, name: &str) -> Result<usize, SemanticsError> {
        self.interp
            .nominals()
            .position(|(k, _)| k == name)
            .ok_or_else(|| SemanticsError::UnmappedNominal(name.to_string()))
    }
}

pub(crate) fn concept_in(i: &Interpretation, c: &Concept) -> EntitySet {
    let named = Named::new(i);
    EntitySet(named.view().concept(&compile_concept(c, &named)))
}

pub(crate) fn statement_in(i: &Interpretation, s: &Statement) -> Result<bool, SemanticsError> {
    let named = Named::new(i);
    let view = named.view();
    let cs = compile_statement(s, &named)?;
    Ok(view.assertion(&cs).unwrap_or_else(|| view.statement_mask(&cs) == view.all()))
}

pub(crate) fn statement_at(i: &Interpretation, s: &Statement, w: usize) -> Result<bool, SemanticsError> {
    let named = Named::new(i);
    let cs = compile_statement(s, &named)?;
    Ok(named.view().statement_mask(&cs) >> w & 1 == 1)
}

pub(crate) fn sequent_in(i: &Interpretation, s: &Sequent) -> Result<bool, SemanticsError> {
    let named = Named::new(i);
    let cs = compile_sequent(s, &named)?;
    Ok(named.view().sequent(&cs))
}
