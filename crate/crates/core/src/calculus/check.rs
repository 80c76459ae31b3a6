use std::fmt;

use thiserror::Error;

use super::{Instantiation, ProofTree, RuleName};
use crate::syntax::{Concept, Sequent, Statement};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("ARITY: {rule} takes {expected} premise(s), found {found}")]
    Arity { rule: RuleName, expected: usize, found: usize },
    #[error("FRESHNESS: nominal `{0}` occurs in the conclusion")]
    Freshness(String),
    #[error("INSTANTIATION: {0}")]
    Instantiation(String),
    #[error("TBOX: premise TBox differs from the conclusion's")]
    TboxMismatch,
    #[error("SHAPE: not an instance of {rule}: {detail}")]
    Shape { rule: RuleName, detail: String },
}

impl RuleError {
    /// Short machine-readable reason tag.
    pub fn code(&self) -> &'static str {
        match self {
            RuleError::Arity { .. } => "ARITY",
            RuleError::Freshness(_) => "FRESHNESS",
            RuleError::Instantiation(_) => "INSTANTIATION",
            RuleError::TboxMismatch => "TBOX",
            RuleError::Shape { .. } => "SHAPE",
        }
    }
}

/// A rejected node: `path` lists premise indices from the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub path: Vec<usize>,
    pub rule: RuleName,
    pub conclusion: Sequent,
    pub error: RuleError,
}

impl Failure {
    pub fn path_string(&self) -> String {
        if self.path.is_empty() {
            "root".to_string()
        } else {
            let parts: Vec<String> = self.path.iter().map(ToString::to_string).collect();
            format!("root.{}", parts.join("."))
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}] {}: {}", self.path_string(), self.rule, self.conclusion, self.error)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckVerdict {
    pub accepted: bool,
    pub failures: Vec<Failure>,
}

/// Checks every node. Leaves are necessarily `AX` or `BOT-L`, since every
/// other rule fails its arity check without premises.
pub fn check_proof(tree: &ProofTree) -> CheckVerdict {
    let mut failures = Vec::new();
    let mut path = Vec::new();
    walk(tree, &mut path, &mut failures);
    CheckVerdict { accepted: failures.is_empty(), failures }
}

fn walk(t: &ProofTree, path: &mut Vec<usize>, out: &mut Vec<Failure>) {
    let premises = t.premise_conclusions();
    if let Err(error) = check_node(t.rule, &t.conclusion, &premises, &t.instantiation) {
        out.push(Failure { path: path.clone(), rule: t.rule, conclusion: t.conclusion.clone(), error });
    }
    for (i, p) in t.premises.iter().enumerate() {
        path.push(i);
        walk(p, path, out);
        path.pop();
    }
}

/// True iff `conclusion` follows from `premises` by one application of
/// `rule` with the given instantiation.
pub fn check_node(
    rule: RuleName,
    conclusion: &Sequent,
    premises: &[Sequent],
    inst: &Instantiation,
) -> Result<(), RuleError> {
    if premises.len() != rule.arity() {
        return Err(RuleError::Arity { rule, expected: rule.arity(), found: premises.len() });
    }
    match (rule, &inst.fresh) {
        (RuleName::ExistsL, None) => return Err(RuleError::Instantiation("EXISTS-L needs fresh=".into())),
        (RuleName::ExistsL, Some(_)) => {}
        (_, Some(_)) => return Err(RuleError::Instantiation(format!("fresh= is not allowed on {rule}"))),
        _ => {}
    }
    match (rule, &inst.cut) {
        (RuleName::Cut, None) => return Err(RuleError::Instantiation("CUT needs cut=".into())),
        (RuleName::Cut, Some(_)) => {}
        (_, Some(_)) => return Err(RuleError::Instantiation(format!("cut= is not allowed on {rule}"))),
        _ => {}
    }
    let theta = set_of(&conclusion.theta);
    if premises.iter().any(|p| set_of(&p.theta) != theta) {
        return Err(RuleError::TboxMismatch);
    }
    let node = Node { rule, c: conclusion, p: premises };
    match rule {
        RuleName::Ax => node.ax(),
        RuleName::BotL => node.bot_l(),
        RuleName::ForallR => node.forall_r(),
        RuleName::ForallL => node.forall_l(),
        RuleName::ExistsR => node.exists_r(),
        RuleName::ExistsL => node.exists_l(inst.fresh.as_deref().unwrap()),
        RuleName::SubsR | RuleName::NSubsR => node.subs_r(),
        RuleName::SubsL | RuleName::NSubsL => node.subs_l(),
        RuleName::AndR | RuleName::NAndR => node.and_r(),
        RuleName::AndL | RuleName::NAndL => node.and_l(),
        RuleName::Or1R | RuleName::NOr1R => node.or_r(true),
        RuleName::Or2R | RuleName::NOr2R => node.or_r(false),
        RuleName::OrL | RuleName::NOrL => node.or_l(),
        RuleName::PExists => node.p_exists(),
        RuleName::PForall => node.p_forall(false),
        RuleName::Nec => node.p_forall(true),
        RuleName::PN => node.p_n(),
        RuleName::Tbox => node.tbox(),
        RuleName::Weak => node.weak(),
        RuleName::Contr => node.contr(),
        RuleName::Cut => node.cut(inst.cut.as_ref().unwrap()),
        RuleName::Mp => node.mp(),
    }
}

fn set_of(theta: &[Concept]) -> Vec<Concept> {
    let mut v = theta.to_vec();
    v.sort();
    v.dedup();
    v
}

pub(crate) fn sorted(items: &[Statement]) -> Vec<Statement> {
    let mut v = items.to_vec();
    v.sort();
    v
}

pub(crate) fn same_multiset(a: &[Statement], b: &[Statement]) -> bool {
    a.len() == b.len() && sorted(a) == sorted(b)
}

/// `items` with one occurrence of `s` removed.
pub(crate) fn remove_one(items: &[Statement], s: &Statement) -> Option<Vec<Statement>> {
    let i = items.iter().position(|t| t == s)?;
    let mut v = items.to_vec();
    v.remove(i);
    Some(v)
}

pub(crate) fn concat(a: &[Statement], b: &[Statement]) -> Vec<Statement> {
    a.iter().chain(b).cloned().collect()
}

/// The active-formula view: `γ` for a bare concept, `x : γ` for a labeled one.
pub(crate) fn active(s: &Statement) -> Option<(Option<&str>, &Concept)> {
    match s {
        Statement::Concept(c) => Some((None, c)),
        _ => s.as_labeled_concept().map(|(x, c)| (Some(x), c)),
    }
}

pub(crate) fn label(x: Option<&str>, c: Concept) -> Statement {
    match x {
        None => Statement::Concept(c),
        Some(x) => Statement::at(x, c),
    }
}

pub(crate) fn is_bottom(s: &Statement) -> bool {
    matches!(active(s), Some((_, Concept::Bottom)))
}

pub(crate) fn is_top(s: &Statement) -> bool {
    matches!(active(s), Some((_, Concept::Top)))
}

struct Node<'a> {
    rule: RuleName,
    c: &'a Sequent,
    p: &'a [Sequent],
}

impl Node<'_> {
    fn fail(&self, detail: impl Into<String>) -> Result<(), RuleError> {
        Err(RuleError::Shape { rule: self.rule, detail: detail.into() })
    }

    fn ok_if(&self, cond: bool, detail: &str) -> Result<(), RuleError> {
        if cond {
            Ok(())
        } else {
            self.fail(detail)
        }
    }

    /// The principal's label must be absent for base rules and present for
    /// `N-` rules.
    fn principal<'s>(&self, s: &'s Statement) -> Option<(Option<&'s str>, &'s Concept)> {
        active(s).filter(|(x, _)| x.is_some() == self.rule.is_nominal())
    }

    fn same_succedent(&self, i: usize) -> bool {
        self.p[i].succedent == self.c.succedent
    }

    /// Tries every antecedent member of the conclusion as principal formula.
    fn any_left(&self, mut f: impl FnMut(&Statement, Vec<Statement>) -> bool) -> bool {
        let ant = &self.c.antecedent;
        (0..ant.len()).any(|i| {
            let mut rest = ant.clone();
            let principal = rest.remove(i);
            f(&principal, rest)
        })
    }

    fn ax(&self) -> Result<(), RuleError> {
        let d = &self.c.succedent;
        self.ok_if(self.c.antecedent.contains(d) || is_top(d), "succedent is not in the antecedent")
    }

    fn bot_l(&self) -> Result<(), RuleError> {
        self.ok_if(self.c.antecedent.iter().any(is_bottom), "no Bot in the antecedent")
    }

    fn forall_r(&self) -> Result<(), RuleError> {
        let Some((Some(x), Concept::Forall(r, a))) = active(&self.c.succedent) else {
            return self.fail("succedent is not x : all R.C");
        };
        let Some((Some(y), body)) = active(&self.p[0].succedent) else {
            return self.fail("premise succedent is not y : C");
        };
        if body != a.as_ref() {
            return self.fail("premise succedent body differs");
        }
        let edge = Statement::role(x, r.as_str(), y);
        if !same_multiset(&self.p[0].antecedent, &concat(&self.c.antecedent, &[edge])) {
            return self.fail("premise antecedent must be the conclusion's plus x R y");
        }
        if self.c.mentions_nominal(y) {
            return Err(RuleError::Freshness(y.to_string()));
        }
        Ok(())
    }

    fn forall_l(&self) -> Result<(), RuleError> {
        if !self.same_succedent(0) {
            return self.fail("succedent changed");
        }
        let ant = &self.c.antecedent;
        let found = ant.iter().any(|s| {
            let Some((Some(x), Concept::Forall(r, a))) = active(s) else { return false };
            ant.iter().any(|e| match e {
                Statement::Role(x2, r2, y) if x2 == x && r2 == r => {
                    let extra = Statement::at(y.as_str(), (**a).clone());
                    same_multiset(&self.p[0].antecedent, &concat(ant, &[extra]))
                }
                _ => false,
            })
        });
        self.ok_if(found, "premise must add y : C for some x : all R.C and x R y")
    }

    fn exists_r(&self) -> Result<(), RuleError> {
        let Some((Some(x), Concept::Exists(r, a))) = active(&self.c.succedent) else {
            return self.fail("succedent is not x : some R.C");
        };
        for p in self.p {
            if !same_multiset(&p.antecedent, &self.c.antecedent) {
                return self.fail("premise antecedents must equal the conclusion's");
            }
        }
        let Statement::Role(x2, r2, y) = &self.p[0].succedent else {
            return self.fail("first premise must prove x R y");
        };
        let ok = x2 == x && r2 == r && self.p[1].succedent == Statement::at(y.as_str(), (**a).clone());
        self.ok_if(ok, "premises must be x R y and y : C")
    }

    fn exists_l(&self, y: &str) -> Result<(), RuleError> {
        if !self.same_succedent(0) {
            return self.fail("succedent changed");
        }
        let found = self.any_left(|s, rest| {
            let Some((Some(x), Concept::Exists(r, a))) = active(s) else { return false };
            let added = [Statement::role(x, r.as_str(), y), Statement::at(y, (**a).clone())];
            same_multiset(&self.p[0].antecedent, &concat(&rest, &added))
        });
        if !found {
            return self.fail("premise must replace x : some R.C by x R y and y : C");
        }
        if self.c.mentions_nominal(y) {
            return Err(RuleError::Freshness(y.to_string()));
        }
        Ok(())
    }

    fn subs_r(&self) -> Result<(), RuleError> {
        let Some((x, c)) = self.principal(&self.c.succedent) else {
            return self.fail("succedent has the wrong form");
        };
        let Some((a, b)) = c.as_subsumption() else {
            return self.fail("succedent is not a subsumption");
        };
        let p = &self.p[0];
        let ok = p.succedent == label(x, b.clone())
            && same_multiset(&p.antecedent, &concat(&self.c.antecedent, &[label(x, a.clone())]));
        self.ok_if(ok, "premise must be Δ, C |- D")
    }

    fn subs_l(&self) -> Result<(), RuleError> {
        let (left, right) = (&self.p[0], &self.p[1]);
        if right.succedent != self.c.succedent {
            return self.fail("right premise succedent differs");
        }
        let found = self.any_left(|s, rest| {
            let Some((x, c)) = self.principal(s) else { return false };
            let Some((a, b)) = c.as_subsumption() else { return false };
            if left.succedent != label(x, a.clone()) {
                return false;
            }
            let Some(delta2) = remove_one(&right.antecedent, &label(x, b.clone())) else { return false };
            same_multiset(&rest, &concat(&left.antecedent, &delta2))
        });
        self.ok_if(found, "expected Δ1 |- C and Δ2, D |- δ with Δ1, Δ2 the side context")
    }

    fn and_r(&self) -> Result<(), RuleError> {
        let Some((x, Concept::And(a, b))) = self.principal(&self.c.succedent) else {
            return self.fail("succedent is not a conjunction");
        };
        let ok = self.p.iter().all(|p| same_multiset(&p.antecedent, &self.c.antecedent))
            && self.p[0].succedent == label(x, (**a).clone())
            && self.p[1].succedent == label(x, (**b).clone());
        self.ok_if(ok, "premises must prove each conjunct")
    }

    fn and_l(&self) -> Result<(), RuleError> {
        if !self.same_succedent(0) {
            return self.fail("succedent changed");
        }
        let found = self.any_left(|s, rest| {
            let Some((x, Concept::And(a, b))) = self.principal(s) else { return false };
            let added = [label(x, (**a).clone()), label(x, (**b).clone())];
            same_multiset(&self.p[0].antecedent, &concat(&rest, &added))
        });
        self.ok_if(found, "premise must split a conjunction")
    }

    fn or_r(&self, first: bool) -> Result<(), RuleError> {
        let Some((x, Concept::Or(a, b))) = self.principal(&self.c.succedent) else {
            return self.fail("succedent is not a disjunction");
        };
        let disjunct = if first { a } else { b };
        let ok = same_multiset(&self.p[0].antecedent, &self.c.antecedent)
            && self.p[0].succedent == label(x, (**disjunct).clone());
        self.ok_if(ok, "premise must prove the disjunct")
    }

    fn or_l(&self) -> Result<(), RuleError> {
        if !(self.same_succedent(0) && self.same_succedent(1)) {
            return self.fail("succedent changed");
        }
        let found = self.any_left(|s, rest| {
            let Some((x, Concept::Or(a, b))) = self.principal(s) else { return false };
            same_multiset(&self.p[0].antecedent, &concat(&rest, &[label(x, (**a).clone())]))
                && same_multiset(&self.p[1].antecedent, &concat(&rest, &[label(x, (**b).clone())]))
        });
        self.ok_if(found, "premises must split a disjunction")
    }

    fn p_exists(&self) -> Result<(), RuleError> {
        let Statement::Concept(Concept::Exists(r, b)) = &self.c.succedent else {
            return self.fail("succedent is not some R.C");
        };
        let found = self.any_left(|s, rest| {
            let Statement::Concept(Concept::Exists(r2, a)) = s else { return false };
            if r2 != r {
                return false;
            }
            let Some(mut delta) = strip_forall(&rest, r) else { return false };
            delta.push(Statement::Concept((**a).clone()));
            self.p[0].succedent == Statement::Concept((**b).clone()) && same_multiset(&self.p[0].antecedent, &delta)
        });
        self.ok_if(found, "expected all R.Δ, some R.C |- some R.D from Δ, C |- D")
    }

    fn p_forall(&self, nec: bool) -> Result<(), RuleError> {
        let Statement::Concept(Concept::Forall(r, a)) = &self.c.succedent else {
            return self.fail("succedent is not all R.C");
        };
        if nec && !self.c.antecedent.is_empty() {
            return self.fail("NEC needs an empty antecedent");
        }
        let Some(delta) = strip_forall(&self.c.antecedent, r) else {
            return self.fail("every antecedent concept must be all R.C with the same role");
        };
        let ok = self.p[0].succedent == Statement::Concept((**a).clone()) && same_multiset(&self.p[0].antecedent, &delta);
        self.ok_if(ok, "premise must be Δ |- C")
    }

    fn p_n(&self) -> Result<(), RuleError> {
        let premise = &self.p[0];
        let mut candidates: Vec<String> = self.c.nominals().into_iter().collect();
        if let Some(x) = self.c.succedent.outer_nominal() {
            candidates.retain(|y| y != x);
            candidates.insert(0, x.to_string());
        }
        let found = candidates.iter().any(|x| {
            let expected: Vec<Statement> = premise.antecedent.iter().map(|s| prefix(x, s)).collect();
            prefix(x, &premise.succedent) == self.c.succedent && same_multiset(&expected, &self.c.antecedent)
        });
        self.ok_if(found, "conclusion must label every premise concept with one nominal")
    }

    fn tbox(&self) -> Result<(), RuleError> {
        if !self.same_succedent(0) {
            return self.fail("succedent changed");
        }
        let found = self.c.theta.iter().any(|t| {
            let bare = Statement::Concept(t.clone());
            let mut options = vec![bare];
            options.extend(self.p[0].nominals().into_iter().map(|x| Statement::at(x, t.clone())));
            options.iter().any(|o| same_multiset(&self.p[0].antecedent, &concat(&self.c.antecedent, std::slice::from_ref(o))))
        });
        self.ok_if(found, "premise must add one TBox member to the antecedent")
    }

    fn weak(&self) -> Result<(), RuleError> {
        if !self.same_succedent(0) {
            return self.fail("succedent changed");
        }
        let mut rest = self.c.antecedent.clone();
        for s in &self.p[0].antecedent {
            match rest.iter().position(|t| t == s) {
                Some(i) => {
                    rest.remove(i);
                }
                None => return self.fail("premise antecedent is not contained in the conclusion's"),
            }
        }
        self.ok_if(!rest.is_empty(), "nothing was weakened")
    }

    fn contr(&self) -> Result<(), RuleError> {
        if !self.same_succedent(0) {
            return self.fail("succedent changed");
        }
        let found = self
            .c
            .antecedent
            .iter()
            .any(|s| same_multiset(&self.p[0].antecedent, &concat(&self.c.antecedent, std::slice::from_ref(s))));
        self.ok_if(found, "premise must duplicate one antecedent member")
    }

    fn cut(&self, phi: &Statement) -> Result<(), RuleError> {
        let (left, right) = (&self.p[0], &self.p[1]);
        if left.succedent != *phi || right.succedent != self.c.succedent {
            return self.fail("expected Δ1 |- φ and Δ2, φ |- δ");
        }
        let Some(delta2) = remove_one(&right.antecedent, phi) else {
            return self.fail("right premise lacks the cut statement");
        };
        self.ok_if(same_multiset(&self.c.antecedent, &concat(&left.antecedent, &delta2)), "context must be Δ1, Δ2")
    }

    fn mp(&self) -> Result<(), RuleError> {
        let (minor, major) = (&self.p[0], &self.p[1]);
        let same_context = self.p.iter().all(|p| same_multiset(&p.antecedent, &self.c.antecedent));
        let shape = (|| {
            let (x, imp) = active(&major.succedent)?;
            let (a, b) = imp.as_subsumption()?;
            Some(minor.succedent == label(x, a.clone()) && self.c.succedent == label(x, b.clone()))
        })();
        self.ok_if(same_context && shape == Some(true), "expected Δ |- C and Δ |- C -> D")
    }
}

/// `Δ` such that the concepts of `items` are exactly `all R.Δ`; assertions
/// pass through unchanged.
pub(crate) fn strip_forall(items: &[Statement], role: &str) -> Option<Vec<Statement>> {
    items
        .iter()
        .map(|s| match s {
            Statement::Concept(Concept::Forall(r, c)) if r == role => Some(Statement::Concept((**c).clone())),
            Statement::Concept(_) => None,
            other => Some(other.clone()),
        })
        .collect()
}

/// `x : s` when `s` is a concept, `s` otherwise.
pub(crate) fn prefix(x: &str, s: &Statement) -> Statement {
    match s {
        Statement::Concept(c) => Statement::at(x, c.clone()),
        other => other.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_sequent;

    fn seq(s: &str) -> Sequent {
        parse_sequent(s).unwrap()
    }

    fn check(rule: RuleName, c: &str, ps: &[&str]) -> Result<(), RuleError> {
        let ps: Vec<Sequent> = ps.iter().map(|p| seq(p)).collect();
        check_node(rule, &seq(c), &ps, &Instantiation::default())
    }

    #[test]
    fn axiom_and_bottom() {
        assert!(check(RuleName::Ax, "B; A |- A", &[]).is_ok());
        assert!(check(RuleName::Ax, "B |- A", &[]).is_err());
        assert!(check(RuleName::Ax, "|- x : Top", &[]).is_ok());
        assert!(check(RuleName::BotL, "x : Bot |- A", &[]).is_ok());
        assert!(check(RuleName::BotL, "A |- A", &[]).is_err());
    }

    #[test]
    fn exists_l_freshness() {
        let c = seq("x : some R.A |- y : A");
        let p = seq("x R y; y : A |- y : A");
        let err = check_node(RuleName::ExistsL, &c, std::slice::from_ref(&p), &Instantiation::fresh("y")).unwrap_err();
        assert_eq!(err.code(), "FRESHNESS");
        let err = check_node(RuleName::ExistsL, &c, &[p], &Instantiation::default()).unwrap_err();
        assert_eq!(err.code(), "INSTANTIATION");
        let c = seq("x : some R.A |- x : some R.A");
        let p = seq("x R z; z : A |- x : some R.A");
        assert!(check_node(RuleName::ExistsL, &c, &[p], &Instantiation::fresh("z")).is_ok());
    }

    #[test]
    fn p_exists_prefixes_only_concepts() {
        assert!(check(RuleName::PExists, "all R.(A -> B); some R.A |- some R.B", &["A -> B; A |- B"]).is_ok());
        assert!(check(RuleName::PExists, "x : A; all R.C; some R.A |- some R.B", &["x : A; C; A |- B"]).is_ok());
        assert!(check(RuleName::PExists, "C; some R.A |- some R.B", &["C; A |- B"]).is_err());
        assert!(check(RuleName::PExists, "all S.C; some R.A |- some R.B", &["C; A |- B"]).is_err());
    }

    #[test]
    fn p_n_prefixes_only_concepts() {
        assert!(check(RuleName::PN, "x : A; y R z |- x : B", &["A; y R z |- B"]).is_ok());
        assert!(check(RuleName::PN, "x : A |- y : B", &["A |- y : B"]).is_ok());
        assert!(check(RuleName::PN, "x : A; y : C |- x : B", &["A; C |- B"]).is_err());
    }

    #[test]
    fn nominal_counterparts_need_the_label() {
        assert!(check(RuleName::NSubsR, "|- x : (A -> B)", &["x : A |- x : B"]).is_ok());
        assert!(check(RuleName::SubsR, "|- x : (A -> B)", &["x : A |- x : B"]).is_err());
        assert!(check(RuleName::NSubsR, "|- A -> B", &["A |- B"]).is_err());
        assert!(check(RuleName::SubsR, "|- not A", &["A |- Bot"]).is_ok());
    }

    #[test]
    fn subs_l_splits_the_context() {
        assert!(check(RuleName::SubsL, "A -> B; A |- B", &["A |- A", "B |- B"]).is_ok());
        assert!(check(RuleName::SubsL, "A -> B; A; C |- B", &["A |- A", "C; B |- B"]).is_ok());
        assert!(check(RuleName::SubsL, "A -> B; A |- B", &["A |- A", "A; B |- B"]).is_err());
    }

    #[test]
    fn forall_rules() {
        assert!(check(RuleName::ForallR, "|- x : all R.A", &["x R y |- y : A"]).is_ok());
        assert_eq!(check(RuleName::ForallR, "y : B |- x : all R.A", &["y : B; x R y |- y : A"]).unwrap_err().code(), "FRESHNESS");
        assert!(check(RuleName::ForallL, "x : all R.A; x R y |- y : A", &["x : all R.A; x R y; y : A |- y : A"]).is_ok());
    }

    #[test]
    fn structural_and_cut() {
        assert!(check(RuleName::Weak, "A; B |- A", &["A |- A"]).is_ok());
        assert!(check(RuleName::Weak, "A |- A", &["A |- A"]).is_err());
        assert!(check(RuleName::Contr, "A |- A", &["A; A |- A"]).is_ok());
        let c = seq("A; A -> B |- B");
        let ps = [seq("A |- A"), seq("A; A -> B |- B")];
        assert!(check_node(RuleName::Cut, &c, &ps, &Instantiation::cut(Statement::Concept(Concept::atom("A")))).is_ok());
        assert_eq!(check_node(RuleName::Cut, &c, &ps, &Instantiation::default()).unwrap_err().code(), "INSTANTIATION");
        assert!(check(RuleName::Tbox, "tbox: A -> B | A |- B", &["tbox: A -> B | A; A -> B |- B"]).is_ok());
        assert_eq!(check(RuleName::Weak, "tbox: A -> B | A; B |- A", &["A |- A"]).unwrap_err().code(), "TBOX");
    }

    #[test]
    fn arity_is_checked_first() {
        let err = check(RuleName::PExists, "all R.(A -> B); some R.A |- some R.B", &[]).unwrap_err();
        assert_eq!(err, RuleError::Arity { rule: RuleName::PExists, expected: 1, found: 0 });
    }

    #[test]
    fn mp_and_nec() {
        assert!(check(RuleName::Mp, "|- B", &["|- A", "|- A -> B"]).is_ok());
        assert!(check(RuleName::Mp, "|- x : B", &["|- x : A", "|- x : (A -> B)"]).is_ok());
        assert!(check(RuleName::Nec, "|- all R.A", &["|- A"]).is_ok());
        assert!(check(RuleName::Nec, "all R.B |- all R.A", &["B |- A"]).is_err());
    }
}
