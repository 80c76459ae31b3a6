use std::collections::HashSet;

use thiserror::Error;

use super::check::{active, concat, is_bottom, is_top, label, prefix, strip_forall};
use super::{Instantiation, ProofTree, RuleName};
use crate::syntax::{Concept, Sequent, Statement};

/// Largest depth `prove_bounded` accepts.
pub const SEARCH_DEPTH_CAP: usize = 12;

/// SUBS-L context splits may duplicate at most this many antecedent members.
const MAX_SPLIT_DUPLICATES: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search depth {requested} exceeds the cap of {cap}")]
    CapExceeded { requested: usize, cap: usize },
}

/// One backward inference. The rule's own conclusion is the goal with
/// `contractions` appended to its antecedent; each contracted member costs
/// one `CONTR` node between the goal and the rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub rule: RuleName,
    pub instantiation: Instantiation,
    pub contractions: Vec<Statement>,
    pub premises: Vec<Sequent>,
}

impl Step {
    fn new(rule: RuleName, premises: Vec<Sequent>) -> Self {
        Step { rule, instantiation: Instantiation::default(), contractions: Vec::new(), premises }
    }

    pub fn rule_conclusion(&self, goal: &Sequent) -> Sequent {
        Sequent { antecedent: concat(&goal.antecedent, &self.contractions), ..goal.clone() }
    }

    fn cost(&self) -> usize {
        self.contractions.len() + 1
    }
}

/// Depth-bounded search by iterative deepening. Returns the first proof in
/// the fixed rule order at the smallest depth that has one. `CUT` is never
/// tried.
pub fn prove_bounded(goal: &Sequent, max_depth: usize) -> Result<Option<ProofTree>, SearchError> {
    if max_depth > SEARCH_DEPTH_CAP {
        return Err(SearchError::CapExceeded { requested: max_depth, cap: SEARCH_DEPTH_CAP });
    }
    let mut search = Search { failed: HashSet::new(), ancestors: Vec::new() };
    for depth in 1..=max_depth {
        if let Some(t) = search.prove(goal, depth) {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

type Key = (Vec<Concept>, Vec<Statement>, Statement);

struct Search {
    failed: HashSet<(Key, usize)>,
    ancestors: Vec<Key>,
}

impl Search {
    fn prove(&mut self, goal: &Sequent, depth: usize) -> Option<ProofTree> {
        if depth == 0 {
            return None;
        }
        let key = goal.canonical();
        if self.failed.contains(&(key.clone(), depth)) {
            return None;
        }
        self.ancestors.push(key.clone());
        let found = self.try_steps(goal, depth);
        self.ancestors.pop();
        if found.is_none() {
            self.failed.insert((key, depth));
        }
        found
    }

    fn try_steps(&mut self, goal: &Sequent, depth: usize) -> Option<ProofTree> {
        let budget = (depth.saturating_sub(2)).min(MAX_SPLIT_DUPLICATES);
        'steps: for step in backward_steps_within(goal, budget) {
            if step.premises.is_empty() {
                return Some(build(goal, step, Vec::new()));
            }
            if step.cost() >= depth {
                continue;
            }
            if step.premises.iter().any(|p| self.ancestors.contains(&p.canonical())) {
                continue;
            }
            let mut subproofs = Vec::with_capacity(step.premises.len());
            for p in &step.premises {
                match self.prove(p, depth - step.cost()) {
                    Some(t) => subproofs.push(t),
                    None => continue 'steps,
                }
            }
            return Some(build(goal, step, subproofs));
        }
        None
    }
}

fn build(goal: &Sequent, step: Step, subproofs: Vec<ProofTree>) -> ProofTree {
    let mut conclusion = step.rule_conclusion(goal);
    let mut tree = ProofTree { conclusion: conclusion.clone(), rule: step.rule, premises: subproofs, instantiation: step.instantiation };
    for _ in &step.contractions {
        conclusion.antecedent.pop();
        tree = ProofTree::node(RuleName::Contr, conclusion.clone(), vec![tree]);
    }
    tree
}

/// Every backward inference the search considers for `goal`, in search
/// order, with SUBS-L splits duplicating up to two members.
pub fn backward_steps(goal: &Sequent) -> Vec<Step> {
    backward_steps_within(goal, MAX_SPLIT_DUPLICATES)
}

fn fresh_nominal(goal: &Sequent) -> String {
    (0..).map(|i| format!("y{i}")).find(|y| !goal.mentions_nominal(y)).unwrap()
}

fn with_ant(goal: &Sequent, antecedent: Vec<Statement>, succedent: Statement) -> Sequent {
    Sequent { theta: goal.theta.clone(), antecedent, succedent }
}

fn without(items: &[Statement], i: usize) -> Vec<Statement> {
    let mut v = items.to_vec();
    v.remove(i);
    v
}

fn backward_steps_within(goal: &Sequent, max_dups: usize) -> Vec<Step> {
    let ant = &goal.antecedent;
    let succ = &goal.succedent;
    let mut out = Vec::new();

    if ant.contains(succ) || is_top(succ) {
        out.push(Step::new(RuleName::Ax, Vec::new()));
    }
    if ant.iter().any(is_bottom) {
        out.push(Step::new(RuleName::BotL, Vec::new()));
    }
    if !out.is_empty() {
        return out;
    }

    // FORALL-R
    if let Some((Some(x), Concept::Forall(r, a))) = active(succ) {
        let y = fresh_nominal(goal);
        let premise = with_ant(goal, concat(ant, &[Statement::role(x, r.as_str(), y.as_str())]), Statement::at(y, (**a).clone()));
        out.push(Step::new(RuleName::ForallR, vec![premise]));
    }
    // FORALL-L
    for s in ant {
        let Some((Some(x), Concept::Forall(r, a))) = active(s) else { continue };
        for e in ant {
            let Statement::Role(x2, r2, y) = e else { continue };
            if x2 != x || r2 != r {
                continue;
            }
            let extra = Statement::at(y.as_str(), (**a).clone());
            if !ant.contains(&extra) {
                out.push(Step::new(RuleName::ForallL, vec![with_ant(goal, concat(ant, &[extra]), succ.clone())]));
            }
        }
    }
    // EXISTS-R
    if let Some((Some(x), Concept::Exists(r, a))) = active(succ) {
        for y in goal.nominals() {
            let edge = with_ant(goal, ant.clone(), Statement::role(x, r.as_str(), y.as_str()));
            let body = with_ant(goal, ant.clone(), Statement::at(y.as_str(), (**a).clone()));
            out.push(Step::new(RuleName::ExistsR, vec![edge, body]));
        }
    }
    // EXISTS-L
    for (i, s) in ant.iter().enumerate() {
        let Some((Some(x), Concept::Exists(r, a))) = active(s) else { continue };
        let y = fresh_nominal(goal);
        let added = [Statement::role(x, r.as_str(), y.as_str()), Statement::at(y.as_str(), (**a).clone())];
        let mut step = Step::new(RuleName::ExistsL, vec![with_ant(goal, concat(&without(ant, i), &added), succ.clone())]);
        step.instantiation = Instantiation::fresh(y);
        out.push(step);
    }

    let rule_for = |base: RuleName, nominal: RuleName, x: Option<&str>| if x.is_some() { nominal } else { base };

    // SUBS-R
    if let Some((x, c)) = active(succ) {
        if let Some((a, b)) = c.as_subsumption() {
            let premise = with_ant(goal, concat(ant, &[label(x, a.clone())]), label(x, b.clone()));
            out.push(Step::new(rule_for(RuleName::SubsR, RuleName::NSubsR, x), vec![premise]));
        }
    }
    // SUBS-L
    for (i, s) in ant.iter().enumerate() {
        let Some((x, c)) = active(s) else { continue };
        let Some((a, b)) = c.as_subsumption() else { continue };
        let rule = rule_for(RuleName::SubsL, RuleName::NSubsL, x);
        let rest = without(ant, i);
        for split in splits(rest.len(), max_dups) {
            let mut left = Vec::new();
            let mut right = Vec::new();
            let mut dups = Vec::new();
            for (item, side) in rest.iter().zip(&split.sides) {
                match side {
                    Side::Left => left.push(item.clone()),
                    Side::Right => right.push(item.clone()),
                    Side::Both => {
                        left.push(item.clone());
                        right.push(item.clone());
                        dups.push(item.clone());
                    }
                }
            }
            if split.copy_principal {
                left.push(s.clone());
                dups.push(s.clone());
            }
            right.push(label(x, b.clone()));
            let premises = vec![with_ant(goal, left, label(x, a.clone())), with_ant(goal, right, succ.clone())];
            out.push(Step { rule, instantiation: Instantiation::default(), contractions: dups, premises });
        }
    }
    // AND-R
    if let Some((x, Concept::And(a, b))) = active(succ) {
        let premises = vec![with_ant(goal, ant.clone(), label(x, (**a).clone())), with_ant(goal, ant.clone(), label(x, (**b).clone()))];
        out.push(Step::new(rule_for(RuleName::AndR, RuleName::NAndR, x), premises));
    }
    // AND-L
    for (i, s) in ant.iter().enumerate() {
        let Some((x, Concept::And(a, b))) = active(s) else { continue };
        let added = [label(x, (**a).clone()), label(x, (**b).clone())];
        let premise = with_ant(goal, concat(&without(ant, i), &added), succ.clone());
        out.push(Step::new(rule_for(RuleName::AndL, RuleName::NAndL, x), vec![premise]));
    }
    // OR1-R, OR2-R
    if let Some((x, Concept::Or(a, b))) = active(succ) {
        out.push(Step::new(rule_for(RuleName::Or1R, RuleName::NOr1R, x), vec![with_ant(goal, ant.clone(), label(x, (**a).clone()))]));
        out.push(Step::new(rule_for(RuleName::Or2R, RuleName::NOr2R, x), vec![with_ant(goal, ant.clone(), label(x, (**b).clone()))]));
    }
    // OR-L
    for (i, s) in ant.iter().enumerate() {
        let Some((x, Concept::Or(a, b))) = active(s) else { continue };
        let rest = without(ant, i);
        let premises = vec![
            with_ant(goal, concat(&rest, &[label(x, (**a).clone())]), succ.clone()),
            with_ant(goal, concat(&rest, &[label(x, (**b).clone())]), succ.clone()),
        ];
        out.push(Step::new(rule_for(RuleName::OrL, RuleName::NOrL, x), premises));
    }
    // P-EXISTS
    if let Statement::Concept(Concept::Exists(r, b)) = succ {
        for (i, s) in ant.iter().enumerate() {
            let Statement::Concept(Concept::Exists(r2, a)) = s else { continue };
            if r2 != r {
                continue;
            }
            if let Some(mut delta) = strip_forall(&without(ant, i), r) {
                delta.push(Statement::Concept((**a).clone()));
                out.push(Step::new(RuleName::PExists, vec![with_ant(goal, delta, Statement::Concept((**b).clone()))]));
            }
        }
    }
    // P-FORALL
    if let Statement::Concept(Concept::Forall(r, a)) = succ {
        if let Some(delta) = strip_forall(ant, r) {
            out.push(Step::new(RuleName::PForall, vec![with_ant(goal, delta, Statement::Concept((**a).clone()))]));
        }
    }
    // P-N
    if let Some((Some(x), c)) = active(succ) {
        if ant.iter().all(|s| !s.is_concept()) {
            let delta: Vec<Statement> = ant
                .iter()
                .map(|s| match s.as_labeled_concept() {
                    Some((y, d)) if y == x => Statement::Concept(d.clone()),
                    _ => s.clone(),
                })
                .collect();
            debug_assert!(delta.iter().zip(ant).all(|(d, s)| prefix(x, d) == *s));
            out.push(Step::new(RuleName::PN, vec![with_ant(goal, delta, Statement::Concept(c.clone()))]));
        }
    }
    // TBOX
    let nominals = goal.nominals();
    for t in &goal.theta {
        let candidates = std::iter::once(Statement::Concept(t.clone())).chain(nominals.iter().map(|x| Statement::at(x.as_str(), t.clone())));
        for extra in candidates {
            if !ant.contains(&extra) {
                out.push(Step::new(RuleName::Tbox, vec![with_ant(goal, concat(ant, &[extra]), succ.clone())]));
            }
        }
    }
    // WEAK
    for (i, s) in ant.iter().enumerate() {
        if ant[..i].contains(s) {
            continue;
        }
        out.push(Step::new(RuleName::Weak, vec![with_ant(goal, without(ant, i), succ.clone())]));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Left,
    Right,
    Both,
}

struct Split {
    sides: Vec<Side>,
    copy_principal: bool,
}

/// Context splits for SUBS-L ordered by number of duplications, then in
/// odometer order over (Left, Right, Both) with the first member most
/// significant and the principal copy last.
fn splits(k: usize, max_dups: usize) -> Vec<Split> {
    let mut all = Vec::new();
    let mut sides = vec![Side::Left; k];
    loop {
        let both = sides.iter().filter(|&&s| s == Side::Both).count();
        for copy_principal in [false, true] {
            let dups = both + copy_principal as usize;
            if dups <= max_dups {
                all.push((dups, Split { sides: sides.clone(), copy_principal }));
            }
        }
        // advance the odometer, last digit fastest
        let mut i = k;
        loop {
            if i == 0 {
                all.sort_by_key(|(d, _)| *d);
                return all.into_iter().map(|(_, s)| s).collect();
            }
            i -= 1;
            sides[i] = match sides[i] {
                Side::Left => Side::Right,
                Side::Right => Side::Both,
                Side::Both => Side::Left,
            };
            if sides[i] != Side::Left {
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::check_proof;
    use crate::syntax::parse_sequent;

    fn prove(s: &str, d: usize) -> Option<ProofTree> {
        let t = prove_bounded(&parse_sequent(s).unwrap(), d).unwrap();
        if let Some(t) = &t {
            let v = check_proof(t);
            assert!(v.accepted, "{:?}", v.failures);
        }
        t
    }

    #[test]
    fn identity_is_a_leaf() {
        let t = prove("A |- A", 1).unwrap();
        assert_eq!((t.rule, t.depth()), (RuleName::Ax, 1));
    }

    #[test]
    fn bottom_exists_proof_shape() {
        let t = prove("|- x : (some R.Bot -> Bot)", 3).unwrap();
        assert_eq!(t.rule, RuleName::NSubsR);
        assert_eq!(t.premises[0].rule, RuleName::ExistsL);
        assert_eq!(t.premises[0].premises[0].rule, RuleName::BotL);
        assert_eq!(t.depth(), 3);
    }

    #[test]
    fn excluded_middle_has_no_proof() {
        assert!(prove("|- x : (A or not A)", 8).is_none());
    }

    #[test]
    fn cap_is_enforced() {
        let s = parse_sequent("A |- A").unwrap();
        assert!(matches!(prove_bounded(&s, 13), Err(SearchError::CapExceeded { .. })));
    }

    #[test]
    fn split_order() {
        let s = splits(2, 1);
        assert_eq!(s.len(), 4 + 4 + 4);
        assert_eq!(s[0].sides, [Side::Left, Side::Left]);
        assert!(!s[0].copy_principal);
        assert_eq!(s[1].sides, [Side::Left, Side::Right]);
    }

    #[test]
    fn contraction_for_shared_context() {
        // the role assertion is needed on both sides of the implication
        let t = prove("x : (some R.A -> all R.B); x R y; y : A |- y : B", 6).unwrap();
        assert!(t.rules_used().contains(&RuleName::Contr));
    }

    #[test]
    fn tbox_members_are_usable() {
        let t = prove("tbox: A -> B | A |- B", 4).unwrap();
        assert!(t.rules_used().contains(&RuleName::Tbox));
    }
}
