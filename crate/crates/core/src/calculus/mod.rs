//! Labeled sequent calculus for iALC: proof trees, a node-by-node rule
//! checker, bounded backward proof search and the `.ipf` proof file format.
//!
//! Every propositional rule has a nominal counterpart (`N-` prefix) in which
//! each active concept `γ` becomes `x : γ` for one shared outer nominal `x`.
//! Weakening, contraction and cut are explicit rules; exchange is implicit
//! because antecedents are compared as multisets. The TBox part of a sequent
//! is an inert context that must be the same at every node, and `TBOX` moves
//! one of its members into the antecedent.
//!
//! `MP` and `NEC` are macros for the Hilbert-style rules. They are checked
//! directly and can be rewritten into primitive rules with [`expand_macros`].

mod check;
mod ipf;
mod search;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::syntax::{Sequent, Statement};

pub use check::{check_node, check_proof, CheckVerdict, Failure, RuleError};
pub use ipf::{parse_proof, write_proof, IpfError};
pub use search::{backward_steps, prove_bounded, SearchError, Step, SEARCH_DEPTH_CAP};

macro_rules! rules {
    ($($variant:ident => $name:literal, $arity:literal;)*) => {
        /// Rule names in their canonical order. Each `N-` variant follows
        /// its base rule.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum RuleName {
            $($variant,)*
        }

        impl RuleName {
            pub const ALL: &'static [RuleName] = &[$(RuleName::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(RuleName::$variant => $name,)*
                }
            }

            /// Number of premises.
            pub fn arity(self) -> usize {
                match self {
                    $(RuleName::$variant => $arity,)*
                }
            }
        }
    };
}

rules! {
    Ax => "AX", 0;
    BotL => "BOT-L", 0;
    ForallR => "FORALL-R", 1;
    ForallL => "FORALL-L", 1;
    ExistsR => "EXISTS-R", 2;
    ExistsL => "EXISTS-L", 1;
    SubsR => "SUBS-R", 1;
    NSubsR => "N-SUBS-R", 1;
    SubsL => "SUBS-L", 2;
    NSubsL => "N-SUBS-L", 2;
    AndR => "AND-R", 2;
    NAndR => "N-AND-R", 2;
    AndL => "AND-L", 1;
    NAndL => "N-AND-L", 1;
    Or1R => "OR1-R", 1;
    NOr1R => "N-OR1-R", 1;
    Or2R => "OR2-R", 1;
    NOr2R => "N-OR2-R", 1;
    OrL => "OR-L", 2;
    NOrL => "N-OR-L", 2;
    PExists => "P-EXISTS", 1;
    PForall => "P-FORALL", 1;
    PN => "P-N", 1;
    Tbox => "TBOX", 1;
    Weak => "WEAK", 1;
    Contr => "CONTR", 1;
    Cut => "CUT", 2;
    Mp => "MP", 2;
    Nec => "NEC", 1;
}

impl RuleName {
    /// True for the `N-` counterparts of the propositional rules.
    pub fn is_nominal(self) -> bool {
        self.name().starts_with("N-")
    }

    pub fn is_macro(self) -> bool {
        matches!(self, RuleName::Mp | RuleName::Nec)
    }
}

impl fmt::Display for RuleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unknown rule name `{0}`")]
pub struct UnknownRule(pub String);

impl FromStr for RuleName {
    type Err = UnknownRule;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RuleName::ALL.iter().copied().find(|r| r.name() == s).ok_or_else(|| UnknownRule(s.to_string()))
    }
}

/// Rule parameters that cannot be read off the sequents. Principal formulas
/// are not recorded; the checker tries every candidate.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Instantiation {
    /// The eigen-nominal of `EXISTS-L`.
    pub fresh: Option<String>,
    /// The cut statement of `CUT`.
    pub cut: Option<Statement>,
}

impl Instantiation {
    pub fn fresh(y: impl Into<String>) -> Self {
        Instantiation { fresh: Some(y.into()), cut: None }
    }

    pub fn cut(s: Statement) -> Self {
        Instantiation { fresh: None, cut: Some(s) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProofTree {
    pub conclusion: Sequent,
    pub rule: RuleName,
    pub premises: Vec<ProofTree>,
    pub instantiation: Instantiation,
}

impl ProofTree {
    pub fn leaf(rule: RuleName, conclusion: Sequent) -> Self {
        ProofTree { conclusion, rule, premises: Vec::new(), instantiation: Instantiation::default() }
    }

    pub fn node(rule: RuleName, conclusion: Sequent, premises: Vec<ProofTree>) -> Self {
        ProofTree { conclusion, rule, premises, instantiation: Instantiation::default() }
    }

    pub fn with(mut self, instantiation: Instantiation) -> Self {
        self.instantiation = instantiation;
        self
    }

    /// Nodes on the longest root-to-leaf path; a single leaf has depth 1.
    pub fn depth(&self) -> usize {
        1 + self.premises.iter().map(ProofTree::depth).max().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(ProofTree::size).sum::<usize>()
    }

    pub fn rules_used(&self) -> Vec<RuleName> {
        let mut out = vec![self.rule];
        for p in &self.premises {
            out.extend(p.rules_used());
        }
        out
    }

    pub fn premise_conclusions(&self) -> Vec<Sequent> {
        self.premises.iter().map(|p| p.conclusion.clone()).collect()
    }
}

/// Rewrites `MP` into `CUT`, `SUBS-L` and `CONTR`, and `NEC` into
/// `P-FORALL`. Trees without macros are returned unchanged.
///
/// For `MP` with premises `Δ ⟹ C` and `Δ ⟹ C -> D`, the result cuts on
/// `C -> D` against `Δ, C -> D ⟹ D` (by `SUBS-L` from the first premise
/// and an axiom), then contracts the doubled copy of `Δ` one item at a
/// time.
pub fn expand_macros(tree: &ProofTree) -> ProofTree {
    let premises: Vec<ProofTree> = tree.premises.iter().map(expand_macros).collect();
    match tree.rule {
        RuleName::Nec => ProofTree { rule: RuleName::PForall, premises, ..tree.clone() },
        RuleName::Mp if premises.len() == 2 => expand_mp(&tree.conclusion, premises),
        _ => ProofTree { premises, ..tree.clone() },
    }
}

fn expand_mp(conclusion: &Sequent, mut premises: Vec<ProofTree>) -> ProofTree {
    let implication = premises.pop().unwrap();
    let minor = premises.pop().unwrap();
    let theta = conclusion.theta.clone();
    let delta = conclusion.antecedent.clone();
    let goal = conclusion.succedent.clone();
    let cut_formula = implication.conclusion.succedent.clone();
    let nominal = implication.conclusion.succedent.outer_nominal().is_some();

    let axiom = ProofTree::leaf(RuleName::Ax, Sequent::new(vec![goal.clone()], goal.clone()).with_theta(theta.clone()));
    let mut major_ant = delta.clone();
    major_ant.push(cut_formula.clone());
    let major = ProofTree::node(
        if nominal { RuleName::NSubsL } else { RuleName::SubsL },
        Sequent::new(major_ant, goal.clone()).with_theta(theta.clone()),
        vec![minor, axiom],
    );
    let mut doubled = delta.clone();
    doubled.extend(delta.iter().cloned());
    let mut tree = ProofTree::node(
        RuleName::Cut,
        Sequent::new(doubled.clone(), goal.clone()).with_theta(theta.clone()),
        vec![implication, major],
    )
    .with(Instantiation::cut(cut_formula));
    // Each CONTR removes one copy of the next item of Δ.
    for item in delta.iter().rev() {
        let at = doubled.iter().rposition(|s| s == item).unwrap();
        doubled.remove(at);
        tree = ProofTree::node(RuleName::Contr, Sequent::new(doubled.clone(), goal.clone()).with_theta(theta.clone()), vec![tree]);
    }
    tree
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for &r in RuleName::ALL {
            assert_eq!(r.name().parse::<RuleName>().unwrap(), r);
        }
        assert!("FOO".parse::<RuleName>().is_err());
        assert!(RuleName::NOrL.is_nominal());
        assert!(!RuleName::PN.is_nominal());
    }

    #[test]
    fn every_base_rule_with_a_counterpart_is_followed_by_it() {
        let all = RuleName::ALL;
        for (i, r) in all.iter().enumerate() {
            if r.is_nominal() {
                assert_eq!(format!("N-{}", all[i - 1].name()), r.name());
            }
        }
    }

    #[test]
    fn depth_counts_nodes() {
        let s = crate::syntax::parse_sequent("A |- A").unwrap();
        let leaf = ProofTree::leaf(RuleName::Ax, s.clone());
        assert_eq!(leaf.depth(), 1);
        let t = ProofTree::node(RuleName::Weak, s, vec![leaf]);
        assert_eq!((t.depth(), t.size()), (2, 2));
    }
}
