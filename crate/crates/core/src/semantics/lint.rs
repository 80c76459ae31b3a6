use std::fmt;

use super::{EntitySet, Interpretation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    Refl,
    Trans,
    Heredity,
    F1,
    F2,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::Refl => "REFL",
            Condition::Trans => "TRANS",
            Condition::Heredity => "HEREDITY",
            Condition::F1 => "F1",
            Condition::F2 => "F2",
        })
    }
}

/// One failed instance of a frame or heredity condition. `symbol` names the
/// atom (HEREDITY) or role (F1/F2) involved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    pub witness: Vec<String>,
    pub symbol: Option<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}", self.condition, self.witness.join(", "))?;
        if let Some(s) = &self.symbol {
            write!(f, ", {s}")?;
        }
        f.write_str(")")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LintReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
    /// Non-fatal: role relations that are not closed under refinement on
    /// both sides. Role assertions `x R y` quantify over all refinements of
    /// `x` and `y`, so such relations make them hard to satisfy.
    pub warnings: Vec<String>,
}

impl LintReport {
    pub fn has(&self, condition: Condition) -> bool {
        self.violations.iter().any(|v| v.condition == condition)
    }
}

/// Reports every violated instance of REFL, TRANS (on the stored preorder),
/// HEREDITY, F1 and F2, in lexicographic witness order.
pub fn check_frame_conditions(m: &Interpretation) -> LintReport {
    let n = m.len();
    let name = |i: usize| m.entities()[i].clone();
    let mut violations = Vec::new();
    let mut push = |condition, witness: Vec<usize>, symbol: Option<&str>| {
        violations.push(Violation {
            condition,
            witness: witness.into_iter().map(name).collect(),
            symbol: symbol.map(str::to_string),
        })
    };

    for i in 0..n {
        if !m.precedes(i, i) {
            push(Condition::Refl, vec![i], None);
        }
    }
    for i in 0..n {
        for j in m.refinements(i).iter() {
            for k in m.refinements(j).iter() {
                if !m.precedes(i, k) {
                    push(Condition::Trans, vec![i, j, k], None);
                }
            }
        }
    }
    for atom in m.atom_names() {
        let set = m.atom(atom);
        for e in set.iter() {
            for e2 in m.refinements(e).iter() {
                if !set.contains(e2) {
                    push(Condition::Heredity, vec![e, e2], Some(atom));
                }
            }
        }
    }
    let mut warnings = Vec::new();
    for role in m.role_names() {
        for w in 0..n {
            // F1: w ⪯ w', wRv  ⟹  ∃v'. w'Rv' ∧ v ⪯ v'
            for w2 in m.refinements(w).iter() {
                for v in m.successors(role, w).iter() {
                    if (m.successors(role, w2).0 & m.refinements(v).0) == 0 {
                        push(Condition::F1, vec![w, w2, v], Some(role));
                    }
                }
            }
            // F2: v ⪯ v', wRv  ⟹  ∃w'. w'Rv' ∧ w ⪯ w'
            for v in m.successors(role, w).iter() {
                for v2 in m.refinements(v).iter() {
                    if !m.refinements(w).iter().any(|w2| m.successors(role, w2).contains(v2)) {
                        push(Condition::F2, vec![w, v, v2], Some(role));
                    }
                }
            }
        }
        if let Some((w, v, w2, v2)) = unclosed_pair(m, role) {
            let e = m.entities();
            warnings.push(format!(
                "role {role}: ({}, {}) is in the relation but the refinement pair ({}, {}) is not",
                e[w], e[v], e[w2], e[v2]
            ));
        }
    }
    LintReport { passed: violations.is_empty(), violations, warnings }
}

fn unclosed_pair(m: &Interpretation, role: &str) -> Option<(usize, usize, usize, usize)> {
    for (w, v) in m.role_pairs(role) {
        for w2 in m.refinements(w).iter() {
            let missing = EntitySet(m.refinements(v).0 & !m.successors(role, w2).0);
            if let Some(v2) = missing.iter().next() {
                return Some((w, v, w2, v2));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entities(m: &mut Interpretation, names: &[&str]) {
        for n in names {
            m.add_entity(*n).unwrap();
        }
    }

    #[test]
    fn f1_violation_is_reported() {
        let mut m = Interpretation::new();
        entities(&mut m, &["w", "w2", "v"]);
        m.add_precedence("w", "w2").unwrap();
        m.add_role_pair("R", "w", "v").unwrap();
        let report = check_frame_conditions(&m);
        assert!(!report.passed);
        assert_eq!(
            report.violations,
            vec![Violation {
                condition: Condition::F1,
                witness: vec!["w".into(), "w2".into(), "v".into()],
                symbol: Some("R".into()),
            }]
        );
    }

    #[test]
    fn f2_violation_is_reported() {
        let mut m = Interpretation::new();
        entities(&mut m, &["w", "v", "v2"]);
        m.add_precedence("v", "v2").unwrap();
        m.add_role_pair("R", "w", "v").unwrap();
        let report = check_frame_conditions(&m);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].condition, Condition::F2);
        assert_eq!(report.violations[0].witness, ["w", "v", "v2"]);
    }

    #[test]
    fn heredity_violation_before_closure() {
        let mut m = Interpretation::new();
        entities(&mut m, &["w0", "w1"]);
        m.add_precedence("w0", "w1").unwrap();
        m.add_atom_fact("A", "w0").unwrap();
        let report = check_frame_conditions(&m);
        assert_eq!(
            report.violations,
            vec![Violation {
                condition: Condition::Heredity,
                witness: vec!["w0".into(), "w1".into()],
                symbol: Some("A".into()),
            }]
        );
        assert!(check_frame_conditions(&m.hereditary_closure()).passed);
    }

    #[test]
    fn raw_preorder_lints_refl_and_trans() {
        let names = vec!["a".to_string(), "b".into(), "c".into()];
        // a ⪯ b, b ⪯ c, no a ⪯ c, c not reflexive
        let up = vec![EntitySet(0b011), EntitySet(0b110), EntitySet(0)];
        let report = check_frame_conditions(&Interpretation::with_raw_preorder(names, up));
        assert!(report.has(Condition::Refl));
        assert!(report.has(Condition::Trans));
        assert_eq!(report.violations.iter().find(|v| v.condition == Condition::Trans).unwrap().witness, ["a", "b", "c"]);
    }

    #[test]
    fn unclosed_role_only_warns() {
        // F1/F2 hold (w2 has its own successor) but R is not up-closed.
        let mut m = Interpretation::new();
        entities(&mut m, &["w", "w2", "v", "v2"]);
        m.add_precedence("w", "w2").unwrap();
        m.add_precedence("v", "v2").unwrap();
        m.add_role_pair("R", "w", "v").unwrap();
        m.add_role_pair("R", "w2", "v2").unwrap();
        let report = check_frame_conditions(&m);
        assert!(report.passed, "{:?}", report.violations);
        assert_eq!(report.warnings.len(), 1);
    }
}
