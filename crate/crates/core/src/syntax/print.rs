use std::fmt;

use super::{Concept, Sequent, Statement};

// Binding strength: `->` 1, `or` 2, `and` 3, prefix forms and leaves 4.
fn strength(c: &Concept) -> u8 {
    match c {
        Concept::Subs(..) => 1,
        Concept::Or(..) => 2,
        Concept::And(..) => 3,
        _ => 4,
    }
}

fn write_concept(f: &mut fmt::Formatter<'_>, c: &Concept, min: u8) -> fmt::Result {
    if strength(c) < min {
        f.write_str("(")?;
        write_concept(f, c, 0)?;
        return f.write_str(")");
    }
    match c {
        Concept::Atom(a) => f.write_str(a),
        Concept::Bottom => f.write_str("Bot"),
        Concept::Top => f.write_str("Top"),
        Concept::Not(b) => {
            f.write_str("not ")?;
            write_concept(f, b, 4)
        }
        Concept::And(l, r) => {
            write_concept(f, l, 3)?;
            f.write_str(" and ")?;
            write_concept(f, r, 4)
        }
        Concept::Or(l, r) => {
            write_concept(f, l, 2)?;
            f.write_str(" or ")?;
            write_concept(f, r, 3)
        }
        Concept::Subs(l, r) => {
            write_concept(f, l, 2)?;
            f.write_str(" -> ")?;
            write_concept(f, r, 1)
        }
        Concept::Exists(role, b) => {
            write!(f, "some {role}.")?;
            write_concept(f, b, 4)
        }
        Concept::Forall(role, b) => {
            write!(f, "all {role}.")?;
            write_concept(f, b, 4)
        }
    }
}

impl fmt::Display for Concept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_concept(f, self, 0)
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Concept(c) => write!(f, "{c}"),
            Statement::Nominal(x, body) => match body.as_ref() {
                Statement::Concept(c) => write!(f, "{x} : {c}"),
                inner => write!(f, "{x} : ({inner})"),
            },
            Statement::Role(x, r, y) => write!(f, "{x} {r} {y}"),
        }
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.theta.is_empty() {
            f.write_str("tbox: ")?;
            for (i, c) in self.theta.iter().enumerate() {
                if i > 0 {
                    f.write_str("; ")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str(" | ")?;
        }
        for (i, s) in self.antecedent.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{s}")?;
        }
        if !self.antecedent.is_empty() {
            f.write_str(" ")?;
        }
        write!(f, "|- {}", self.succedent)
    }
}

#[cfg(test)]
mod tests {
    use super::super::*;

    #[test]
    fn printing_examples() {
        assert_eq!(Concept::Top.to_string(), "Top");
        assert_eq!(
            Concept::subs(Concept::exists("R", Concept::Bottom), Concept::Bottom).to_string(),
            "some R.Bot -> Bot"
        );
        assert_eq!(Concept::not(Concept::atom("P")).to_string(), "not P");
    }

    #[test]
    fn minimal_parentheses() {
        let a = || Concept::atom("A");
        let b = || Concept::atom("B");
        assert_eq!(Concept::subs(Concept::subs(a(), b()), a()).to_string(), "(A -> B) -> A");
        assert_eq!(Concept::and(a(), Concept::and(a(), b())).to_string(), "A and (A and B)");
        assert_eq!(Concept::exists("R", Concept::or(a(), b())).to_string(), "some R.(A or B)");
        assert_eq!(Concept::not(Concept::and(a(), b())).to_string(), "not (A and B)");
    }

    #[test]
    fn sequent_layout() {
        let s = parse_sequent("tbox: A -> B ;  C -> D | x : A ; x R y |- y : (z : B)").unwrap();
        assert_eq!(s.to_string(), "tbox: A -> B; C -> D | x : A; x R y |- y : (z : B)");
        assert_eq!(parse_sequent("|-Top").unwrap().to_string(), "|- Top");
    }
}
