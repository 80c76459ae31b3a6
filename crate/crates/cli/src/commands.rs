use std::fs;
use std::path::Path;

use ialc::calculus::{self, parse_proof, prove_bounded, write_proof};
use ialc::sdl::{self, find_model, parse_formula_list, parse_trace};
use ialc::semantics::{check_frame_conditions, find_countermodel, load_model, parse_model, write_model, Interpretation};
use ialc::syntax::{parse_concept, parse_sequent, parse_statement};
use ialc::Signature;

use crate::report::{Exit, Failure, Report};

type Outcome = Result<Report, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, body: &str) -> Result<(), Failure> {
    fs::write(path, body).map_err(|e| Failure::internal(format!("{}: {e}", path.display())))
}

fn model(path: &Path, close: bool) -> Result<Interpretation, Failure> {
    load_model(&read(path)?, close).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn braces(names: &[&str]) -> String {
    format!("{{{}}}", names.join(", "))
}

pub fn parse(expr: &str) -> Outcome {
    let (kind, printed) = if expr.contains("|-") {
        ("sequent", parse_sequent(expr).map_err(Failure::usage)?.to_string())
    } else if let Ok(c) = parse_concept(expr) {
        ("concept", c.to_string())
    } else {
        ("statement", parse_statement(expr).map_err(Failure::usage)?.to_string())
    };
    let mut r = Report::new(Exit::Ok, "parsed");
    r.line(format!("{kind}: {printed}"));
    r.record("kind", kind).record("printed", &printed);
    Ok(r)
}

pub fn lint_model(path: &Path, close: bool) -> Outcome {
    let mut m = parse_model(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    if close {
        m = m.hereditary_closure();
    }
    let lint = check_frame_conditions(&m);
    let mut r = Report::verdict(lint.passed, "lint-pass", "lint-fail");
    r.line(format!("{}: {} entities, {}", path.display(), m.len(), if lint.passed { "all conditions hold" } else { "conditions violated" }));
    r.record("entities", m.len()).record("passed", lint.passed);
    for v in &lint.violations {
        r.line(format!("  violation {v}"));
        r.record("violation", v);
    }
    for w in &lint.warnings {
        r.line(format!("  warning: {w}"));
        r.record("warning", w);
    }
    Ok(r)
}

pub fn eval(path: &Path, concept: &str, close: bool) -> Outcome {
    let m = model(path, close)?;
    let c = parse_concept(concept).map_err(Failure::usage)?;
    let ext = m.names_of(m.eval_concept(&c));
    let mut r = Report::new(Exit::Ok, "evaluated");
    r.line(format!("{c} = {}", braces(&ext)));
    r.record("concept", &c).record("extension", ext.join(","));
    Ok(r)
}

pub fn sat(path: &Path, statement: &str, close: bool) -> Outcome {
    let m = model(path, close)?;
    let s = parse_statement(statement).map_err(Failure::usage)?;
    let holds = m.satisfies(&s).map_err(Failure::usage)?;
    let mut r = Report::verdict(holds, "satisfied", "unsatisfied");
    r.line(format!("{s}: {}", if holds { "holds" } else { "does not hold" }));
    r.record("statement", &s).record("holds", holds);
    Ok(r)
}

pub fn valid(path: &Path, sequent: &str, close: bool) -> Outcome {
    let m = model(path, close)?;
    let s = parse_sequent(sequent).map_err(Failure::usage)?;
    let ok = m.sequent_valid(&s).map_err(Failure::usage)?;
    let mut r = Report::verdict(ok, "valid", "invalid");
    r.line(format!("{s}: {}", if ok { "valid" } else { "invalid" }));
    r.record("sequent", &s).record("valid", ok);
    if !ok {
        // Validity failed, so the TBox holds and some world refutes the sequent.
        let mut bad = Vec::new();
        for w in 0..m.len() {
            let mut premises = true;
            for a in &s.antecedent {
                premises &= m.holds_at(a, w).map_err(Failure::usage)?;
            }
            if premises && !m.holds_at(&s.succedent, w).map_err(Failure::usage)? {
                bad.push(m.entities()[w].as_str());
            }
        }
        r.line(format!("  refuted at {}", braces(&bad)));
        r.record("refuted_at", bad.join(","));
    }
    Ok(r)
}

pub fn countermodel(sequent: &str, max: usize, out: Option<&Path>) -> Outcome {
    let s = parse_sequent(sequent).map_err(Failure::usage)?;
    let found = find_countermodel(&Signature::of_sequent(&s), &s, max).map_err(Failure::usage)?;
    let Some(m) = found else {
        let mut r = Report::new(Exit::Ok, format!("no-countermodel@{max}"));
        r.line(format!("# no countermodel with at most {max} entities for {s}"));
        r.record("sequent", &s).record("max", max).record("found", false);
        return Ok(r);
    };
    let ikm = write_model(&m);
    if let Some(path) = out {
        write(path, &ikm)?;
    }
    let mut r = Report::new(Exit::Negative, format!("countermodel@{max}"));
    r.line(format!("# countermodel with {} entities for {s}", m.len()));
    r.record("sequent", &s).record("max", max).record("found", true).record("entities", m.len());
    r.artifact("ikm", &ikm);
    Ok(r)
}

pub fn check_proof(path: &Path) -> Outcome {
    let tree = parse_proof(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let verdict = calculus::check_proof(&tree);
    let mut r = Report::verdict(verdict.accepted, "accepted", "rejected");
    r.line(format!("{}: {} ({} nodes, depth {})", tree.conclusion, if verdict.accepted { "accepted" } else { "rejected" }, tree.size(), tree.depth()));
    r.record("conclusion", &tree.conclusion).record("accepted", verdict.accepted).record("nodes", tree.size());
    for f in &verdict.failures {
        r.line(format!("  {f}"));
        r.record("failure", format!("{} {} {}", f.path_string(), f.rule, f.error.code()));
    }
    Ok(r)
}

pub fn prove(sequent: &str, depth: usize, out: Option<&Path>) -> Outcome {
    let s = parse_sequent(sequent).map_err(Failure::usage)?;
    let found = prove_bounded(&s, depth).map_err(Failure::usage)?;
    let Some(tree) = found else {
        let mut r = Report::new(Exit::Negative, format!("unprovable@{depth}"));
        r.line(format!("# no proof of depth at most {depth} for {s}"));
        r.record("sequent", &s).record("depth_bound", depth).record("found", false);
        return Ok(r);
    };
    let ipf = write_proof(&tree);
    if let Some(path) = out {
        write(path, &ipf)?;
    }
    let mut r = Report::new(Exit::Ok, format!("provable@{depth}"));
    r.line(format!("# proof of depth {} for {s}", tree.depth()));
    r.record("sequent", &s).record("depth_bound", depth).record("found", true).record("depth", tree.depth());
    r.artifact("ipf", &ipf);
    Ok(r)
}

pub fn sdl_check(path: &Path) -> Outcome {
    let trace = parse_trace(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let verdict = sdl::check_derivation(&trace);
    let mut r = Report::verdict(verdict.accepted, "accepted", "rejected");
    let last = trace.conclusion().map(ToString::to_string).unwrap_or_default();
    r.line(format!(
        "{}: {} ({} assumptions, {} steps, concludes {last})",
        path.display(),
        if verdict.accepted { "accepted" } else { "rejected" },
        trace.assumptions.len(),
        trace.steps.len()
    ));
    r.record("accepted", verdict.accepted).record("steps", trace.steps.len()).record("conclusion", &last);
    for f in &verdict.failures {
        r.line(format!("  {f}"));
        r.record("failure", f);
    }
    Ok(r)
}

pub fn sdl_sat(formulas: &str, max: usize, serial: bool) -> Outcome {
    let fs = parse_formula_list(formulas).map_err(Failure::usage)?;
    let found = find_model(&fs, max, serial).map_err(Failure::usage)?;
    let logic = if serial { "KD" } else { "K" };
    let mut r = Report::verdict(found.is_some(), &format!("sat@{max}"), &format!("unsat@{max}"));
    r.record("logic", logic).record("max", max).record("found", found.is_some());
    match found {
        Some(m) => {
            r.line(format!("{logic} model with {} worlds:", m.worlds));
            r.record("worlds", m.worlds);
            r.artifact("model", &m.to_string());
        }
        None => {
            r.line(format!("no {logic} model with at most {max} worlds"));
        }
    }
    Ok(r)
}
