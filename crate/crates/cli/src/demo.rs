use ialc::calculus::{check_proof, prove_bounded};
use ialc::corpus;
use ialc::sdl::{check_derivation, find_model, Formula};
use ialc::semantics::{check_frame_conditions, ModelSpace};
use ialc::Signature;

use crate::report::Report;
use crate::DemoName;

/// Collects narrative lines and a pass/fail record per check.
struct Story {
    text: Vec<String>,
    records: Vec<(String, String)>,
    ok: bool,
}

impl Story {
    fn new() -> Self {
        Story { text: Vec::new(), records: Vec::new(), ok: true }
    }

    fn say(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    fn check(&mut self, key: &str, passed: bool, what: impl Into<String>) {
        self.ok &= passed;
        self.text.push(format!("  [{}] {}", if passed { "ok" } else { "FAILED" }, what.into()));
        self.records.push((key.to_string(), passed.to_string()));
    }

    fn into_report(self, name: &str) -> Report {
        let mut r = Report::verdict(self.ok, "demo-pass", "demo-fail");
        r.text = self.text;
        r.record("demo", name);
        r.records.extend(self.records);
        r
    }
}

pub fn run(name: DemoName) -> Report {
    match name {
        DemoName::Chisholm => chisholm(),
        DemoName::FreeChoice => free_choice(),
        DemoName::Axioms => axioms(),
    }
}

fn chisholm() -> Report {
    let mut st = Story::new();
    let (assumptions, trace) = corpus::load_chisholm_sdl();

    st.say("Chisholm's scenario in standard deontic logic (KD):");
    for f in &assumptions {
        st.say(format!("    {f}"));
    }
    let verdict = check_derivation(&trace);
    let ends_false = trace.conclusion() == Some(&Formula::False);
    st.check("sdl_trace_accepted", verdict.accepted, format!("the {}-step derivation checks", trace.steps.len()));
    for f in &verdict.failures {
        st.say(format!("      {f}"));
    }
    st.check("sdl_trace_ends_in_false", ends_false, "and its last step is `false`: the four sentences contradict the no-conflict principle");

    let model = find_model(&assumptions, 3, true);
    let none = matches!(model, Ok(None));
    st.check("sdl_no_model_3", none, "no serial Kripke model with at most 3 worlds satisfies all four");
    let without_fact = corpus::load_trace("sdl/chisholm_without_fact.sdt").map(|t| t.assumptions);
    let rescued = matches!(without_fact.as_deref().map(|fs| find_model(fs, 2, true)), Ok(Ok(Some(_))));
    st.check("sdl_sat_without_fact", rescued, "dropping the factual sentence leaves a satisfiable set");

    st.say("");
    st.say("The same scenario in iALC, one nominal per law, ordered by precedence:");
    let (m, statements) = corpus::load_chisholm_ialc();
    let lint = check_frame_conditions(&m);
    st.check("ialc_model_lints", lint.passed, format!("the {}-law model satisfies the frame conditions", m.len()));
    let mut all = true;
    for s in &statements {
        let holds = m.satisfies(s).unwrap_or(false);
        all &= holds;
        st.say(format!("      {s}: {}", if holds { "holds" } else { "FAILS" }));
    }
    st.check("ialc_statements_hold", all, format!("all {} encoded statements hold in it", statements.len()));
    st.say("");
    st.say("So the set is inconsistent in KD but has a model in iALC.");
    st.into_report("chisholm")
}

fn free_choice() -> Report {
    let mut st = Story::new();
    let trace = corpus::load_free_choice_trace();
    st.say(format!("Free choice permission, derived in KD extended with FCP ({} steps):", trace.steps.len()));
    let verdict = check_derivation(&trace);
    st.check("fcp_trace_accepted", verdict.accepted, format!("the trace checks and concludes {}", trace.conclusion().map(ToString::to_string).unwrap_or_default()));
    for f in &verdict.failures {
        st.say(format!("      {f}"));
    }
    let fcp_step = trace.steps.iter().find(|s| s.justification == ialc::sdl::Justification::Fcp).map(|s| s.number);
    match fcp_step {
        Some(n) => {
            let cut = check_derivation(&trace.without_step(n));
            st.check("without_fcp_rejected", !cut.accepted, format!("without the FCP step ({n}) the trace is rejected"));
            for f in &cut.failures {
                st.say(format!("      {f}"));
            }
        }
        None => st.check("without_fcp_rejected", false, "the trace has no FCP step"),
    }
    st.into_report("free-choice")
}

fn axioms() -> Report {
    let mut st = Story::new();
    st.say("Each axiom, proved in the sequent calculus:");
    for (path, (theorem, proof)) in corpus::AXIOM_PROOFS.iter().zip(corpus::load_axiom_proofs()) {
        let accepted = check_proof(&proof).accepted;
        st.check("proof_accepted", accepted, format!("{path}: {theorem} ({} nodes)", proof.size()));
        let found = prove_bounded(&theorem, 8).ok().flatten();
        let depth = found.as_ref().map(|t| t.depth());
        st.check("rederived", found.is_some(), format!("proof search finds it again (depth {})", depth.map_or("-".into(), |d| d.to_string())));
    }
    st.say("");
    st.say("Each axiom, checked on every model with at most 3 entities:");
    let axioms = corpus::load_sequents("sequents/axioms.seq").unwrap_or_default();
    for s in &axioms {
        let valid = ModelSpace::new(Signature::of_sequent(s), 3).and_then(|sp| sp.valid(s)).unwrap_or(false);
        st.check("valid_3", valid, s.to_string());
    }
    st.check("axiom_count", axioms.len() == 5, "five axioms");
    st.into_report("axioms")
}
