use ialc::calculus::check_proof;
use ialc::corpus::{self, observe};
use ialc::sdl::check_derivation;

#[test]
fn every_fixture_meets_its_expected_verdict() {
    let fixtures = corpus::manifest().unwrap();
    assert!(fixtures.len() >= 16);
    for f in &fixtures {
        assert_eq!(observe(f).unwrap(), f.expected, "{}", f.id);
    }
}

#[test]
fn broken_proof_is_rejected_where_the_premise_is_missing() {
    let v = check_proof(&corpus::load_proof("proofs/exists_k_broken.ipf").unwrap());
    assert!(!v.accepted);
    assert_eq!(v.failures.len(), 1);
    assert_eq!(v.failures[0].path_string(), "root.0.0");
    assert_eq!(v.failures[0].error.code(), "ARITY");
}

#[test]
fn free_choice_without_fcp_fails_at_the_conclusion() {
    let v = check_derivation(&corpus::load_trace("sdl/free_choice_without_fcp.sdt").unwrap());
    assert!(!v.accepted);
    assert_eq!(v.failures.len(), 1);
    assert_eq!(v.failures[0].step, 10);
    assert!(v.failures[0].reason.contains("step 7"), "{}", v.failures[0].reason);
}

#[test]
fn chisholm_trace_ends_in_false() {
    let (assumptions, trace) = corpus::load_chisholm_sdl();
    assert_eq!(assumptions.len(), 4);
    assert_eq!(trace.conclusion(), Some(&ialc::sdl::Formula::False));
    assert!(check_derivation(&trace).accepted);
}
