//! Reasoning toolkit for the intuitionistic description logic iALC.
//!
//! - [`syntax`]: concepts, statements and sequents with a round-tripping text syntax
//! - [`semantics`]: finite constructive Kripke interpretations, lint, evaluation,
//!   sequent validity and exhaustive countermodel search
//! - [`calculus`]: labeled sequent-calculus proof trees, a rule checker and
//!   bounded backward proof search
//! - [`sdl`]: Standard Deontic Logic (KD) formulas, Hilbert trace checking and
//!   serial-model search
//! - [`corpus`]: bundled fixtures for the worked examples

pub mod calculus;
pub mod corpus;
pub mod sdl;
pub mod semantics;
pub mod syntax;

pub use semantics::{Interpretation, Signature};
pub use syntax::{Concept, Sequent, Statement};
