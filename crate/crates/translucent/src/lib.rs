//! Finite automata with translucent letters.
//!
//! A machine in this family owns, per state, a set of *translucent* letters
//! it cannot see. A step reads the first visible occurrence on the tape (in
//! the relaxed models, any occurrence whose preceding letters are all
//! translucent), erases it, and changes state. The input is accepted when a
//! final state is reached and every remaining letter is translucent for it.
//!
//! The crate provides:
//!
//! - [`automaton`]: the validated machine representation and its builder
//!   form, [`automaton::RawAutomaton`];
//! - [`engine`]: configurations, eligible positions, acceptance, traces,
//!   and an intentionally naive reference decider;
//! - [`classify`]: the structural flags (single initial state, deterministic
//!   transitions, disjoint translucency, state-determinism) and the variant
//!   labels they induce;
//! - [`langops`]: bounded enumeration, bounded equivalence, Parikh images,
//!   and the letter-equivalence constructions (overlap removal and
//!   translucency dropping);
//! - [`constructions`]: union, guarded union, and exhaustive search for
//!   small state-deterministic machines;
//! - [`corpus`]: built-in example machines with independent oracles;
//! - [`format`]: the text file format and DOT export.

pub mod alphabet;
pub mod automaton;
pub mod classify;
pub mod constructions;
pub mod corpus;
pub mod engine;
pub mod format;
pub mod langops;

pub use alphabet::{Alphabet, SymbolId, SymbolSet, Word};
pub use automaton::{Automaton, RawAutomaton, StateId, ValidationError};
pub use classify::{classify, VariantLabel, VariantProfile};
pub use engine::{
    accepts, eligible_positions, first_trace, is_accepting_config, naive_accepts, successors,
    Configuration, Step, Trace,
};
pub use langops::{
    all_words, bounded_equivalent, check_letter_equivalence_lemma, enumerate, parikh_up_to,
    BoundedLanguage, Equivalence, ParikhVector,
};
