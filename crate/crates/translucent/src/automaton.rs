//! The automaton septuple and structural validation.
//!
//! One [`Automaton`] type houses every model variant uniformly: the
//! classical disjoint machines, the state-deterministic restriction and
//! the nondeterministic-translucency machines differ only in structural
//! properties computed by [`crate::classify`].

use std::collections::HashMap;

use thiserror::Error;

use crate::alphabet::{valid_token, Alphabet, AlphabetError, SymbolId, SymbolSet, ENDMARKER};

/// Ordinal of a state within its automaton, in declaration order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StateId(pub usize);

/// An automaton description with string names, as read from a file or
/// assembled in code. [`RawAutomaton::validate`] turns it into an
/// [`Automaton`] or reports every violation found.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawAutomaton {
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    pub initial: Vec<String>,
    pub finals: Vec<String>,
    /// Pairs `(state, letters)`. Repeated entries for one state accumulate;
    /// states without an entry get an empty translucency set.
    pub translucent: Vec<(String, Vec<String>)>,
    /// Triples `(from, letter, to)`. Repeated lines accumulate target sets.
    pub transitions: Vec<(String, String, String)>,
}

/// A structural violation detected by [`RawAutomaton::validate`].
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ValidationError {
    #[error("unknown state {0:?}")]
    UnknownState(String),
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("initial state set is empty")]
    EmptyInitialSet,
    #[error("duplicate symbol {0:?}")]
    DuplicateSymbol(String),
    #[error("duplicate state {0:?}")]
    DuplicateState(String),
    #[error("token {0:?} is reserved for the endmarker")]
    ReservedEndmarker(String),
    #[error("invalid token {0:?}")]
    InvalidToken(String),
    #[error("alphabet has {0} symbols, at most 64 are supported")]
    TooManySymbols(usize),
}

impl From<AlphabetError> for ValidationError {
    fn from(e: AlphabetError) -> Self {
        match e {
            AlphabetError::DuplicateSymbol(t) => ValidationError::DuplicateSymbol(t),
            AlphabetError::ReservedEndmarker(t) => ValidationError::ReservedEndmarker(t),
            AlphabetError::InvalidToken(t) => ValidationError::InvalidToken(t),
            AlphabetError::TooManySymbols(n) => ValidationError::TooManySymbols(n),
        }
    }
}

/// A validated automaton `(Q, Σ, $, τ, I, F, δ)`.
///
/// The endmarker is not stored; acceptance is defined on remaining-word
/// contents. `δ` is total with the empty target set meaning "undefined".
/// All internal orders are declaration orders, so every downstream
/// computation is reproducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automaton {
    pub(crate) states: Vec<String>,
    pub(crate) alphabet: Alphabet,
    /// Sorted, deduplicated, non-empty.
    pub(crate) initial: Vec<StateId>,
    /// Indexed by state ordinal.
    pub(crate) finals: Vec<bool>,
    /// Indexed by state ordinal.
    pub(crate) translucency: Vec<SymbolSet>,
    /// `transitions[q][a]` is the sorted target list of `δ(q, a)`.
    pub(crate) transitions: Vec<Vec<Vec<StateId>>>,
}

impl RawAutomaton {
    /// Validates the record, returning either the automaton or the complete
    /// list of violations.
    pub fn validate(&self) -> Result<Automaton, Vec<ValidationError>> {
        let mut errors = Vec::new();

        let mut symbol_index: HashMap<&str, SymbolId> = HashMap::new();
        for (i, tok) in self.alphabet.iter().enumerate() {
            if tok == ENDMARKER {
                errors.push(ValidationError::ReservedEndmarker(tok.clone()));
            } else if !valid_token(tok) {
                errors.push(ValidationError::InvalidToken(tok.clone()));
            } else if symbol_index.insert(tok, SymbolId(i)).is_some() {
                errors.push(ValidationError::DuplicateSymbol(tok.clone()));
            }
        }
        if self.alphabet.len() > crate::alphabet::MAX_SYMBOLS {
            errors.push(ValidationError::TooManySymbols(self.alphabet.len()));
        }

        let mut state_index: HashMap<&str, StateId> = HashMap::new();
        for (i, name) in self.states.iter().enumerate() {
            if name == ENDMARKER {
                errors.push(ValidationError::ReservedEndmarker(name.clone()));
            } else if !valid_token(name) {
                errors.push(ValidationError::InvalidToken(name.clone()));
            } else if state_index.insert(name, StateId(i)).is_some() {
                errors.push(ValidationError::DuplicateState(name.clone()));
            }
        }

        let n = self.states.len();
        let m = self.alphabet.len();

        let lookup_state = |name: &str, errors: &mut Vec<ValidationError>| -> Option<StateId> {
            match state_index.get(name) {
                Some(&q) => Some(q),
                None => {
                    errors.push(ValidationError::UnknownState(name.to_string()));
                    None
                }
            }
        };
        let lookup_symbol = |tok: &str, errors: &mut Vec<ValidationError>| -> Option<SymbolId> {
            match symbol_index.get(tok) {
                Some(&a) => Some(a),
                None => {
                    errors.push(ValidationError::UnknownSymbol(tok.to_string()));
                    None
                }
            }
        };

        if self.initial.is_empty() {
            errors.push(ValidationError::EmptyInitialSet);
        }
        let mut initial: Vec<StateId> = self
            .initial
            .iter()
            .filter_map(|name| lookup_state(name, &mut errors))
            .collect();
        initial.sort_unstable();
        initial.dedup();

        let mut finals = vec![false; n];
        for name in &self.finals {
            if let Some(q) = lookup_state(name, &mut errors) {
                finals[q.0] = true;
            }
        }

        let mut translucency = vec![SymbolSet::EMPTY; n];
        for (name, letters) in &self.translucent {
            let q = lookup_state(name, &mut errors);
            for tok in letters {
                let a = lookup_symbol(tok, &mut errors);
                if let (Some(q), Some(a)) = (q, a) {
                    translucency[q.0].insert(a);
                }
            }
        }

        let mut transitions = vec![vec![Vec::new(); m]; n];
        for (from, letter, to) in &self.transitions {
            let q = lookup_state(from, &mut errors);
            let a = lookup_symbol(letter, &mut errors);
            let p = lookup_state(to, &mut errors);
            if let (Some(q), Some(a), Some(p)) = (q, a, p) {
                transitions[q.0][a.0].push(p);
            }
        }
        for row in &mut transitions {
            for targets in row {
                targets.sort_unstable();
                targets.dedup();
            }
        }

        if !errors.is_empty() {
            return Err(errors);
        }
        Ok(Automaton {
            states: self.states.clone(),
            alphabet: Alphabet::new(self.alphabet.clone())
                .expect("alphabet tokens were checked above"),
            initial,
            finals,
            translucency,
            transitions,
        })
    }
}

impl Automaton {
    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn state_ids(&self) -> impl Iterator<Item = StateId> {
        (0..self.states.len()).map(StateId)
    }

    /// The declared name of a state. Panics on a foreign id.
    pub fn state_name(&self, q: StateId) -> &str {
        &self.states[q.0]
    }

    pub fn state_id(&self, name: &str) -> Option<StateId> {
        self.states.iter().position(|s| s == name).map(StateId)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Initial states, sorted by ordinal; never empty.
    pub fn initial(&self) -> &[StateId] {
        &self.initial
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q.0]
    }

    pub fn final_states(&self) -> impl Iterator<Item = StateId> + '_ {
        self.state_ids().filter(|&q| self.is_final(q))
    }

    /// The translucency set `τ(q)`.
    pub fn translucent(&self, q: StateId) -> SymbolSet {
        self.translucency[q.0]
    }

    /// The sorted target list of `δ(q, a)`; empty means undefined.
    pub fn targets(&self, q: StateId, a: SymbolId) -> &[StateId] {
        &self.transitions[q.0][a.0]
    }

    /// Rebuilds the raw record (used by serialization and constructions).
    pub fn to_raw(&self) -> RawAutomaton {
        RawAutomaton {
            alphabet: self.alphabet.tokens().map(str::to_string).collect(),
            states: self.states.clone(),
            initial: self
                .initial
                .iter()
                .map(|&q| self.states[q.0].clone())
                .collect(),
            finals: self
                .state_ids()
                .filter(|&q| self.is_final(q))
                .map(|q| self.states[q.0].clone())
                .collect(),
            translucent: self
                .state_ids()
                .filter(|&q| !self.translucent(q).is_empty())
                .map(|q| {
                    (
                        self.states[q.0].clone(),
                        self.translucent(q)
                            .iter()
                            .map(|a| self.alphabet.token(a).to_string())
                            .collect(),
                    )
                })
                .collect(),
            transitions: self
                .state_ids()
                .flat_map(|q| {
                    self.alphabet.ids().flat_map(move |a| {
                        self.targets(q, a).iter().map(move |&p| (q, a, p))
                    })
                })
                .map(|(q, a, p)| {
                    (
                        self.states[q.0].clone(),
                        self.alphabet.token(a).to_string(),
                        self.states[p.0].clone(),
                    )
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_raw() -> RawAutomaton {
        RawAutomaton {
            alphabet: vec!["a".into(), "b".into()],
            states: vec!["q0".into(), "q1".into()],
            initial: vec!["q0".into()],
            finals: vec!["q1".into()],
            translucent: vec![("q1".into(), vec!["a".into()])],
            transitions: vec![
                ("q0".into(), "a".into(), "q1".into()),
                ("q0".into(), "a".into(), "q0".into()),
            ],
        }
    }

    #[test]
    fn validate_builds_sorted_structures() {
        let a = small_raw().validate().unwrap();
        assert_eq!(a.num_states(), 2);
        assert_eq!(a.initial(), &[StateId(0)]);
        assert!(a.is_final(StateId(1)) && !a.is_final(StateId(0)));
        assert_eq!(a.targets(StateId(0), SymbolId(0)), &[StateId(0), StateId(1)]);
        assert!(a.targets(StateId(1), SymbolId(0)).is_empty());
        assert!(a.translucent(StateId(1)).contains(SymbolId(0)));
    }

    #[test]
    fn validate_collects_all_errors() {
        let mut raw = small_raw();
        raw.initial = vec![];
        raw.transitions.push(("q0".into(), "x".into(), "qX".into()));
        raw.finals.push("qY".into());
        let errs = raw.validate().unwrap_err();
        assert!(errs.contains(&ValidationError::EmptyInitialSet));
        assert!(errs.contains(&ValidationError::UnknownSymbol("x".into())));
        assert!(errs.contains(&ValidationError::UnknownState("qX".into())));
        assert!(errs.contains(&ValidationError::UnknownState("qY".into())));
        assert_eq!(errs.len(), 4);
    }

    #[test]
    fn validate_rejects_duplicates_and_reserved() {
        let mut raw = small_raw();
        raw.states.push("q0".into());
        raw.alphabet.push("a".into());
        raw.alphabet.push("$".into());
        let errs = raw.validate().unwrap_err();
        assert!(errs.contains(&ValidationError::DuplicateState("q0".into())));
        assert!(errs.contains(&ValidationError::DuplicateSymbol("a".into())));
        assert!(errs.contains(&ValidationError::ReservedEndmarker("$".into())));
    }

    #[test]
    fn raw_round_trip_is_stable() {
        let a = small_raw().validate().unwrap();
        let again = a.to_raw().validate().unwrap();
        assert_eq!(a, again);
    }
}
