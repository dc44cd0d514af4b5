//! Shared helpers for the integration tests: seeded random machines and two
//! independent reference deciders.

#![allow(dead_code)]

use rand::seq::IteratorRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

use translucent::alphabet::Word;
use translucent::automaton::{Automaton, RawAutomaton, StateId};
use translucent::langops::drop_translucency;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const LETTERS: [&str; 3] = ["a", "b", "c"];

/// A random machine with at most 4 states over at most 3 letters. Every
/// structural feature (multiple initial states, overlapping translucency,
/// nondeterministic transitions, unreachable states) appears with positive
/// probability.
pub fn random_automaton(rng: &mut ChaCha8Rng) -> Automaton {
    let n_states = rng.gen_range(1..=4usize);
    let n_letters = rng.gen_range(1..=3usize);
    let states: Vec<String> = (0..n_states).map(|i| format!("q{i}")).collect();
    let alphabet: Vec<String> = LETTERS[..n_letters].iter().map(|s| s.to_string()).collect();

    let mut initial: Vec<String> = states
        .iter()
        .filter(|_| rng.gen_bool(0.35))
        .cloned()
        .collect();
    if initial.is_empty() {
        initial.push(states[rng.gen_range(0..n_states)].clone());
    }
    let finals: Vec<String> = states
        .iter()
        .filter(|_| rng.gen_bool(0.4))
        .cloned()
        .collect();

    let mut translucent = Vec::new();
    for s in &states {
        let set: Vec<String> = alphabet
            .iter()
            .filter(|_| rng.gen_bool(0.35))
            .cloned()
            .collect();
        if !set.is_empty() {
            translucent.push((s.clone(), set));
        }
    }

    let mut transitions = Vec::new();
    for s in &states {
        for l in &alphabet {
            let n_targets = match rng.gen_range(0..100) {
                0..=44 => 0,
                45..=84 => 1,
                _ => 2usize.min(n_states),
            };
            for t in (0..n_states).choose_multiple(rng, n_targets) {
                transitions.push((s.clone(), l.clone(), states[t].clone()));
            }
        }
    }

    RawAutomaton {
        alphabet,
        states,
        initial,
        finals,
        translucent,
        transitions,
    }
    .validate()
    .expect("random machine is well-formed")
}

/// A random machine with no translucent letters anywhere, i.e. one that
/// should behave exactly like a classical NFA.
pub fn random_tau_empty_automaton(rng: &mut ChaCha8Rng) -> Automaton {
    drop_translucency(&random_automaton(rng))
}

pub fn random_word(a: &Automaton, rng: &mut ChaCha8Rng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let ids: Vec<_> = a.alphabet().ids().collect();
            ids[rng.gen_range(0..ids.len())]
        })
        .collect()
}

/// Textbook subset-construction NFA run: consume the word strictly left to
/// right, accept when some reachable state is final after the last letter.
pub fn nfa_accepts(a: &Automaton, w: &Word) -> bool {
    let mut current: BTreeSet<StateId> = a.initial().iter().copied().collect();
    for &letter in w.letters() {
        let mut next = BTreeSet::new();
        for &q in &current {
            next.extend(a.targets(q, letter).iter().copied());
        }
        current = next;
    }
    current.iter().any(|&q| a.is_final(q))
}

/// Membership in the in-order reference language: the word must split as
/// `σ·t` where `σ` drives the plain transition function from an initial to
/// a final state `f` and every letter of `t` is translucent for `f`. Every
/// machine's language has the same Parikh image as this regular language,
/// because an accepting computation consumes some `σ` (in consumption
/// order) and leaves some such `t` behind, and conversely `σ·t` itself is
/// accepted by always consuming the first remaining letter.
pub fn in_order_reference_member(a: &Automaton, w: &Word) -> bool {
    let letters = w.letters();
    let mut current: BTreeSet<StateId> = a.initial().iter().copied().collect();
    for k in 0..=letters.len() {
        for &q in &current {
            if a.is_final(q) && letters[k..].iter().all(|&l| a.translucent(q).contains(l)) {
                return true;
            }
        }
        if k < letters.len() {
            let mut next = BTreeSet::new();
            for &q in &current {
                next.extend(a.targets(q, letters[k]).iter().copied());
            }
            current = next;
        }
    }
    false
}
