//! Operational semantics: eligible positions, the step relation, the
//! acceptance search, and an independent naive oracle.
//!
//! A computation step erases one letter occurrence: in state `q` the
//! machine may erase the occurrence at (1-based) position `i` of the
//! remaining word when every letter before `i` is translucent for `q` and
//! `δ(q, w[i])` is non-empty. A configuration accepts when its state is
//! final and every remaining letter is translucent for it (the head walks
//! through the translucent suffix, reaches the end of the tape and halts);
//! accepting configurations are terminal. With disjoint translucency this
//! reduces to the classical rule: erase the first non-translucent letter.

use std::collections::HashSet;

use thiserror::Error;

use crate::alphabet::{SymbolId, Word};
use crate::automaton::{Automaton, StateId};

/// A point of a computation: current state plus remaining tape word.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Configuration {
    pub state: StateId,
    pub remaining: Word,
}

/// One erase step.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Step {
    pub from_state: StateId,
    /// 1-based position into the remaining word before erasure.
    pub erased_position: usize,
    pub erased_letter: SymbolId,
    pub to_state: StateId,
}

/// One accepting computation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Trace {
    pub initial_state: StateId,
    pub steps: Vec<Step>,
    pub accepted: bool,
}

/// Word-length limit for [`naive_accepts`].
pub const NAIVE_LENGTH_BOUND: usize = 10;

/// The word is too long for the unmemoized naive search.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Error)]
#[error("word of length {word_len} exceeds the naive-search bound {bound}")]
pub struct BoundExceeded {
    pub word_len: usize,
    pub bound: usize,
}

/// Every erasable position of the configuration, ascending: the 1-based
/// positions `i` such that all letters before `i` are translucent for the
/// current state and `δ(state, w[i])` is non-empty.
pub fn eligible_positions(a: &Automaton, c: &Configuration) -> Vec<(usize, SymbolId)> {
    let translucent = a.translucent(c.state);
    let mut out = Vec::new();
    for (i, &x) in c.remaining.letters().iter().enumerate() {
        if !a.targets(c.state, x).is_empty() {
            out.push((i + 1, x));
        }
        if !translucent.contains(x) {
            // Positions beyond a non-translucent letter are unreachable.
            break;
        }
    }
    out
}

/// True when the configuration halts by accepting: its state is final and
/// every remaining letter is translucent for it. The empty remainder is
/// covered for any state, so `(q ∈ F, λ)` always accepts.
pub fn is_accepting_config(a: &Automaton, c: &Configuration) -> bool {
    let translucent = a.translucent(c.state);
    a.is_final(c.state)
        && c.remaining
            .letters()
            .iter()
            .all(|&x| translucent.contains(x))
}

/// All single-step continuations, ordered by (position, target ordinal).
pub fn successors(a: &Automaton, c: &Configuration) -> Vec<(Step, Configuration)> {
    let mut out = Vec::new();
    for (pos, letter) in eligible_positions(a, c) {
        for &p in a.targets(c.state, letter) {
            let step = Step {
                from_state: c.state,
                erased_position: pos,
                erased_letter: letter,
                to_state: p,
            };
            let next = Configuration {
                state: p,
                remaining: c.remaining.without(pos - 1),
            };
            out.push((step, next));
        }
    }
    out
}

/// True when some computation from some initial state reaches an accepting
/// configuration. Depth-first search over the configuration graph; failed
/// `(state, remaining)` pairs are memoized, and termination is guaranteed
/// because every step shortens the remaining word.
pub fn accepts(a: &Automaton, w: &Word) -> bool {
    let mut failed: HashSet<(StateId, Word)> = HashSet::new();
    a.initial().iter().any(|&q0| {
        search(
            a,
            &Configuration {
                state: q0,
                remaining: w.clone(),
            },
            &mut failed,
        )
    })
}

fn search(a: &Automaton, c: &Configuration, failed: &mut HashSet<(StateId, Word)>) -> bool {
    let key = (c.state, c.remaining.clone());
    if failed.contains(&key) {
        return false;
    }
    if is_accepting_config(a, c) {
        return true;
    }
    for (_, next) in successors(a, c) {
        if search(a, &next, failed) {
            return true;
        }
    }
    failed.insert(key);
    false
}

/// The first accepting trace in depth-first order (initial states by
/// ordinal, then successor order), or `None` iff the word is rejected.
/// Deterministic given the automaton's declaration orders.
pub fn first_trace(a: &Automaton, w: &Word) -> Option<Trace> {
    let mut failed: HashSet<(StateId, Word)> = HashSet::new();
    for &q0 in a.initial() {
        let mut steps = Vec::new();
        let start = Configuration {
            state: q0,
            remaining: w.clone(),
        };
        if trace_search(a, &start, &mut steps, &mut failed) {
            return Some(Trace {
                initial_state: q0,
                steps,
                accepted: true,
            });
        }
    }
    None
}

fn trace_search(
    a: &Automaton,
    c: &Configuration,
    steps: &mut Vec<Step>,
    failed: &mut HashSet<(StateId, Word)>,
) -> bool {
    let key = (c.state, c.remaining.clone());
    if failed.contains(&key) {
        return false;
    }
    if is_accepting_config(a, c) {
        return true;
    }
    for (step, next) in successors(a, c) {
        steps.push(step);
        if trace_search(a, &next, steps, failed) {
            return true;
        }
        steps.pop();
    }
    failed.insert(key);
    false
}

/// Same contract as [`accepts`], re-implemented as plain recursion over the
/// step rules with no memoization and no shared code beyond the automaton
/// accessors. Serves as an independent differential oracle; rejects words
/// longer than [`NAIVE_LENGTH_BOUND`].
pub fn naive_accepts(a: &Automaton, w: &Word) -> Result<bool, BoundExceeded> {
    naive_accepts_with_bound(a, w, NAIVE_LENGTH_BOUND)
}

/// [`naive_accepts`] with an explicit length bound.
pub fn naive_accepts_with_bound(
    a: &Automaton,
    w: &Word,
    bound: usize,
) -> Result<bool, BoundExceeded> {
    if w.len() > bound {
        return Err(BoundExceeded {
            word_len: w.len(),
            bound,
        });
    }
    Ok(a.initial()
        .iter()
        .any(|&q0| naive_run(a, q0, w.letters())))
}

fn naive_run(a: &Automaton, q: StateId, remaining: &[SymbolId]) -> bool {
    if a.is_final(q)
        && remaining.iter().all(|&x| a.translucent(q).contains(x))
    {
        return true;
    }
    for i in 0..remaining.len() {
        let prefix_translucent = remaining[..i]
            .iter()
            .all(|&x| a.translucent(q).contains(x));
        if !prefix_translucent {
            continue;
        }
        for &p in a.targets(q, remaining[i]) {
            let mut next = remaining.to_vec();
            next.remove(i);
            if naive_run(a, p, &next) {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn entry(name: &str) -> Automaton {
        corpus::get_entry(name).unwrap().automaton
    }

    fn config(a: &Automaton, state: &str, word: &str) -> Configuration {
        Configuration {
            state: a.state_id(state).unwrap(),
            remaining: a.alphabet().parse_word(word).unwrap(),
        }
    }

    fn positions(a: &Automaton, state: &str, word: &str) -> Vec<(usize, String)> {
        eligible_positions(a, &config(a, state, word))
            .into_iter()
            .map(|(i, x)| (i, a.alphabet().token(x).to_string()))
            .collect()
    }

    #[test]
    fn eligible_positions_with_overlap_sees_every_occurrence() {
        let a = entry("ex4-dfawntl");
        assert_eq!(
            positions(&a, "qa", "abcb"),
            vec![(2, "b".to_string()), (4, "b".to_string())]
        );
    }

    #[test]
    fn eligible_positions_disjoint_sees_first_visible_letter() {
        let a = entry("ex1-Lab");
        assert_eq!(positions(&a, "q0", "bca"), vec![(3, "a".to_string())]);
        assert_eq!(positions(&a, "q0", ""), vec![]);
    }

    #[test]
    fn accepting_configs() {
        let ex4 = entry("ex4-dfawntl");
        assert!(is_accepting_config(&ex4, &config(&ex4, "qc", "")));
        assert!(!is_accepting_config(&ex4, &config(&ex4, "q0", "")));
        let ex1 = entry("ex1-Lab");
        // Fails on the state, not on translucency: "cd" is all-translucent
        // for qa, but qa is not final.
        assert!(!is_accepting_config(&ex1, &config(&ex1, "qa", "cd")));
        // A final state accepts any all-translucent remainder.
        assert!(is_accepting_config(&ex1, &config(&ex1, "q", "")));
    }

    #[test]
    fn successor_lists_are_ordered() {
        let ex4 = entry("ex4-dfawntl");
        let succs = successors(&ex4, &config(&ex4, "q0", "abc"));
        assert_eq!(succs.len(), 1);
        assert_eq!(succs[0].0.erased_position, 1);
        assert_eq!(succs[0].1.state, ex4.state_id("qa").unwrap());
        assert_eq!(
            ex4.alphabet().format_word(&succs[0].1.remaining),
            "bc"
        );

        let two = successors(&ex4, &config(&ex4, "qa", "bcb"));
        assert_eq!(two.len(), 2);
        assert_eq!(
            (two[0].0.erased_position, two[1].0.erased_position),
            (1, 3)
        );
        assert!(two
            .iter()
            .all(|(s, _)| s.to_state == ex4.state_id("q0").unwrap()));

        assert!(successors(&ex4, &config(&ex4, "q0", "")).is_empty());
    }

    #[test]
    fn accepts_examples() {
        let ex1 = entry("ex1-Lab");
        let parse = |s: &str| ex1.alphabet().parse_word(s).unwrap();
        assert!(accepts(&ex1, &parse("ba")));
        assert!(accepts(&ex1, &parse("ab")));
        assert!(!accepts(&ex1, &parse("")));
        assert!(!accepts(&ex1, &parse("abc")));
        assert!(accepts(&ex1, &parse("dabc")));

        let dyck = entry("sfawtl-dyck");
        assert!(!accepts(&dyck, &dyck.alphabet().parse_word("10").unwrap()));
        assert!(accepts(&dyck, &dyck.alphabet().parse_word("0101").unwrap()));

        let ex4 = entry("ex4-dfawntl");
        assert!(!accepts(&ex4, &ex4.alphabet().parse_word("cab").unwrap()));
        assert!(accepts(&ex4, &ex4.alphabet().parse_word("abc").unwrap()));

        // Empty word: accepted exactly when some initial state is final.
        let dyck_lambda = Word::empty();
        assert!(accepts(&dyck, &dyck_lambda));
    }

    #[test]
    fn first_trace_is_the_pinned_depth_first_one() {
        let ex4 = entry("ex4-dfawntl");
        let t = first_trace(&ex4, &ex4.alphabet().parse_word("abc").unwrap()).unwrap();
        let shown: Vec<(String, usize, String, String)> = t
            .steps
            .iter()
            .map(|s| {
                (
                    ex4.state_name(s.from_state).to_string(),
                    s.erased_position,
                    ex4.alphabet().token(s.erased_letter).to_string(),
                    ex4.state_name(s.to_state).to_string(),
                )
            })
            .collect();
        assert_eq!(
            shown,
            vec![
                ("q0".into(), 1, "a".into(), "qa".into()),
                ("qa".into(), 1, "b".into(), "q0".into()),
                ("q0".into(), 1, "c".into(), "qc".into()),
            ]
        );
        assert!(t.accepted);

        let ex1 = entry("ex1-Lab");
        let t = first_trace(&ex1, &ex1.alphabet().parse_word("ab").unwrap()).unwrap();
        let shown: Vec<(String, String)> = t
            .steps
            .iter()
            .map(|s| {
                (
                    ex1.alphabet().token(s.erased_letter).to_string(),
                    ex1.state_name(s.to_state).to_string(),
                )
            })
            .collect();
        assert_eq!(
            shown,
            vec![("a".into(), "qa".into()), ("b".into(), "q".into())]
        );

        assert!(first_trace(&ex1, &ex1.alphabet().parse_word("a").unwrap()).is_none());
    }

    #[test]
    fn naive_agrees_on_small_words_and_enforces_its_bound() {
        let ex4 = entry("ex4-dfawntl");
        for text in ["", "c", "abc", "bca", "cab", "abcba", "aabbc", "ccc"] {
            let w = ex4.alphabet().parse_word(text).unwrap();
            assert_eq!(
                accepts(&ex4, &w),
                naive_accepts(&ex4, &w).unwrap(),
                "word {text:?}"
            );
        }
        let long = ex4.alphabet().parse_word("aaaaabbbbbc").unwrap();
        assert_eq!(
            naive_accepts(&ex4, &long),
            Err(BoundExceeded {
                word_len: 11,
                bound: NAIVE_LENGTH_BOUND
            })
        );
        assert!(naive_accepts_with_bound(&ex4, &long, 11).unwrap());
    }
}
