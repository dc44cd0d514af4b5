//! Constructive results: binary union, the guarded union of disjoint
//! deterministic parts, and exhaustive search for small state-deterministic
//! machines.

use thiserror::Error;

use crate::alphabet::{Alphabet, Word};
use crate::automaton::{Automaton, RawAutomaton};
use crate::classify::{classify, VariantLabel};
use crate::engine::accepts;
use crate::langops::{all_words, candidate_count};

/// Why a binary union could not be built.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Error)]
pub enum UnionError {
    #[error("automata have different alphabets")]
    AlphabetMismatch,
}

/// Disjoint union of two automata over the same alphabet: states are
/// renamed apart with `1.`/`2.` prefixes, and `I`, `F`, `τ`, `δ` are
/// inherited componentwise. The machine may pick either component's initial
/// state, so it accepts exactly the union of the two languages.
pub fn union(a1: &Automaton, a2: &Automaton) -> Result<Automaton, UnionError> {
    if a1.alphabet() != a2.alphabet() {
        return Err(UnionError::AlphabetMismatch);
    }
    let mut raw = RawAutomaton {
        alphabet: a1.alphabet().tokens().map(str::to_string).collect(),
        ..RawAutomaton::default()
    };
    for (prefix, part) in [("1.", a1), ("2.", a2)] {
        let rename = |name: &str| format!("{prefix}{name}");
        let r = part.to_raw();
        raw.states.extend(r.states.iter().map(|s| rename(s)));
        raw.initial.extend(r.initial.iter().map(|s| rename(s)));
        raw.finals.extend(r.finals.iter().map(|s| rename(s)));
        raw.translucent.extend(
            r.translucent
                .into_iter()
                .map(|(s, letters)| (rename(&s), letters)),
        );
        raw.transitions.extend(
            r.transitions
                .into_iter()
                .map(|(from, letter, to)| (rename(&from), letter, rename(&to))),
        );
    }
    Ok(raw
        .validate()
        .expect("prefixed components are disjoint and were valid"))
}

/// One component of a guarded union.
#[derive(Clone, Copy)]
pub struct GuardedPart<'a> {
    /// The letter whose consumption commits to this part.
    pub trigger: &'a str,
    /// A machine with the DFAwtl profile.
    pub automaton: &'a Automaton,
    /// The state the part reaches after consuming its trigger.
    pub entry: &'a str,
}

/// Why a guarded union could not be built.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum GuardedUnionError {
    #[error("duplicate trigger symbol {0:?}")]
    DuplicateTrigger(String),
    #[error("part {0} is not a DFAwtl")]
    PartNotDfawtl(usize),
    #[error("parts use different alphabets")]
    AlphabetMismatch,
    #[error("trigger {0:?} is not an alphabet symbol")]
    UnknownTrigger(String),
    #[error("part {0} has no state {1:?}")]
    UnknownEntryState(usize, String),
    #[error("at least one part is required")]
    NoParts,
}

/// Builds a deterministic machine for a union of DFAwtl languages, guarded
/// by distinct trigger letters: a fresh initial state `q0` has the whole
/// alphabet translucent and, on consuming `trigger_i` (from anywhere in the
/// input), jumps into part `i` at its entry state. The parts are embedded
/// disjointly with `1.`, `2.`, … prefixes. The result always has a single
/// initial state and deterministic transitions, so it is a DFAwntl.
pub fn build_guarded_union_dfawntl(
    parts: &[GuardedPart<'_>],
) -> Result<Automaton, GuardedUnionError> {
    let first = parts.first().ok_or(GuardedUnionError::NoParts)?;
    let alphabet = first.automaton.alphabet();
    let mut triggers: Vec<&str> = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        if part.automaton.alphabet() != alphabet {
            return Err(GuardedUnionError::AlphabetMismatch);
        }
        if alphabet.lookup(part.trigger).is_none() {
            return Err(GuardedUnionError::UnknownTrigger(part.trigger.to_string()));
        }
        if triggers.contains(&part.trigger) {
            return Err(GuardedUnionError::DuplicateTrigger(part.trigger.to_string()));
        }
        triggers.push(part.trigger);
        if !classify(part.automaton)
            .labels
            .contains(&VariantLabel::Dfawtl)
        {
            return Err(GuardedUnionError::PartNotDfawtl(i));
        }
        if part.automaton.state_id(part.entry).is_none() {
            return Err(GuardedUnionError::UnknownEntryState(
                i,
                part.entry.to_string(),
            ));
        }
    }

    let mut raw = RawAutomaton {
        alphabet: alphabet.tokens().map(str::to_string).collect(),
        states: vec!["q0".to_string()],
        initial: vec!["q0".to_string()],
        translucent: vec![(
            "q0".to_string(),
            alphabet.tokens().map(str::to_string).collect(),
        )],
        ..RawAutomaton::default()
    };
    for (i, part) in parts.iter().enumerate() {
        let prefix = format!("{}.", i + 1);
        let rename = |name: &str| format!("{prefix}{name}");
        let r = part.automaton.to_raw();
        raw.states.extend(r.states.iter().map(|s| rename(s)));
        raw.finals.extend(r.finals.iter().map(|s| rename(s)));
        raw.translucent.extend(
            r.translucent
                .into_iter()
                .map(|(s, letters)| (rename(&s), letters)),
        );
        raw.transitions.extend(
            r.transitions
                .into_iter()
                .map(|(from, letter, to)| (rename(&from), letter, rename(&to))),
        );
        raw.transitions.push((
            "q0".to_string(),
            part.trigger.to_string(),
            rename(part.entry),
        ));
    }
    Ok(raw
        .validate()
        .expect("prefixed parts are disjoint and were valid"))
}

/// Shape restriction of the searched machines.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SearchStructure {
    /// `q0 → q1 → … → q_{k-1}` only.
    LineGraph,
    /// The line graph plus an optional edge from the last state back to any
    /// state (the canonical shape of state-deterministic machines).
    LineGraphWithBackEdge,
}

/// Default budget on candidate machines times test words.
pub const SEARCH_BUDGET: u128 = 100_000_000;

/// Parameters of an exhaustive state-deterministic search.
#[derive(Clone, Debug)]
pub struct SearchSpaceSpec {
    pub alphabet: Alphabet,
    pub max_states: usize,
    pub structure: SearchStructure,
    /// Candidates must match the target on every word up to this length.
    pub test_len: usize,
    pub budget: u128,
}

impl SearchSpaceSpec {
    pub fn new(alphabet: Alphabet, max_states: usize, test_len: usize) -> Self {
        SearchSpaceSpec {
            alphabet,
            max_states,
            structure: SearchStructure::LineGraphWithBackEdge,
            test_len,
            budget: SEARCH_BUDGET,
        }
    }
}

/// Caveats attached to every negative search result.
pub const SEARCH_CAVEATS: [&str; 2] = [
    "language match is verified only on words up to the test length",
    "only line-graph shapes (with an optional back edge) are enumerated",
];

/// Result of [`search_sfawtl`].
#[derive(Clone, Debug)]
pub enum SearchOutcome {
    /// The first candidate, in enumeration order, whose bounded language
    /// matches the target exactly.
    Found {
        automaton: Automaton,
        candidates_tried: u128,
    },
    /// No candidate matched. Evidence, not proof: see `caveats`.
    Exhausted {
        candidates: u128,
        max_states: usize,
        test_len: usize,
        caveats: [&'static str; 2],
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Error)]
pub enum SearchError {
    #[error(
        "search space of {candidates} candidates x {words} test words exceeds the budget {budget}"
    )]
    BudgetExceeded {
        candidates: u128,
        words: u128,
        budget: u128,
    },
    #[error("max_states must be at least 1")]
    EmptySpace,
}

/// Exhaustively enumerates every state-deterministic disjoint machine with
/// at most `max_states` states in the requested shape, in a fixed canonical
/// order, and returns the first whose language up to `test_len` equals the
/// target predicate's. Per state the choices are `τ(q) ⊆ Σ`, a set of read
/// letters disjoint from `τ(q)` (non-empty wherever a successor must be
/// reachable), and finality; the sole initial state is `q0`.
pub fn search_sfawtl(
    target: impl Fn(&Word) -> bool,
    spec: &SearchSpaceSpec,
) -> Result<SearchOutcome, SearchError> {
    if spec.max_states == 0 {
        return Err(SearchError::EmptySpace);
    }
    let m = spec.alphabet.len();
    let words = candidate_count(m, spec.test_len);
    let candidates = count_candidates(m, spec.max_states, spec.structure);
    let product = match (candidates, words) {
        (Some(c), Some(w)) => c.checked_mul(w),
        _ => None,
    };
    match product {
        Some(p) if p <= spec.budget => {}
        _ => {
            return Err(SearchError::BudgetExceeded {
                candidates: candidates.unwrap_or(u128::MAX),
                words: words.unwrap_or(u128::MAX),
                budget: spec.budget,
            })
        }
    }

    let expected: Vec<bool> = all_words(&spec.alphabet, spec.test_len)
        .map(|w| target(&w))
        .collect();

    // (τ, reads) choices for a state that must move on: reads is a
    // non-empty subset of the complement of τ.
    let full: u64 = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut reading: Vec<(u64, u64)> = Vec::new();
    for tau in 0..=full {
        let complement = full & !tau;
        for reads in 1..=full {
            if reads & !complement == 0 {
                reading.push((tau, reads));
            }
        }
        if tau == full {
            break;
        }
    }
    // Choices for a final line state without a back edge: no reads at all.
    let terminal: Vec<(u64, u64)> = (0..=full).map(|tau| (tau, 0)).collect();

    let mut tried: u128 = 0;
    for k in 1..=spec.max_states {
        let mut backs: Vec<Option<usize>> = vec![None];
        if spec.structure == SearchStructure::LineGraphWithBackEdge {
            backs.extend((0..k).map(Some));
        }
        for back in backs {
            let lists: Vec<&[(u64, u64)]> = (0..k)
                .map(|i| {
                    if i + 1 < k || back.is_some() {
                        reading.as_slice()
                    } else {
                        terminal.as_slice()
                    }
                })
                .collect();
            if lists.iter().any(|l| l.is_empty()) {
                continue;
            }
            let mut choice = vec![0usize; k];
            'candidates: loop {
                for finals in 0..(1u64 << k) {
                    tried += 1;
                    let cand = assemble(&spec.alphabet, k, back, &lists, &choice, finals);
                    if matches(&cand, &spec.alphabet, spec.test_len, &expected) {
                        debug_assert!({
                            let p = classify(&cand);
                            p.state_deterministic
                                && p.disjoint_translucency
                                && p.single_initial
                        });
                        return Ok(SearchOutcome::Found {
                            automaton: cand,
                            candidates_tried: tried,
                        });
                    }
                }
                // Advance the per-state odometer, rightmost state fastest.
                let mut i = k;
                loop {
                    if i == 0 {
                        break 'candidates;
                    }
                    i -= 1;
                    choice[i] += 1;
                    if choice[i] < lists[i].len() {
                        break;
                    }
                    choice[i] = 0;
                }
            }
        }
    }
    Ok(SearchOutcome::Exhausted {
        candidates: tried,
        max_states: spec.max_states,
        test_len: spec.test_len,
        caveats: SEARCH_CAVEATS,
    })
}

fn count_candidates(m: usize, max_states: usize, structure: SearchStructure) -> Option<u128> {
    let reading = 3u128.checked_pow(m as u32)?.checked_sub(2u128.pow(m as u32))?;
    let terminal = 2u128.checked_pow(m as u32)?;
    let mut total: u128 = 0;
    for k in 1..=max_states {
        let forward = reading.checked_pow((k - 1) as u32)?;
        let finals = 1u128.checked_shl(k as u32)?;
        let none = forward.checked_mul(terminal)?.checked_mul(finals)?;
        total = total.checked_add(none)?;
        if structure == SearchStructure::LineGraphWithBackEdge {
            let with_back = forward
                .checked_mul(reading)?
                .checked_mul(finals)?
                .checked_mul(k as u128)?;
            total = total.checked_add(with_back)?;
        }
    }
    Some(total)
}

fn assemble(
    alphabet: &Alphabet,
    k: usize,
    back: Option<usize>,
    lists: &[&[(u64, u64)]],
    choice: &[usize],
    finals: u64,
) -> Automaton {
    let name = |i: usize| format!("q{i}");
    let mut raw = RawAutomaton {
        alphabet: alphabet.tokens().map(str::to_string).collect(),
        states: (0..k).map(name).collect(),
        initial: vec![name(0)],
        ..RawAutomaton::default()
    };
    for i in 0..k {
        if finals & (1u64 << i) != 0 {
            raw.finals.push(name(i));
        }
        let (tau, reads) = lists[i][choice[i]];
        if tau != 0 {
            let letters = alphabet
                .ids()
                .filter(|id| tau & (1u64 << id.0) != 0)
                .map(|id| alphabet.token(id).to_string())
                .collect();
            raw.translucent.push((name(i), letters));
        }
        let successor = if i + 1 < k {
            Some(i + 1)
        } else {
            back
        };
        if let Some(succ) = successor {
            for id in alphabet.ids() {
                if reads & (1u64 << id.0) != 0 {
                    raw.transitions.push((
                        name(i),
                        alphabet.token(id).to_string(),
                        name(succ),
                    ));
                }
            }
        }
    }
    raw.validate().expect("searched candidates are well-formed")
}

fn matches(cand: &Automaton, alphabet: &Alphabet, test_len: usize, expected: &[bool]) -> bool {
    for (i, w) in all_words(alphabet, test_len).enumerate() {
        if accepts(cand, &w) != expected[i] {
            return false;
        }
    }
    true
}
