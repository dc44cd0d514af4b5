//! Built-in example machines, each paired with an independent membership
//! oracle, a short provenance note, and the classification it must satisfy.

use std::sync::OnceLock;

use thiserror::Error;

use crate::alphabet::{Alphabet, SymbolId, Word};
use crate::automaton::{Automaton, RawAutomaton};
use crate::classify::{classify, VariantLabel};
use crate::constructions::{build_guarded_union_dfawntl, GuardedPart};
use crate::engine::naive_accepts;
use crate::langops::{all_words, enumerate, BoundedLanguage, LangOpsError};

/// Membership reference for a corpus entry, independent of the engine.
#[derive(Clone)]
pub enum Oracle {
    /// Closed-form predicate deciding membership per word.
    Exact(fn(&Alphabet, &Word) -> bool),
    /// Property bundle over the whole bounded language, for entries whose
    /// language has no stated closed form.
    Properties(fn(&Automaton, &BoundedLanguage) -> Result<(), String>),
}

#[derive(Clone)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub automaton: Automaton,
    pub oracle: Oracle,
    /// Human-readable note on what the machine is.
    pub provenance: &'static str,
    /// Labels that classify() must include.
    pub expected_labels: Vec<VariantLabel>,
    /// Labels that classify() must not include.
    pub forbidden_labels: Vec<VariantLabel>,
    /// Length bound the entry is known to pass verification at.
    pub verified_bound: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum CorpusError {
    #[error("no corpus entry named {0:?}")]
    NotFound(String),
    #[error("corpus entry {name} failed its registration check: {detail}")]
    RegistrationFailed { name: &'static str, detail: String },
    #[error(transparent)]
    Language(#[from] LangOpsError),
}

/// Result of checking an entry against its oracle and expected labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum VerifyOutcome {
    Pass,
    LabelMismatch {
        missing: Vec<VariantLabel>,
        unexpected: Vec<VariantLabel>,
    },
    /// First word (in length-then-lexicographic order) where machine and
    /// oracle disagree.
    Counterexample { word: String, in_automaton: bool },
    PropertyViolation(String),
}

pub fn list_entries() -> Result<Vec<&'static str>, CorpusError> {
    Ok(registry()?.iter().map(|e| e.name).collect())
}

pub fn get_entry(name: &str) -> Result<CorpusEntry, CorpusError> {
    registry()?
        .iter()
        .find(|e| e.name == name)
        .cloned()
        .ok_or_else(|| CorpusError::NotFound(name.to_string()))
}

/// Checks the entry's classification against its expected and forbidden
/// labels, then its bounded language against its oracle.
pub fn verify_entry(name: &str, max_len: usize) -> Result<VerifyOutcome, CorpusError> {
    let entry = get_entry(name)?;
    let profile = classify(&entry.automaton);
    let missing: Vec<VariantLabel> = entry
        .expected_labels
        .iter()
        .filter(|l| !profile.labels.contains(l))
        .copied()
        .collect();
    let unexpected: Vec<VariantLabel> = entry
        .forbidden_labels
        .iter()
        .filter(|l| profile.labels.contains(l))
        .copied()
        .collect();
    if !missing.is_empty() || !unexpected.is_empty() {
        return Ok(VerifyOutcome::LabelMismatch { missing, unexpected });
    }
    let lang = enumerate(&entry.automaton, max_len)?;
    match entry.oracle {
        Oracle::Exact(pred) => {
            let al = entry.automaton.alphabet();
            for w in all_words(al, max_len) {
                let accepted = lang.contains(&w);
                if accepted != pred(al, &w) {
                    return Ok(VerifyOutcome::Counterexample {
                        word: al.format_word(&w),
                        in_automaton: accepted,
                    });
                }
            }
        }
        Oracle::Properties(check) => {
            if let Err(msg) = check(&entry.automaton, &lang) {
                return Ok(VerifyOutcome::PropertyViolation(msg));
            }
        }
    }
    Ok(VerifyOutcome::Pass)
}

static REGISTRY: OnceLock<Result<Vec<CorpusEntry>, CorpusError>> = OnceLock::new();

fn registry() -> Result<&'static [CorpusEntry], CorpusError> {
    match REGISTRY.get_or_init(build_registry) {
        Ok(entries) => Ok(entries.as_slice()),
        Err(e) => Err(e.clone()),
    }
}

fn strs(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn build_registry() -> Result<Vec<CorpusEntry>, CorpusError> {
    use VariantLabel::*;
    let classical = || vec![Nfawtl, Dfawtl, Nfawntl, Dfawntl];
    let state_det = || vec![Nfawtl, Dfawtl, Sfawtl, Nfawntl, Dfawntl];
    let all_six = || vec![NfaCompatible, Nfawtl, Dfawtl, Sfawtl, Nfawntl, Dfawntl];
    let relaxed_only = || vec![Nfawntl, Dfawntl];
    let not_relaxed_only = || vec![Nfawtl, Dfawtl, Sfawtl, NfaCompatible];

    let mut entries = vec![
        CorpusEntry {
            name: "ex1-Lab",
            automaton: pair_machine([("a", "b"), ("c", "d")]),
            oracle: Oracle::Exact(oracle_lab),
            provenance: "hub machine for L_ab = {w : |w|_a = |w|_b > 0 and |w|_c = |w|_d}",
            expected_labels: classical(),
            forbidden_labels: vec![Sfawtl, NfaCompatible],
            verified_bound: 8,
        },
        CorpusEntry {
            name: "ex1-Lac",
            automaton: pair_machine([("a", "c"), ("b", "d")]),
            oracle: Oracle::Exact(oracle_lac),
            provenance: "hub machine for L_ac = {w : |w|_a = |w|_c > 0 and |w|_b = |w|_d}",
            expected_labels: classical(),
            forbidden_labels: vec![Sfawtl, NfaCompatible],
            verified_bound: 8,
        },
        CorpusEntry {
            name: "ex1-Lad",
            automaton: pair_machine([("a", "d"), ("b", "c")]),
            oracle: Oracle::Exact(oracle_lad),
            provenance: "hub machine for L_ad = {w : |w|_a = |w|_d > 0 and |w|_b = |w|_c}",
            expected_labels: classical(),
            forbidden_labels: vec![Sfawtl, NfaCompatible],
            verified_bound: 8,
        },
        CorpusEntry {
            name: "sfawtl-dyck",
            automaton: dyck_machine(),
            oracle: Oracle::Exact(oracle_dyck),
            provenance: "two-state matcher for the Dyck language over {0,1}, 0 opening",
            expected_labels: state_det(),
            forbidden_labels: vec![NfaCompatible],
            verified_bound: 8,
        },
        CorpusEntry {
            name: "sfawtl-cycle-abcd",
            automaton: cycle_machine(),
            oracle: Oracle::Exact(oracle_cycle),
            provenance: "four-state round-robin eraser; equal letter counts with feasible erase order",
            expected_labels: state_det(),
            forbidden_labels: vec![NfaCompatible],
            verified_bound: 8,
        },
        CorpusEntry {
            name: "sfawtl-astar",
            automaton: loop_machine("a"),
            oracle: Oracle::Exact(oracle_astar),
            provenance: "single-state machine for a* over {a,b}",
            expected_labels: all_six(),
            forbidden_labels: vec![],
            verified_bound: 8,
        },
        CorpusEntry {
            name: "sfawtl-bstar",
            automaton: loop_machine("b"),
            oracle: Oracle::Exact(oracle_bstar),
            provenance: "single-state machine for b* over {a,b}",
            expected_labels: all_six(),
            forbidden_labels: vec![],
            verified_bound: 8,
        },
        CorpusEntry {
            name: "sfawtl-a-aaa",
            automaton: a_aaa_machine(),
            oracle: Oracle::Exact(oracle_a_aaa),
            provenance: "four-state line machine for {a, aaa}",
            expected_labels: all_six(),
            forbidden_labels: vec![],
            verified_bound: 8,
        },
        CorpusEntry {
            name: "sfawtl-ab-ba",
            automaton: ab_ba_machine(),
            oracle: Oracle::Exact(oracle_ab_ba),
            provenance: "three-state machine for {ab, ba}; a is translucent at the initial state",
            expected_labels: state_det(),
            forbidden_labels: vec![NfaCompatible],
            verified_bound: 8,
        },
        CorpusEntry {
            name: "ex4-dfawntl",
            automaton: ex4_machine(),
            oracle: Oracle::Properties(ex4_properties),
            provenance: "deterministic machine with non-disjoint translucency; accepts v c u words \
                         erased pairwise around the single c",
            expected_labels: relaxed_only(),
            forbidden_labels: not_relaxed_only(),
            verified_bound: 9,
        },
        CorpusEntry {
            name: "ex6-triple-union",
            automaton: ex6_machine(),
            oracle: Oracle::Exact(oracle_ex6),
            provenance: "guarded union of the three hub machines: L_ab or L_ac or L_ad",
            expected_labels: relaxed_only(),
            forbidden_labels: not_relaxed_only(),
            verified_bound: 8,
        },
        CorpusEntry {
            name: "fig1-ratio",
            automaton: fig1_machine(),
            oracle: Oracle::Exact(oracle_fig1),
            provenance: "debt-counter product for {w over {a,b} : |w|_a = |w|_b or 2|w|_a = |w|_b}",
            expected_labels: relaxed_only(),
            forbidden_labels: not_relaxed_only(),
            verified_bound: 10,
        },
    ];

    // fig1-ratio is a reconstruction, not a transcribed table: it must agree
    // with its oracle on every word up to length 10 before it is exposed.
    {
        let fig1 = entries.last_mut().expect("registry is non-empty");
        let failed = |detail: String| CorpusError::RegistrationFailed {
            name: "fig1-ratio",
            detail,
        };
        let lang = enumerate(&fig1.automaton, 10).map_err(|e| failed(e.to_string()))?;
        let al = fig1.automaton.alphabet();
        for w in all_words(al, 10) {
            let accepted = lang.contains(&w);
            if accepted != oracle_fig1(al, &w) {
                return Err(failed(format!(
                    "machine and oracle disagree on {:?} (machine: {accepted})",
                    al.format_word(&w)
                )));
            }
        }
    }

    Ok(entries)
}

// ---------------------------------------------------------------- machines

const PAIR_ALPHABET: [&str; 4] = ["a", "b", "c", "d"];

/// The hub construction: from `q0` erase the first `a`, then its partner
/// from anywhere; afterwards the hub `q` erases any letter and its state
/// `qx` erases that letter's partner from anywhere, back to the hub.
fn pair_machine(pairs: [(&'static str, &'static str); 2]) -> Automaton {
    let partner = |x: &str| -> &str {
        for (u, v) in pairs {
            if u == x {
                return v;
            }
            if v == x {
                return u;
            }
        }
        unreachable!("pairs cover the alphabet")
    };
    let mut raw = RawAutomaton {
        alphabet: strs(&PAIR_ALPHABET),
        states: strs(&["q0", "q", "qa", "qb", "qc", "qd"]),
        initial: strs(&["q0"]),
        finals: strs(&["q"]),
        ..RawAutomaton::default()
    };
    let all_but = |x: &str| {
        PAIR_ALPHABET
            .iter()
            .filter(|&&y| y != x)
            .map(|y| y.to_string())
            .collect::<Vec<_>>()
    };
    raw.translucent.push(("q0".into(), all_but("a")));
    raw.transitions.push(("q0".into(), "a".into(), "qa".into()));
    for x in PAIR_ALPHABET {
        raw.transitions.push(("q".into(), x.into(), format!("q{x}")));
        raw.translucent.push((format!("q{x}"), all_but(partner(x))));
        raw.transitions
            .push((format!("q{x}"), partner(x).into(), "q".into()));
    }
    raw.validate().expect("pair machine is well-formed")
}

fn dyck_machine() -> Automaton {
    RawAutomaton {
        alphabet: strs(&["0", "1"]),
        states: strs(&["q0", "q1"]),
        initial: strs(&["q0"]),
        finals: strs(&["q0"]),
        translucent: vec![("q1".into(), strs(&["0"]))],
        transitions: vec![
            ("q0".into(), "0".into(), "q1".into()),
            ("q1".into(), "1".into(), "q0".into()),
        ],
    }
    .validate()
    .expect("dyck machine is well-formed")
}

fn cycle_machine() -> Automaton {
    RawAutomaton {
        alphabet: strs(&PAIR_ALPHABET),
        states: strs(&["q0", "q1", "q2", "q3"]),
        initial: strs(&["q0"]),
        finals: strs(&["q0"]),
        translucent: vec![
            ("q1".into(), strs(&["a", "c", "d"])),
            ("q2".into(), strs(&["a", "b", "d"])),
            ("q3".into(), strs(&["a", "b", "c"])),
        ],
        transitions: vec![
            ("q0".into(), "a".into(), "q1".into()),
            ("q1".into(), "b".into(), "q2".into()),
            ("q2".into(), "c".into(), "q3".into()),
            ("q3".into(), "d".into(), "q0".into()),
        ],
    }
    .validate()
    .expect("cycle machine is well-formed")
}

fn loop_machine(letter: &str) -> Automaton {
    RawAutomaton {
        alphabet: strs(&["a", "b"]),
        states: strs(&["q0"]),
        initial: strs(&["q0"]),
        finals: strs(&["q0"]),
        transitions: vec![("q0".into(), letter.into(), "q0".into())],
        ..RawAutomaton::default()
    }
    .validate()
    .expect("loop machine is well-formed")
}

fn a_aaa_machine() -> Automaton {
    RawAutomaton {
        alphabet: strs(&["a"]),
        states: strs(&["q0", "q1", "q2", "q3"]),
        initial: strs(&["q0"]),
        finals: strs(&["q1", "q3"]),
        transitions: vec![
            ("q0".into(), "a".into(), "q1".into()),
            ("q1".into(), "a".into(), "q2".into()),
            ("q2".into(), "a".into(), "q3".into()),
        ],
        ..RawAutomaton::default()
    }
    .validate()
    .expect("a-aaa machine is well-formed")
}

fn ab_ba_machine() -> Automaton {
    RawAutomaton {
        alphabet: strs(&["a", "b"]),
        states: strs(&["q0", "q1", "q2"]),
        initial: strs(&["q0"]),
        finals: strs(&["q2"]),
        translucent: vec![("q0".into(), strs(&["a"]))],
        transitions: vec![
            ("q0".into(), "b".into(), "q1".into()),
            ("q1".into(), "a".into(), "q2".into()),
        ],
    }
    .validate()
    .expect("ab-ba machine is well-formed")
}

fn ex4_machine() -> Automaton {
    RawAutomaton {
        alphabet: strs(&["a", "b", "c"]),
        states: strs(&["q0", "qa", "qb", "qc"]),
        initial: strs(&["q0"]),
        finals: strs(&["qc"]),
        translucent: vec![
            ("qa".into(), strs(&["a", "b", "c"])),
            ("qb".into(), strs(&["a", "b", "c"])),
        ],
        transitions: vec![
            ("q0".into(), "a".into(), "qa".into()),
            ("q0".into(), "b".into(), "qb".into()),
            ("q0".into(), "c".into(), "qc".into()),
            ("qa".into(), "b".into(), "q0".into()),
            ("qb".into(), "a".into(), "q0".into()),
        ],
    }
    .validate()
    .expect("ex4 machine is well-formed")
}

fn ex6_machine() -> Automaton {
    let lab = pair_machine([("a", "b"), ("c", "d")]);
    let lac = pair_machine([("a", "c"), ("b", "d")]);
    let lad = pair_machine([("a", "d"), ("b", "c")]);
    build_guarded_union_dfawntl(&[
        GuardedPart {
            trigger: "b",
            automaton: &lab,
            entry: "qb",
        },
        GuardedPart {
            trigger: "c",
            automaton: &lac,
            entry: "qc",
        },
        GuardedPart {
            trigger: "d",
            automaton: &lad,
            entry: "qd",
        },
    ])
    .expect("the three hub machines are valid guarded parts")
}

// Windows of the two debt counters in fig1. Counter one tracks
// |consumed|_a - |consumed|_b, counter two tracks 2|consumed|_a -
// |consumed|_b; a counter that leaves its window dies. The slack absorbs
// forced consumptions at final states (where nothing is translucent).
const FIG1_W1: (i64, i64) = (-3, 3);
const FIG1_W2: (i64, i64) = (-3, 6);

fn fig1_machine() -> Automaton {
    fn window(w: (i64, i64)) -> Vec<Option<i64>> {
        (w.0..=w.1).map(Some).chain([None]).collect()
    }
    fn step(v: Option<i64>, delta: i64, w: (i64, i64)) -> Option<i64> {
        v.and_then(|d| {
            let next = d + delta;
            (w.0..=w.1).contains(&next).then_some(next)
        })
    }
    fn name(o1: Option<i64>, o2: Option<i64>) -> String {
        let part = |prefix: &str, v: Option<i64>| match v {
            Some(d) => format!("{prefix}{d}"),
            None => format!("{prefix}x"),
        };
        format!("{}.{}", part("p", o1), part("t", o2))
    }

    let mut raw = RawAutomaton {
        alphabet: strs(&["a", "b"]),
        initial: vec![name(Some(0), Some(0))],
        ..RawAutomaton::default()
    };
    for o1 in window(FIG1_W1) {
        for o2 in window(FIG1_W2) {
            if o1.is_none() && o2.is_none() {
                continue;
            }
            let state = name(o1, o2);
            raw.states.push(state.clone());
            if o1 == Some(0) || o2 == Some(0) {
                raw.finals.push(state.clone());
            } else {
                raw.translucent.push((state.clone(), strs(&["a", "b"])));
            }
            for (letter, d1, d2) in [("a", 1, 2), ("b", -1, -1)] {
                let n1 = step(o1, d1, FIG1_W1);
                let n2 = step(o2, d2, FIG1_W2);
                if n1.is_none() && n2.is_none() {
                    continue;
                }
                raw.transitions
                    .push((state.clone(), letter.into(), name(n1, n2)));
            }
        }
    }
    raw.validate().expect("fig1 machine is well-formed")
}

// ----------------------------------------------------------------- oracles

fn count_of(al: &Alphabet, w: &Word, token: &str) -> usize {
    match al.lookup(token) {
        Some(id) => w.letters().iter().filter(|&&l| l == id).count(),
        None => 0,
    }
}

fn positive_pair_condition(
    al: &Alphabet,
    w: &Word,
    primary: (&str, &str),
    secondary: (&str, &str),
) -> bool {
    let p0 = count_of(al, w, primary.0);
    let p1 = count_of(al, w, primary.1);
    let s0 = count_of(al, w, secondary.0);
    let s1 = count_of(al, w, secondary.1);
    p0 == p1 && p0 > 0 && s0 == s1
}

fn oracle_lab(al: &Alphabet, w: &Word) -> bool {
    positive_pair_condition(al, w, ("a", "b"), ("c", "d"))
}

fn oracle_lac(al: &Alphabet, w: &Word) -> bool {
    positive_pair_condition(al, w, ("a", "c"), ("b", "d"))
}

fn oracle_lad(al: &Alphabet, w: &Word) -> bool {
    positive_pair_condition(al, w, ("a", "d"), ("b", "c"))
}

fn oracle_ex6(al: &Alphabet, w: &Word) -> bool {
    oracle_lab(al, w) || oracle_lac(al, w) || oracle_lad(al, w)
}

fn oracle_dyck(al: &Alphabet, w: &Word) -> bool {
    let open = al.lookup("0").expect("alphabet has 0");
    let mut balance: i64 = 0;
    for &l in w.letters() {
        balance += if l == open { 1 } else { -1 };
        if balance < 0 {
            return false;
        }
    }
    balance == 0
}

/// Equal counts of all four letters, and the erase order is feasible: for
/// every round i, the i-th a occurs before the i-th b, c and d.
fn oracle_cycle(al: &Alphabet, w: &Word) -> bool {
    let mut positions: [Vec<usize>; 4] = Default::default();
    for (i, &l) in w.letters().iter().enumerate() {
        let slot = PAIR_ALPHABET
            .iter()
            .position(|t| al.lookup(t) == Some(l))
            .expect("letter is one of a,b,c,d");
        positions[slot].push(i);
    }
    let n = positions[0].len();
    if positions.iter().any(|p| p.len() != n) {
        return false;
    }
    (0..n).all(|i| (1..4).all(|s| positions[0][i] < positions[s][i]))
}

fn oracle_astar(al: &Alphabet, w: &Word) -> bool {
    let a = al.lookup("a").expect("alphabet has a");
    w.letters().iter().all(|&l| l == a)
}

fn oracle_bstar(al: &Alphabet, w: &Word) -> bool {
    let b = al.lookup("b").expect("alphabet has b");
    w.letters().iter().all(|&l| l == b)
}

fn oracle_a_aaa(al: &Alphabet, w: &Word) -> bool {
    oracle_astar(al, w) && (w.len() == 1 || w.len() == 3)
}

fn oracle_ab_ba(al: &Alphabet, w: &Word) -> bool {
    let a = al.lookup("a").expect("alphabet has a");
    let b = al.lookup("b").expect("alphabet has b");
    let l = w.letters();
    l.len() == 2 && ((l[0] == a && l[1] == b) || (l[0] == b && l[1] == a))
}

fn oracle_fig1(al: &Alphabet, w: &Word) -> bool {
    let na = count_of(al, w, "a");
    let nb = count_of(al, w, "b");
    na == nb || 2 * na == nb
}

/// Property bundle for the ex4 language (no closed form is asserted):
/// every accepted word is v c u with |w|_a = |w|_b, exactly one c and
/// |v| >= |u|; on the |v| = |u| slice membership is exactly the cross-count
/// condition |v|_a = |u|_b and |v|_b = |u|_a; and the engine agrees with
/// the naive reference on all short words.
fn ex4_properties(a: &Automaton, lang: &BoundedLanguage) -> Result<(), String> {
    let al = a.alphabet();
    let lookup = |t: &str| al.lookup(t).expect("alphabet has a,b,c");
    let (ia, ib, ic) = (lookup("a"), lookup("b"), lookup("c"));
    let count = |letters: &[SymbolId], id: SymbolId| letters.iter().filter(|&&l| l == id).count();

    for w in &lang.words {
        let letters = w.letters();
        let (na, nb) = (count(letters, ia), count(letters, ib));
        if na != nb {
            return Err(format!(
                "accepted word {:?} has {na} a's but {nb} b's",
                al.format_word(w)
            ));
        }
        if count(letters, ic) != 1 {
            return Err(format!(
                "accepted word {:?} does not contain exactly one c",
                al.format_word(w)
            ));
        }
        let cpos = letters.iter().position(|&l| l == ic).expect("one c");
        if cpos < letters.len() - 1 - cpos {
            return Err(format!(
                "accepted word {:?} has a shorter part before the c than after it",
                al.format_word(w)
            ));
        }
    }

    for w in all_words(al, lang.max_len) {
        let letters = w.letters();
        if count(letters, ic) != 1 {
            continue;
        }
        let cpos = letters.iter().position(|&l| l == ic).expect("one c");
        let (v, u) = (&letters[..cpos], &letters[cpos + 1..]);
        if v.len() != u.len() {
            continue;
        }
        let cross = count(v, ia) == count(u, ib) && count(v, ib) == count(u, ia);
        if lang.contains(&w) != cross {
            return Err(format!(
                "word {:?} with equal parts around the c violates the cross-count rule \
                 (accepted: {}, cross-count holds: {cross})",
                al.format_word(&w),
                lang.contains(&w)
            ));
        }
    }

    for w in all_words(al, lang.max_len.min(7)) {
        let reference = naive_accepts(a, &w).map_err(|e| e.to_string())?;
        if reference != lang.contains(&w) {
            return Err(format!(
                "engine and naive reference disagree on {:?}",
                al.format_word(&w)
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::accepts;

    #[test]
    fn registry_has_the_twelve_pinned_names() {
        assert_eq!(
            list_entries().unwrap(),
            vec![
                "ex1-Lab",
                "ex1-Lac",
                "ex1-Lad",
                "sfawtl-dyck",
                "sfawtl-cycle-abcd",
                "sfawtl-astar",
                "sfawtl-bstar",
                "sfawtl-a-aaa",
                "sfawtl-ab-ba",
                "ex4-dfawntl",
                "ex6-triple-union",
                "fig1-ratio",
            ]
        );
    }

    #[test]
    fn unknown_name_is_not_found() {
        match get_entry("nope") {
            Err(CorpusError::NotFound(n)) => assert_eq!(n, "nope"),
            Err(other) => panic!("expected NotFound, got {other:?}"),
            Ok(_) => panic!("expected NotFound"),
        }
        assert!(matches!(
            verify_entry("nope", 3),
            Err(CorpusError::NotFound(_))
        ));
    }

    #[test]
    fn every_entry_verifies_at_a_small_bound() {
        for name in list_entries().unwrap() {
            assert_eq!(
                verify_entry(name, 5).unwrap(),
                VerifyOutcome::Pass,
                "entry {name}"
            );
        }
    }

    #[test]
    fn entry_shapes_match_their_descriptions() {
        assert_eq!(get_entry("ex1-Lab").unwrap().automaton.num_states(), 6);
        assert_eq!(get_entry("sfawtl-dyck").unwrap().automaton.num_states(), 2);
        assert_eq!(
            get_entry("ex6-triple-union").unwrap().automaton.num_states(),
            19
        );
        let fig1 = get_entry("fig1-ratio").unwrap().automaton;
        assert_eq!(fig1.state_name(fig1.initial()[0]), "p0.t0");
    }

    #[test]
    fn a_aaa_language_is_exactly_a_and_aaa() {
        let e = get_entry("sfawtl-a-aaa").unwrap();
        let lang = enumerate(&e.automaton, 8).unwrap();
        let words: Vec<String> = lang
            .words
            .iter()
            .map(|w| e.automaton.alphabet().format_word(w))
            .collect();
        assert_eq!(words, vec!["a", "aaa"]);
    }

    #[test]
    fn ab_ba_language_is_exactly_the_two_words() {
        let e = get_entry("sfawtl-ab-ba").unwrap();
        let lang = enumerate(&e.automaton, 4).unwrap();
        let words: Vec<String> = lang
            .words
            .iter()
            .map(|w| e.automaton.alphabet().format_word(w))
            .collect();
        assert_eq!(words, vec!["ab", "ba"]);
    }

    #[test]
    fn fig1_spot_checks() {
        let e = get_entry("fig1-ratio").unwrap();
        let al = e.automaton.alphabet().clone();
        for (word, member) in [
            ("", true),
            ("ab", true),
            ("ba", true),
            ("abb", true),
            ("bab", true),
            ("abbbaa", true),
            ("aabbbb", true),
            ("a", false),
            ("b", false),
            ("aab", false),
            ("abbb", false),
        ] {
            let w = al.parse_word(word).unwrap();
            assert_eq!(accepts(&e.automaton, &w), member, "word {word:?}");
        }
    }

    #[test]
    fn ex4_accepts_around_the_c_pivot() {
        let e = get_entry("ex4-dfawntl").unwrap();
        let al = e.automaton.alphabet().clone();
        for (word, member) in [
            ("c", true),
            ("abc", true),
            ("acb", true),
            ("abcba", true),
            ("abcab", true),
            ("cab", false),
            ("acbab", false),
            ("abcc", false),
        ] {
            let w = al.parse_word(word).unwrap();
            assert_eq!(accepts(&e.automaton, &w), member, "word {word:?}");
        }
    }

    #[test]
    fn cycle_oracle_requires_feasible_order() {
        let e = get_entry("sfawtl-cycle-abcd").unwrap();
        let al = e.automaton.alphabet().clone();
        let member = |s: &str| oracle_cycle(&al, &al.parse_word(s).unwrap());
        assert!(member(""));
        assert!(member("adcb"));
        assert!(member("abcd"));
        assert!(member("aaddccbb"));
        assert!(!member("dcba"));
        assert!(!member("abc"));
        assert!(!member("badc"));
    }
}
