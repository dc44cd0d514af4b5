//! Structural classification into the model variants.

use std::collections::BTreeSet;
use std::fmt;

use crate::automaton::Automaton;

/// Model variant labels. The `Ord` derived from declaration order is the
/// canonical printing order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VariantLabel {
    /// All translucency sets are empty: the machine is a plain NFA over the
    /// same transition table.
    NfaCompatible,
    Nfawtl,
    Dfawtl,
    Sfawtl,
    Nfawntl,
    Dfawntl,
}

impl fmt::Display for VariantLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VariantLabel::NfaCompatible => "NFA-compatible",
            VariantLabel::Nfawtl => "NFAwtl",
            VariantLabel::Dfawtl => "DFAwtl",
            VariantLabel::Sfawtl => "SFAwtl",
            VariantLabel::Nfawntl => "NFAwntl",
            VariantLabel::Dfawntl => "DFAwntl",
        })
    }
}

/// Structural flags of an automaton and the variant labels they imply.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VariantProfile {
    /// `|I| = 1`.
    pub single_initial: bool,
    /// `|δ(q, a)| ≤ 1` for every state and letter.
    pub deterministic_transitions: bool,
    /// `a ∈ τ(q)` implies `δ(q, a) = ∅`: a letter is never both translucent
    /// and transition-enabled in the same state.
    pub disjoint_translucency: bool,
    /// `|⋃_a δ(q, a)| ≤ 1` for every state: the successor state is
    /// input-independent.
    pub state_deterministic: bool,
    pub labels: BTreeSet<VariantLabel>,
}

/// Computes the four structural flags and the derived labels.
///
/// Every automaton is an NFAwntl. DFAwntl needs a single initial state and
/// deterministic transitions; NFAwtl needs disjoint translucency; DFAwtl
/// needs all three; SFAwtl is an NFAwtl with a single initial state that is
/// state-deterministic.
pub fn classify(a: &Automaton) -> VariantProfile {
    let single_initial = a.initial().len() == 1;

    let mut deterministic_transitions = true;
    let mut disjoint_translucency = true;
    let mut state_deterministic = true;
    for q in a.state_ids() {
        let mut successors = BTreeSet::new();
        for x in a.alphabet().ids() {
            let targets = a.targets(q, x);
            if targets.len() > 1 {
                deterministic_transitions = false;
            }
            if a.translucent(q).contains(x) && !targets.is_empty() {
                disjoint_translucency = false;
            }
            successors.extend(targets.iter().copied());
        }
        if successors.len() > 1 {
            state_deterministic = false;
        }
    }

    let nfa_compatible = a.state_ids().all(|q| a.translucent(q).is_empty());

    let mut labels = BTreeSet::new();
    labels.insert(VariantLabel::Nfawntl);
    if nfa_compatible {
        labels.insert(VariantLabel::NfaCompatible);
    }
    if single_initial && deterministic_transitions {
        labels.insert(VariantLabel::Dfawntl);
    }
    if disjoint_translucency {
        labels.insert(VariantLabel::Nfawtl);
        if single_initial && deterministic_transitions {
            labels.insert(VariantLabel::Dfawtl);
        }
        if single_initial && state_deterministic {
            labels.insert(VariantLabel::Sfawtl);
        }
    }

    VariantProfile {
        single_initial,
        deterministic_transitions,
        disjoint_translucency,
        state_deterministic,
        labels,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn profile_of(name: &str) -> VariantProfile {
        classify(&corpus::get_entry(name).unwrap().automaton)
    }

    #[test]
    fn pair_machine_is_dfawtl_not_sfawtl() {
        let p = profile_of("ex1-Lab");
        assert!(p.single_initial);
        assert!(p.deterministic_transitions);
        assert!(p.disjoint_translucency);
        assert!(!p.state_deterministic);
        assert!(p.labels.contains(&VariantLabel::Dfawtl));
        assert!(!p.labels.contains(&VariantLabel::Sfawtl));
    }

    #[test]
    fn dyck_machine_is_state_deterministic() {
        let p = profile_of("sfawtl-dyck");
        assert!(p.state_deterministic);
        assert!(p.labels.contains(&VariantLabel::Sfawtl));
        assert!(!p.labels.contains(&VariantLabel::NfaCompatible));
    }

    #[test]
    fn overlap_machine_is_dfawntl_not_dfawtl() {
        let p = profile_of("ex4-dfawntl");
        assert!(!p.disjoint_translucency);
        assert!(p.deterministic_transitions);
        assert!(p.labels.contains(&VariantLabel::Dfawntl));
        assert!(!p.labels.contains(&VariantLabel::Dfawtl));
        assert!(!p.labels.contains(&VariantLabel::Nfawtl));
    }

    #[test]
    fn every_machine_is_nfawntl() {
        for name in corpus::list_entries().unwrap() {
            let p = profile_of(name);
            assert!(p.labels.contains(&VariantLabel::Nfawntl), "{name}");
        }
    }

    #[test]
    fn sfawtl_label_implies_deterministic_transitions() {
        for name in corpus::list_entries().unwrap() {
            let p = profile_of(name);
            if p.labels.contains(&VariantLabel::Sfawtl) {
                assert!(p.deterministic_transitions, "{name}");
                assert!(p.labels.contains(&VariantLabel::Dfawtl), "{name}");
            }
        }
    }
}
