//! Randomized structural properties of the engine, the language operations
//! and the serialization layer.

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use translucent::alphabet::Word;
use translucent::automaton::Automaton;
use translucent::classify::{classify, VariantLabel};
use translucent::engine::{
    accepts, eligible_positions, first_trace, is_accepting_config, naive_accepts, Configuration,
};
use translucent::format::{parse, serialize};
use translucent::langops::{
    all_words, check_letter_equivalence_lemma, drop_translucency, enumerate, parikh_up_to,
    remove_overlap_translucency, ParikhVector,
};

fn arb_machine() -> impl Strategy<Value = Automaton> {
    any::<u64>().prop_map(|seed| common::random_automaton(&mut common::rng(seed)))
}

/// A machine plus an arbitrary word over its alphabet.
fn arb_machine_and_word(max_len: usize) -> impl Strategy<Value = (Automaton, Word)> {
    (any::<u64>(), any::<u64>()).prop_map(move |(s1, s2)| {
        let a = common::random_automaton(&mut common::rng(s1));
        let w = common::random_word(&a, &mut common::rng(s2), max_len);
        (a, w)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn serialization_round_trips(a in arb_machine()) {
        let text = serialize(&a);
        prop_assert_eq!(parse(&text).expect("serialized output parses"), a);
    }

    #[test]
    fn every_step_erases_exactly_one_letter((a, w) in arb_machine_and_word(5)) {
        for state in a.state_ids() {
            let config = Configuration { state, remaining: w.clone() };
            for (step, next) in translucent::engine::successors(&a, &config) {
                prop_assert_eq!(next.remaining.len() + 1, w.len());
                prop_assert_eq!(step.from_state, state);
                prop_assert_eq!(w.letters()[step.erased_position - 1], step.erased_letter);
                prop_assert_eq!(&next.remaining, &w.without(step.erased_position - 1));
            }
        }
    }

    #[test]
    fn derived_machines_accept_sublanguages(a in arb_machine()) {
        let original = enumerate(&a, 4).unwrap();
        for variant in [remove_overlap_translucency(&a), drop_translucency(&a)] {
            for w in enumerate(&variant, 4).unwrap().iter() {
                prop_assert!(original.contains(w));
            }
        }
    }

    #[test]
    fn disjoint_translucency_leaves_at_most_one_eligible_position((a, w) in arb_machine_and_word(5)) {
        let disjoint = remove_overlap_translucency(&a);
        prop_assert!(classify(&disjoint).disjoint_translucency);
        for state in disjoint.state_ids() {
            let config = Configuration { state, remaining: w.clone() };
            prop_assert!(eligible_positions(&disjoint, &config).len() <= 1);
        }
    }

    #[test]
    fn enumeration_is_monotone_in_the_bound(a in arb_machine()) {
        let small = enumerate(&a, 3).unwrap();
        let large = enumerate(&a, 4).unwrap();
        let filtered: Vec<Word> =
            large.words.iter().filter(|w| w.len() <= 3).cloned().collect();
        prop_assert_eq!(small.words, filtered);
    }

    #[test]
    fn first_trace_exists_iff_accepted((a, w) in arb_machine_and_word(5)) {
        let trace = first_trace(&a, &w);
        prop_assert_eq!(trace.is_some(), accepts(&a, &w));
        if let Some(trace) = trace {
            prop_assert!(trace.accepted);
            prop_assert!(a.initial().contains(&trace.initial_state));
            let mut config = Configuration { state: trace.initial_state, remaining: w.clone() };
            for step in &trace.steps {
                prop_assert_eq!(step.from_state, config.state);
                prop_assert!(
                    eligible_positions(&a, &config)
                        .contains(&(step.erased_position, step.erased_letter))
                );
                prop_assert!(a.targets(config.state, step.erased_letter).contains(&step.to_state));
                config = Configuration {
                    state: step.to_state,
                    remaining: config.remaining.without(step.erased_position - 1),
                };
            }
            prop_assert!(is_accepting_config(&a, &config));
        }
    }

    #[test]
    fn naive_reference_agrees_on_short_words(a in arb_machine()) {
        for w in all_words(a.alphabet(), 3) {
            prop_assert_eq!(naive_accepts(&a, &w).unwrap(), accepts(&a, &w));
        }
    }

    #[test]
    fn language_is_letter_equivalent_to_in_order_reference(a in arb_machine()) {
        let machine_parikh = parikh_up_to(&a, 4).unwrap();
        let reference_parikh: BTreeSet<ParikhVector> = all_words(a.alphabet(), 4)
            .filter(|w| common::in_order_reference_member(&a, w))
            .map(|w| ParikhVector::of(a.alphabet(), &w))
            .collect();
        prop_assert_eq!(machine_parikh, reference_parikh);
    }

    #[test]
    fn lemma_holds_when_final_states_have_no_translucency(a in arb_machine()) {
        let mut raw = a.to_raw();
        let finals = raw.finals.clone();
        raw.translucent.retain(|(state, _)| !finals.contains(state));
        let restricted = raw.validate().unwrap();
        let report = check_letter_equivalence_lemma(&restricted, 4).unwrap();
        prop_assert!(report.passed(), "report: {:?}", report);
    }

    #[test]
    fn nfa_compatible_label_means_no_translucency(a in arb_machine()) {
        let profile = classify(&a);
        prop_assert_eq!(
            profile.labels.contains(&VariantLabel::NfaCompatible),
            drop_translucency(&a) == a
        );
        prop_assert!(profile.labels.contains(&VariantLabel::Nfawntl));
        if profile.labels.contains(&VariantLabel::Sfawtl) {
            prop_assert!(profile.labels.contains(&VariantLabel::Dfawtl));
        }
        if profile.labels.contains(&VariantLabel::Dfawtl) {
            prop_assert!(profile.labels.contains(&VariantLabel::Nfawtl));
        }
    }

    #[test]
    fn tau_empty_machines_behave_like_classical_nfas(a in arb_machine()) {
        let nfa = drop_translucency(&a);
        for w in all_words(nfa.alphabet(), 4) {
            prop_assert_eq!(accepts(&nfa, &w), common::nfa_accepts(&nfa, &w));
        }
    }
}
