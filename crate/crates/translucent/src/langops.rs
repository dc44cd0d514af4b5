//! Language-level analyses: bounded enumeration, Parikh images, bounded
//! equivalence, and the translucency-removal constructions with their
//! letter-equivalence check.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::alphabet::{Alphabet, SymbolId, Word};
use crate::automaton::Automaton;
use crate::engine::accepts;

/// Default budget on the number of candidate words an enumeration may test.
pub const ENUMERATION_BUDGET: u128 = 10_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Error)]
pub enum LangOpsError {
    /// The candidate-word space `|Σ|^0 + … + |Σ|^max_len` is too large.
    #[error("enumeration over {candidates} candidate words exceeds the budget {budget}")]
    BoundExceeded { candidates: u128, budget: u128 },
    /// The two automata do not share an alphabet.
    #[error("automata have different alphabets")]
    AlphabetMismatch,
}

/// Letter counts of a word, indexed by symbol ordinal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ParikhVector(pub Vec<u32>);

impl ParikhVector {
    pub fn of(alphabet: &Alphabet, w: &Word) -> Self {
        let mut counts = vec![0u32; alphabet.len()];
        for &x in w.letters() {
            counts[x.0] += 1;
        }
        ParikhVector(counts)
    }

    /// Renders as `a:2 b:2` over the full alphabet, zeros included.
    pub fn format(&self, alphabet: &Alphabet) -> String {
        self.0
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{}:{}", alphabet.token(SymbolId(i)), c))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// The accepted words of length at most `max_len`, canonically sorted by
/// length then lexicographically by symbol ordinal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundedLanguage {
    pub max_len: usize,
    pub words: Vec<Word>,
}

impl BoundedLanguage {
    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Iterator over all words of length at most `max_len` in canonical
/// length-then-lex order.
pub struct AllWords<'a> {
    alphabet: &'a Alphabet,
    max_len: usize,
    next: Option<Vec<usize>>,
}

/// All words over the alphabet up to `max_len`, canonically ordered.
pub fn all_words(alphabet: &Alphabet, max_len: usize) -> AllWords<'_> {
    AllWords {
        alphabet,
        max_len,
        next: Some(Vec::new()),
    }
}

impl Iterator for AllWords<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let word = current.iter().map(|&i| SymbolId(i)).collect();
        self.next = self.advance(current);
        Some(word)
    }
}

impl AllWords<'_> {
    fn advance(&self, mut digits: Vec<usize>) -> Option<Vec<usize>> {
        let m = self.alphabet.len();
        if m > 0 {
            let mut i = digits.len();
            while i > 0 {
                i -= 1;
                if digits[i] + 1 < m {
                    digits[i] += 1;
                    for d in digits[i + 1..].iter_mut() {
                        *d = 0;
                    }
                    return Some(digits);
                }
            }
        }
        if m > 0 && digits.len() < self.max_len {
            Some(vec![0; digits.len() + 1])
        } else {
            None
        }
    }
}

/// Number of words of length at most `max_len` over an `m`-symbol alphabet,
/// or `None` on overflow.
pub fn candidate_count(m: usize, max_len: usize) -> Option<u128> {
    let m = m as u128;
    let mut total: u128 = 0;
    let mut pow: u128 = 1;
    for n in 0..=max_len {
        total = total.checked_add(pow)?;
        if n < max_len {
            pow = pow.checked_mul(m)?;
        }
    }
    Some(total)
}

fn check_budget(alphabet: &Alphabet, max_len: usize, budget: u128) -> Result<(), LangOpsError> {
    let candidates =
        candidate_count(alphabet.len(), max_len).unwrap_or(u128::MAX);
    if candidates > budget {
        return Err(LangOpsError::BoundExceeded { candidates, budget });
    }
    Ok(())
}

/// Exactly `{ w : |w| ≤ max_len, accepts(a, w) }`. Membership is tested
/// word by word (erasure order makes forward generation awkward), guarded
/// by [`ENUMERATION_BUDGET`] on the candidate count.
pub fn enumerate(a: &Automaton, max_len: usize) -> Result<BoundedLanguage, LangOpsError> {
    enumerate_with_budget(a, max_len, ENUMERATION_BUDGET)
}

/// [`enumerate`] with an explicit candidate budget.
pub fn enumerate_with_budget(
    a: &Automaton,
    max_len: usize,
    budget: u128,
) -> Result<BoundedLanguage, LangOpsError> {
    check_budget(a.alphabet(), max_len, budget)?;
    let words = all_words(a.alphabet(), max_len)
        .filter(|w| accepts(a, w))
        .collect();
    Ok(BoundedLanguage { max_len, words })
}

/// The set of Parikh vectors of the bounded language.
pub fn parikh_up_to(
    a: &Automaton,
    max_len: usize,
) -> Result<BTreeSet<ParikhVector>, LangOpsError> {
    let lang = enumerate(a, max_len)?;
    Ok(lang
        .iter()
        .map(|w| ParikhVector::of(a.alphabet(), w))
        .collect())
}

/// Result of a bounded equivalence test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Equivalence {
    Equal,
    /// The length-lex-least word accepted by exactly one side; `in_first`
    /// tells which.
    Counterexample { word: Word, in_first: bool },
}

/// Compares two automata on every word up to `max_len`, returning the
/// length-lex-least counterexample if any.
pub fn bounded_equivalent(
    a: &Automaton,
    b: &Automaton,
    max_len: usize,
) -> Result<Equivalence, LangOpsError> {
    if a.alphabet() != b.alphabet() {
        return Err(LangOpsError::AlphabetMismatch);
    }
    check_budget(a.alphabet(), max_len, ENUMERATION_BUDGET)?;
    for w in all_words(a.alphabet(), max_len) {
        let in_a = accepts(a, &w);
        if in_a != accepts(b, &w) {
            return Ok(Equivalence::Counterexample {
                word: w,
                in_first: in_a,
            });
        }
    }
    Ok(Equivalence::Equal)
}

/// Compares an automaton against a membership predicate on every word up to
/// `max_len`; `in_first` refers to the automaton.
pub fn bounded_equivalent_to_predicate(
    a: &Automaton,
    oracle: impl Fn(&Word) -> bool,
    max_len: usize,
) -> Result<Equivalence, LangOpsError> {
    check_budget(a.alphabet(), max_len, ENUMERATION_BUDGET)?;
    for w in all_words(a.alphabet(), max_len) {
        let in_a = accepts(a, &w);
        if in_a != oracle(&w) {
            return Ok(Equivalence::Counterexample {
                word: w,
                in_first: in_a,
            });
        }
    }
    Ok(Equivalence::Equal)
}

/// The disjoint-translucency companion: `τ'(q) = τ(q) \ { x : δ(q,x) ≠ ∅ }`
/// with everything else unchanged. Its language is a sublanguage of the
/// original's.
pub fn remove_overlap_translucency(a: &Automaton) -> Automaton {
    let mut out = a.clone();
    for q in a.state_ids() {
        let mut t = a.translucent(q);
        for x in a.alphabet().ids() {
            if !a.targets(q, x).is_empty() {
                t.remove(x);
            }
        }
        out.translucency[q.0] = t;
    }
    out
}

/// Empties every translucency set; the result behaves as a classical NFA
/// over the same transition table. Its language is a sublanguage of the
/// original's.
pub fn drop_translucency(a: &Automaton) -> Automaton {
    let mut out = a.clone();
    for t in &mut out.translucency {
        *t = crate::alphabet::SymbolSet::EMPTY;
    }
    out
}

/// Which derived machine a letter-equivalence check compared against.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LemmaConstruction {
    RemoveOverlap,
    DropTranslucency,
}

impl std::fmt::Display for LemmaConstruction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            LemmaConstruction::RemoveOverlap => "remove-overlap",
            LemmaConstruction::DropTranslucency => "drop-translucency",
        })
    }
}

/// Outcome of one Parikh-set comparison.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConstructionCheck {
    Equal,
    /// The least vector present on exactly one side; `missing_from_variant`
    /// is true when the original automaton has it and the derived machine
    /// does not.
    Differs {
        vector: ParikhVector,
        missing_from_variant: bool,
    },
}

/// Report of [`check_letter_equivalence_lemma`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LemmaReport {
    pub remove_overlap: ConstructionCheck,
    pub drop_translucency: ConstructionCheck,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.remove_overlap == ConstructionCheck::Equal
            && self.drop_translucency == ConstructionCheck::Equal
    }
}

fn compare_parikh(
    original: &BTreeSet<ParikhVector>,
    variant: &BTreeSet<ParikhVector>,
) -> ConstructionCheck {
    if original == variant {
        return ConstructionCheck::Equal;
    }
    let first = original
        .symmetric_difference(variant)
        .next()
        .expect("sets differ")
        .clone();
    let missing_from_variant = original.contains(&first);
    ConstructionCheck::Differs {
        vector: first,
        missing_from_variant,
    }
}

/// Checks, at the given bound, that the original automaton is letter
/// equivalent to both derived machines: the Parikh set of its bounded
/// language must equal that of [`remove_overlap_translucency`]'s and that
/// of [`drop_translucency`]'s. Reports the first differing vector per
/// construction otherwise.
pub fn check_letter_equivalence_lemma(
    a: &Automaton,
    max_len: usize,
) -> Result<LemmaReport, LangOpsError> {
    let original = parikh_up_to(a, max_len)?;
    let removed = parikh_up_to(&remove_overlap_translucency(a), max_len)?;
    let dropped = parikh_up_to(&drop_translucency(a), max_len)?;
    Ok(LemmaReport {
        remove_overlap: compare_parikh(&original, &removed),
        drop_translucency: compare_parikh(&original, &dropped),
    })
}
