//! Alphabets, symbols, words and bitmask symbol sets.
//!
//! Symbols are interned to dense ordinals. Declaration order is the
//! canonical order used for word ordering and tie-breaking everywhere
//! else in this crate.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Maximum alphabet size; [`SymbolSet`] is a 64-bit mask.
pub const MAX_SYMBOLS: usize = 64;

/// The reserved endmarker token. The endmarker is a semantic fiction of the
/// model (acceptance is defined on remaining-word contents), so it is never
/// stored and may not be declared as an input symbol.
pub const ENDMARKER: &str = "$";

/// Ordinal of a symbol within its [`Alphabet`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SymbolId(pub usize);

/// Checks a symbol or state token: non-empty, not an arrow, no whitespace,
/// and none of the characters the text format gives meaning to.
pub(crate) fn valid_token(token: &str) -> bool {
    !token.is_empty()
        && token != "->"
        && !token
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '#' | ',' | ':' | '"'))
}

/// Why a token sequence does not form an [`Alphabet`].
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum AlphabetError {
    #[error("duplicate symbol {0:?}")]
    DuplicateSymbol(String),
    #[error("symbol token {0:?} is reserved for the endmarker")]
    ReservedEndmarker(String),
    #[error("invalid symbol token {0:?}")]
    InvalidToken(String),
    #[error("alphabet has {0} symbols, at most {MAX_SYMBOLS} are supported")]
    TooManySymbols(usize),
}

/// Why a word could not be read against an alphabet.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum WordParseError {
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("empty symbol token in comma-separated word")]
    EmptyToken,
}

/// An ordered set of symbol tokens.
#[derive(Clone, Debug)]
pub struct Alphabet {
    tokens: Vec<String>,
    index: HashMap<String, SymbolId>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.tokens == other.tokens
    }
}

impl Eq for Alphabet {}

impl Alphabet {
    /// Builds an alphabet from tokens in declaration order.
    pub fn new<I, S>(tokens: I) -> Result<Self, AlphabetError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let tokens: Vec<String> = tokens.into_iter().map(Into::into).collect();
        if tokens.len() > MAX_SYMBOLS {
            return Err(AlphabetError::TooManySymbols(tokens.len()));
        }
        let mut index = HashMap::new();
        for (i, t) in tokens.iter().enumerate() {
            if t == ENDMARKER {
                return Err(AlphabetError::ReservedEndmarker(t.clone()));
            }
            if !valid_token(t) {
                return Err(AlphabetError::InvalidToken(t.clone()));
            }
            if index.insert(t.clone(), SymbolId(i)).is_some() {
                return Err(AlphabetError::DuplicateSymbol(t.clone()));
            }
        }
        Ok(Alphabet { tokens, index })
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// The token of a symbol. Panics on a foreign id.
    pub fn token(&self, id: SymbolId) -> &str {
        &self.tokens[id.0]
    }

    pub fn lookup(&self, token: &str) -> Option<SymbolId> {
        self.index.get(token).copied()
    }

    pub fn ids(&self) -> impl Iterator<Item = SymbolId> {
        (0..self.tokens.len()).map(SymbolId)
    }

    pub fn tokens(&self) -> impl Iterator<Item = &str> {
        self.tokens.iter().map(String::as_str)
    }

    /// The set of all symbols.
    pub fn full_set(&self) -> SymbolSet {
        SymbolSet::full(self.len())
    }

    /// True when every token is a single character, so words can be written
    /// without separators.
    pub fn single_char(&self) -> bool {
        self.tokens.iter().all(|t| t.chars().count() == 1)
    }

    /// Renders a word: single-character alphabets concatenate tokens,
    /// otherwise tokens are comma-separated. The empty word renders as "".
    pub fn format_word(&self, word: &Word) -> String {
        let sep = if self.single_char() { "" } else { "," };
        word.letters()
            .iter()
            .map(|&id| self.token(id))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Reads a word. Comma-separated input lists one token per item; input
    /// without commas is split into single characters (requires a
    /// single-character alphabet unless the input is itself one token).
    /// The empty string is the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word, WordParseError> {
        if text.is_empty() {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        if text.contains(',') {
            for part in text.split(',') {
                if part.is_empty() {
                    return Err(WordParseError::EmptyToken);
                }
                letters.push(
                    self.lookup(part)
                        .ok_or_else(|| WordParseError::UnknownSymbol(part.to_string()))?,
                );
            }
        } else if let Some(id) = self.lookup(text) {
            letters.push(id);
        } else {
            for ch in text.chars() {
                let tok = ch.to_string();
                letters.push(
                    self.lookup(&tok)
                        .ok_or(WordParseError::UnknownSymbol(tok))?,
                );
            }
        }
        Ok(Word(letters))
    }

    /// Renders a symbol set as `{a,b}`.
    pub fn format_symbol_set(&self, set: SymbolSet) -> String {
        let items: Vec<&str> = set.iter().map(|id| self.token(id)).collect();
        format!("{{{}}}", items.join(","))
    }
}

/// A sequence of symbols from one alphabet. Orders by length, then
/// lexicographically by symbol ordinal (the canonical word order).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<SymbolId>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[SymbolId] {
        &self.0
    }

    /// A copy with the letter at 0-based `index` removed.
    pub fn without(&self, index: usize) -> Word {
        let mut letters = self.0.clone();
        letters.remove(index);
        Word(letters)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<SymbolId> for Word {
    fn from_iter<T: IntoIterator<Item = SymbolId>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// A subset of an alphabet as a 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct SymbolSet(u64);

impl SymbolSet {
    pub const EMPTY: SymbolSet = SymbolSet(0);

    /// The set of the first `n` symbols.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_SYMBOLS);
        if n == MAX_SYMBOLS {
            SymbolSet(u64::MAX)
        } else {
            SymbolSet((1u64 << n) - 1)
        }
    }

    pub fn from_ids<I: IntoIterator<Item = SymbolId>>(ids: I) -> Self {
        let mut s = SymbolSet::EMPTY;
        for id in ids {
            s.insert(id);
        }
        s
    }

    pub fn from_bits(bits: u64) -> Self {
        SymbolSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, id: SymbolId) -> bool {
        debug_assert!(id.0 < MAX_SYMBOLS);
        self.0 & (1u64 << id.0) != 0
    }

    pub fn insert(&mut self, id: SymbolId) {
        assert!(id.0 < MAX_SYMBOLS);
        self.0 |= 1u64 << id.0;
    }

    pub fn remove(&mut self, id: SymbolId) {
        assert!(id.0 < MAX_SYMBOLS);
        self.0 &= !(1u64 << id.0);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        SymbolSet(self.0 | other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        SymbolSet(self.0 & !other.0)
    }

    /// Members in ascending ordinal order.
    pub fn iter(self) -> impl Iterator<Item = SymbolId> {
        (0..MAX_SYMBOLS).filter_map(move |i| {
            if self.0 & (1u64 << i) != 0 {
                Some(SymbolId(i))
            } else {
                None
            }
        })
    }
}

impl fmt::Display for SymbolId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
