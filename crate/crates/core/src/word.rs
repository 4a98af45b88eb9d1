//! Words over the alphabet of natural numbers.
//!
//! A [`Word`] is the raw term of the notation system. Nothing here knows
//! about the order on words; see [`crate::order`] for that.

use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;
use thiserror::Error;

/// A symbol of the alphabet.
pub type Symbol = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("the empty word has no symbols")]
    EmptyWord,
    #[error("symbol {symbol} is below the separator {separator}")]
    SymbolBelowSeparator { symbol: Symbol, separator: Symbol },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseWordError {
    #[error("empty input; write `e` for the empty word")]
    Empty,
    #[error("invalid token `{0}`")]
    BadToken(String),
}

/// A finite sequence of symbols. `Word::empty()` is the empty word, written `e`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    /// The word `symbol^count`.
    pub fn repeat(symbol: Symbol, count: usize) -> Self {
        Word(vec![symbol; count])
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<Symbol> {
        self.0.last().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.0);
        symbols.extend_from_slice(&other.0);
        Word(symbols)
    }

    /// The word followed by one more symbol.
    pub fn push(&self, symbol: Symbol) -> Word {
        let mut symbols = self.0.clone();
        symbols.push(symbol);
        Word(symbols)
    }

    /// `n`-fold self-concatenation; `power(0)` is the empty word.
    pub fn power(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    pub fn min_symbol(&self) -> Result<Symbol, WordError> {
        self.0.iter().copied().min().ok_or(WordError::EmptyWord)
    }

    pub fn max_symbol(&self) -> Option<Symbol> {
        self.0.iter().copied().max()
    }

    /// Splits at every occurrence of `separator`.
    ///
    /// A word with `m` occurrences yields `m + 1` parts; the empty word yields
    /// one empty part. All symbols must be at least `separator`.
    pub fn split_at(&self, separator: Symbol) -> Result<Vec<Word>, WordError> {
        if let Some(&symbol) = self.0.iter().find(|&&s| s < separator) {
            return Err(WordError::SymbolBelowSeparator { symbol, separator });
        }
        Ok(split_parts(&self.0, separator)
            .into_iter()
            .map(|p| Word(p.to_vec()))
            .collect())
    }

    /// Inverse of [`Word::split_at`]: interleaves `parts` with `separator`.
    pub fn join(parts: &[Word], separator: Symbol) -> Word {
        let mut symbols = Vec::new();
        for (i, part) in parts.iter().enumerate() {
            if i > 0 {
                symbols.push(separator);
            }
            symbols.extend_from_slice(&part.0);
        }
        Word(symbols)
    }

    /// Every symbol is at least `k`.
    pub fn in_s(&self, k: Symbol) -> bool {
        self.0.iter().all(|&s| s >= k)
    }

    /// Every symbol is at most `bound`.
    pub fn in_w(&self, bound: Symbol) -> bool {
        self.0.iter().all(|&s| s <= bound)
    }

    /// Adds `delta` to every symbol.
    pub fn shifted(&self, delta: Symbol) -> Word {
        Word(self.0.iter().map(|&s| s + delta).collect())
    }
}

pub(crate) type Parts<'a> = SmallVec<[&'a [Symbol]; 8]>;

/// Splits a symbol slice at `separator` without copying.
pub(crate) fn split_parts(symbols: &[Symbol], separator: Symbol) -> Parts<'_> {
    symbols.split(|&s| s == separator).collect()
}

impl From<Vec<Symbol>> for Word {
    fn from(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }
}

impl<const N: usize> From<[Symbol; N]> for Word {
    fn from(symbols: [Symbol; N]) -> Self {
        Word(symbols.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = ParseWordError;

    /// Accepts `e`, or decimal naturals separated by runs of spaces or by a
    /// comma (optionally padded with spaces).
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        if text.is_empty() {
            return Err(ParseWordError::Empty);
        }
        if text == "e" {
            return Ok(Word::empty());
        }
        let mut symbols = Vec::new();
        for chunk in text.split(',') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                return Err(ParseWordError::BadToken(",".into()));
            }
            for token in chunk.split_whitespace() {
                if !token.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(ParseWordError::BadToken(token.into()));
                }
                let value = token
                    .parse::<Symbol>()
                    .map_err(|_| ParseWordError::BadToken(token.into()))?;
                symbols.push(value);
            }
        }
        Ok(Word(symbols))
    }
}

/// All words over `{0..=max_symbol}` of length at most `max_len`, in shortlex
/// order (by length, then lexicographically by symbol value).
pub fn enumerate_words(max_symbol: Symbol, max_len: usize) -> Vec<Word> {
    shortlex(max_symbol, max_len).collect()
}

/// Lazy form of [`enumerate_words`].
pub fn shortlex(max_symbol: Symbol, max_len: usize) -> Shortlex {
    Shortlex { max_symbol, max_len, next: Some(Vec::new()) }
}

#[derive(Debug, Clone)]
pub struct Shortlex {
    max_symbol: Symbol,
    max_len: usize,
    next: Option<Vec<Symbol>>,
}

impl Iterator for Shortlex {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // Odometer increment; on wrap-around move to the next length.
        let mut carried = true;
        for s in succ.iter_mut().rev() {
            if *s < self.max_symbol {
                *s += 1;
                carried = false;
                break;
            }
            *s = 0;
        }
        if carried {
            succ = vec![0; current.len() + 1];
        }
        if succ.len() <= self.max_len {
            self.next = Some(succ);
        }
        Some(Word(current))
    }
}
