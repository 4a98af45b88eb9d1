//! Normal forms and the `◇n` operators.
//!
//! A word is normal when it is empty, or when its parts at the minimal symbol
//! are normal and non-increasing from left to right. Every word is equivalent
//! to exactly one normal word, which is also the shortest one in its class.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use thiserror::Error;

use crate::order::{compare_normal, normal_form};
use crate::word::{enumerate_words, split_parts, Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("`{0}` is not in normal form")]
pub struct NotNormal(pub Word);

/// A word known to be in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalWord(Word);

impl NormalWord {
    /// Validates `word`.
    pub fn new(word: Word) -> Result<Self, NotNormal> {
        if is_normal(&word) {
            Ok(NormalWord(word))
        } else {
            Err(NotNormal(word))
        }
    }

    pub fn empty() -> Self {
        NormalWord(Word::empty())
    }

    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    /// The `◇n` operator.
    pub fn diamond(&self, n: Symbol) -> NormalWord {
        normalize(&self.0.push(n))
    }

    /// Compares under `≺`; on normal words `Equal` means identical.
    pub fn compare(&self, other: &NormalWord) -> Ordering {
        compare_normal(self.0.symbols(), other.0.symbols())
    }
}

impl Deref for NormalWord {
    type Target = Word;

    fn deref(&self) -> &Word {
        &self.0
    }
}

impl fmt::Display for NormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<NormalWord> for Word {
    fn from(w: NormalWord) -> Word {
        w.0
    }
}

pub fn is_normal(word: &Word) -> bool {
    is_normal_symbols(word.symbols())
}

fn is_normal_symbols(symbols: &[Symbol]) -> bool {
    let Some(&n) = symbols.iter().min() else {
        return true;
    };
    let parts = split_parts(symbols, n);
    parts.iter().all(|p| is_normal_symbols(p))
        && parts
            .windows(2)
            .all(|p| compare_normal(p[1], p[0]) != Ordering::Greater)
}

/// The unique normal word equivalent to `word`.
pub fn normalize(word: &Word) -> NormalWord {
    NormalWord(Word::new(normal_form(word.symbols()).into_vec()))
}

/// `◇n` on a word that must already be normal.
pub fn diamond(n: Symbol, word: &Word) -> Result<NormalWord, NotNormal> {
    if !is_normal(word) {
        return Err(NotNormal(word.clone()));
    }
    Ok(normalize(&word.push(n)))
}

/// The raw successor operation `A ↦ A n`.
pub fn append_a(n: Symbol, word: &Word) -> Word {
    word.push(n)
}

/// Normal words among [`enumerate_words`], in the same shortlex order.
pub fn enumerate_normal(max_symbol: Symbol, max_len: usize) -> Vec<NormalWord> {
    enumerate_words(max_symbol, max_len)
        .into_iter()
        .filter(is_normal)
        .map(NormalWord)
        .collect()
}
