//! Order isomorphisms between normal words and ordinals, and the multiset
//! model of normal words.
//!
//! `o_map(·, n)` sends a normal word over symbols `≥ n` to an ordinal:
//! `n^k ↦ k`, and `A₁ n … n Aₖ ↦ ω^o(A₁) + … + ω^o(Aₖ)` with the parts
//! mapped at level `n + 1`. [`word_of`] is its inverse.
//!
//! A normal word split at `0` into blocks `B₁ 0 … 0 Bₘ` is also read as the
//! finite multiset `{o_map(Bᵢ, 1)}`. Comparison and `◇0`, `◇1`, `◇2` then
//! have purely arithmetic counterparts on multisets, which makes the
//! multiset side an independent check of the word side.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::normal::NormalWord;
use crate::ordinal::{psi, Ordinal};
use crate::word::{split_parts, Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorrespondenceError {
    #[error("`{0}` is not in normal form")]
    NotNormal(Word),
    #[error("`{word}` has a symbol below {level}")]
    NotInS { word: Word, level: Symbol },
}

/// The ordinal denoted by a normal word at level `n`.
pub fn o_map(word: &NormalWord, n: Symbol) -> Result<Ordinal, CorrespondenceError> {
    if !word.in_s(n) {
        return Err(CorrespondenceError::NotInS {
            word: word.as_word().clone(),
            level: n,
        });
    }
    Ok(o_map_symbols(word.symbols(), n))
}

/// Like [`o_map`] but validates a raw word first.
pub fn o_map_word(word: &Word, n: Symbol) -> Result<Ordinal, CorrespondenceError> {
    let normal =
        NormalWord::new(word.clone()).map_err(|e| CorrespondenceError::NotNormal(e.0))?;
    o_map(&normal, n)
}

fn o_map_symbols(symbols: &[Symbol], n: Symbol) -> Ordinal {
    if symbols.iter().all(|&s| s == n) {
        return Ordinal::from_nat(symbols.len() as u64);
    }
    // Parts are non-increasing, so the sum below is already in Cantor form.
    split_parts(symbols, n)
        .into_iter()
        .map(|part| Ordinal::omega_pow(o_map_symbols(part, n + 1)))
        .fold(Ordinal::zero(), |acc, x| acc + x)
}

/// The normal word over symbols `≥ n` denoting `alpha`.
pub fn word_of(alpha: &Ordinal, n: Symbol) -> NormalWord {
    let mut out = Vec::new();
    word_of_into(alpha, n, &mut out);
    NormalWord::new(Word::new(out)).expect("word_of produced a non-normal word")
}

fn word_of_into(alpha: &Ordinal, n: Symbol, out: &mut Vec<Symbol>) {
    if let Some(k) = alpha.to_nat() {
        out.extend(std::iter::repeat_n(n, k as usize));
        return;
    }
    let mut first = true;
    for (exponent, coefficient) in alpha.terms() {
        for _ in 0..coefficient {
            if !first {
                out.push(n);
            }
            first = false;
            word_of_into(exponent, n + 1, out);
        }
    }
}

/// A finite multiset of ordinals.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct OrdMultiset(BTreeMap<Ordinal, u64>);

impl OrdMultiset {
    pub fn new() -> Self {
        OrdMultiset::default()
    }

    pub fn multiplicity(&self, x: &Ordinal) -> u64 {
        self.0.get(x).copied().unwrap_or(0)
    }

    pub fn insert(&mut self, x: Ordinal, count: u64) {
        if count > 0 {
            *self.0.entry(x).or_insert(0) += count;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> Option<&Ordinal> {
        self.0.keys().next()
    }

    /// Entries in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = (&Ordinal, u64)> + '_ {
        self.0.iter().map(|(k, &v)| (k, v))
    }

    /// Multiplicity of `x` here is below that in `other`.
    pub fn count_less(&self, x: &Ordinal, other: &OrdMultiset) -> bool {
        self.multiplicity(x) < other.multiplicity(x)
    }

    pub fn count_eq(&self, x: &Ordinal, other: &OrdMultiset) -> bool {
        self.multiplicity(x) == other.multiplicity(x)
    }

    /// Multiplicity of `x` here is exactly one less than in `other`.
    pub fn count_succ(&self, x: &Ordinal, other: &OrdMultiset) -> bool {
        self.multiplicity(x) + 1 == other.multiplicity(x)
    }

    /// Drop every entry below `floor`, then add one copy of `floor`.
    fn raise_to(&self, floor: Ordinal) -> OrdMultiset {
        let mut kept = OrdMultiset(self.0.range(floor.clone()..).map(|(k, &v)| (k.clone(), v)).collect());
        kept.insert(floor, 1);
        kept
    }
}

impl FromIterator<Ordinal> for OrdMultiset {
    fn from_iter<I: IntoIterator<Item = Ordinal>>(iter: I) -> Self {
        let mut m = OrdMultiset::new();
        for x in iter {
            m.insert(x, 1);
        }
        m
    }
}

impl fmt::Display for OrdMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, v)) in self.0.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}:{v}")?;
        }
        f.write_str("}")
    }
}

/// Blocks at `0`, each read at level 1. The empty word gives the empty multiset.
pub fn word_to_multiset(word: &NormalWord) -> OrdMultiset {
    if word.is_empty() {
        return OrdMultiset::new();
    }
    split_parts(word.symbols(), 0)
        .into_iter()
        .map(|block| o_map_symbols(block, 1))
        .collect()
}

/// Decided at the largest ordinal whose multiplicities differ.
pub fn ms_compare(x: &OrdMultiset, y: &OrdMultiset) -> Ordering {
    let mut support: Vec<&Ordinal> = x.0.keys().chain(y.0.keys()).collect();
    support.sort();
    support.dedup();
    for gamma in support.into_iter().rev() {
        if x.count_less(gamma, y) {
            return Ordering::Less;
        }
        if y.count_less(gamma, x) {
            return Ordering::Greater;
        }
    }
    Ordering::Equal
}

/// Adds one copy of `0`.
pub fn ms_diamond0(x: &OrdMultiset) -> OrdMultiset {
    let mut y = x.clone();
    y.insert(Ordinal::zero(), 1);
    y
}

/// Replaces everything up to the minimum `γ` by one copy of `γ + 1`.
pub fn ms_diamond1(x: &OrdMultiset) -> OrdMultiset {
    match x.min() {
        None => OrdMultiset::new(),
        Some(gamma) => x.raise_to(gamma.succ()),
    }
}

/// Replaces everything below `ψ(γ)`, `γ` the minimum, by one copy of `ψ(γ)`.
pub fn ms_diamond2(x: &OrdMultiset) -> OrdMultiset {
    match x.min() {
        None => OrdMultiset::new(),
        Some(gamma) => x.raise_to(psi(gamma)),
    }
}
