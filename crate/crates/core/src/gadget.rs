//! Finite structures with two linear orders, encoded as words over `{0..3}`.
//!
//! A word `C₁ 0 C₂ 0 … 0 Cᵣ` is read as a biorder whose elements are its
//! slices `C₁ 0 … 0 Cₘ`. The first order is `≺` on slices, the second compares
//! their `◇3` images. [`encode_biorder`] goes the other way by building a word
//! whose `u`-sequence `(◇3 of each slice)` is a prescribed sequence of the
//! words `K_{h,k}`.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::normal::{normalize, NormalWord};
use crate::order::compare;
use crate::word::{shortlex, Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("the empty word has no blocks")]
    EmptyWord,
    #[error("slice {m} requested from a word with {blocks} blocks")]
    SliceIndexOutOfRange { m: usize, blocks: usize },
    #[error("`{0}` has a symbol above 3")]
    NotInW3(Word),
    #[error("bad index: {0}")]
    BadIndex(String),
    #[error("internal error: constructed word `{0}` is not normal")]
    NormalityAssertionFailed(Word),
    #[error("`{0}` does not encode a biorder: two slices have equivalent ◇3 images")]
    NotABiorderEncoding(Word),
    #[error("invalid biorder: {0}")]
    InvalidBiorder(String),
}

/// A finite set with two strict linear orders, each listed in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BiorderFile", into = "BiorderFile")]
pub struct Biorder {
    elements: Vec<String>,
    l1: Vec<String>,
    l2: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BiorderFile {
    elements: Vec<String>,
    l1: Vec<String>,
    l2: Vec<String>,
}

impl TryFrom<BiorderFile> for Biorder {
    type Error = GadgetError;

    fn try_from(f: BiorderFile) -> Result<Self, GadgetError> {
        Biorder::new(f.elements, f.l1, f.l2)
    }
}

impl From<Biorder> for BiorderFile {
    fn from(b: Biorder) -> Self {
        BiorderFile { elements: b.elements, l1: b.l1, l2: b.l2 }
    }
}

impl Biorder {
    pub fn new(elements: Vec<String>, l1: Vec<String>, l2: Vec<String>) -> Result<Self, GadgetError> {
        if elements.is_empty() {
            return Err(GadgetError::InvalidBiorder("no elements".into()));
        }
        if let Some(e) = elements.iter().find(|e| e.is_empty()) {
            return Err(GadgetError::InvalidBiorder(format!("empty label {e:?}")));
        }
        let set: HashSet<&String> = elements.iter().collect();
        if set.len() != elements.len() {
            return Err(GadgetError::InvalidBiorder("duplicate element".into()));
        }
        for (name, order) in [("l1", &l1), ("l2", &l2)] {
            let other: HashSet<&String> = order.iter().collect();
            if order.len() != elements.len() || other != set {
                return Err(GadgetError::InvalidBiorder(format!(
                    "{name} is not a permutation of the elements"
                )));
            }
        }
        Ok(Biorder { elements, l1, l2 })
    }

    /// A biorder whose element list is `l1`.
    pub fn from_orders(l1: Vec<String>, l2: Vec<String>) -> Result<Self, GadgetError> {
        Biorder::new(l1.clone(), l1, l2)
    }

    /// Elements `b1..bh` in first-order position, with the second order given
    /// by 0-based positions into that list.
    pub fn from_permutation(l2: &[usize]) -> Result<Self, GadgetError> {
        let label = |i: usize| format!("b{}", i + 1);
        let l1: Vec<String> = (0..l2.len()).map(label).collect();
        let mapped = l2
            .iter()
            .map(|&i| {
                (i < l2.len())
                    .then(|| label(i))
                    .ok_or_else(|| GadgetError::BadIndex(format!("position {i} out of range")))
            })
            .collect::<Result<_, _>>()?;
        Biorder::from_orders(l1, mapped)
    }

    /// Every biorder of size `h` with first order `b1 < … < bh`.
    pub fn all_of_size(h: usize) -> Vec<Biorder> {
        permutations(h)
            .into_iter()
            .map(|p| Biorder::from_permutation(&p).expect("valid permutation"))
            .collect()
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn l1(&self) -> &[String] {
        &self.l1
    }

    pub fn l2(&self) -> &[String] {
        &self.l2
    }

    /// The second-order rank (1-based) of each element, listed by first-order rank.
    pub fn signature(&self) -> Vec<usize> {
        self.l1
            .iter()
            .map(|e| self.l2.iter().position(|x| x == e).expect("validated") + 1)
            .collect()
    }

    pub fn is_isomorphic(&self, other: &Biorder) -> bool {
        self.signature() == other.signature()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("biorder serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

impl fmt::Display for Biorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "size {}, l1=({}), l2=({})", self.size(), self.l1.join(","), self.l2.join(","))
    }
}

// All permutations of 0..h in lexicographic order.
fn permutations(h: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; h], &mut out);
    out
}

/// The `0`-separated blocks of a non-empty word.
pub fn blocks(a: &NormalWord) -> Result<Vec<Word>, GadgetError> {
    if a.is_empty() {
        return Err(GadgetError::EmptyWord);
    }
    Ok(a.split_at(0).expect("every symbol is at least 0"))
}

/// The first `m` blocks of `a`, rejoined with `0`.
pub fn slice(a: &NormalWord, m: usize) -> Result<NormalWord, GadgetError> {
    let bs = blocks(a)?;
    if m == 0 || m > bs.len() {
        return Err(GadgetError::SliceIndexOutOfRange { m, blocks: bs.len() });
    }
    let w = Word::join(&bs[..m], 0);
    NormalWord::new(w).map_err(|e| GadgetError::NormalityAssertionFailed(e.0))
}

/// The non-empty slices of `a`, shortest first.
pub fn slices(a: &NormalWord) -> Result<Vec<NormalWord>, GadgetError> {
    let r = blocks(a)?.len();
    let all: Result<Vec<_>, _> = (1..=r).map(|m| slice(a, m)).collect();
    Ok(all?.into_iter().filter(|s| !s.is_empty()).collect())
}

/// `b` is a non-empty slice of `a`.
pub fn is_slice(a: &NormalWord, b: &Word) -> bool {
    if a.is_empty() || b.is_empty() {
        return false;
    }
    let (a, b) = (a.symbols(), b.symbols());
    a.starts_with(b) && (b.len() == a.len() || a[b.len()] == 0)
}

/// The order-theoretic characterization of slices on words over `{0..3}`:
/// `b ≾ a` and `a ≺ ◇1 b`.
pub fn is_slice_formula(a: &NormalWord, b: &NormalWord) -> Result<bool, GadgetError> {
    for w in [a, b] {
        if !w.in_w(3) {
            return Err(GadgetError::NotInW3(w.as_word().clone()));
        }
    }
    Ok(!a.is_empty()
        && !b.is_empty()
        && b.compare(a) != Ordering::Greater
        && a.compare(&b.diamond(1)) == Ordering::Less)
}

/// `I_s = 3^s 2`.
pub fn word_i(s: usize) -> Word {
    Word::repeat(3, s).push(2)
}

// I_{hi} I_{hi-1} … I_{lo}; empty when hi < lo.
fn i_product(hi: usize, lo: usize) -> Vec<Symbol> {
    (lo..=hi).rev().flat_map(|s| word_i(s).into_symbols()).collect()
}

/// `I_hi I_{hi-1} … I_lo`, empty when `hi < lo`.
pub fn i_product_word(hi: usize, lo: usize) -> Word {
    Word::new(i_product(hi, lo))
}

/// `K_{h,k} = I_{h-1} … I_k 3^k` for `1 ≤ k ≤ h`.
pub fn word_k(h: usize, k: usize) -> Result<NormalWord, GadgetError> {
    if k == 0 || k > h {
        return Err(GadgetError::BadIndex(format!("K needs 1 <= k <= h, got h={h}, k={k}")));
    }
    let mut symbols = i_product(h - 1, k);
    symbols.extend(std::iter::repeat_n(3, k));
    NormalWord::new(Word::new(symbols)).map_err(|e| GadgetError::NormalityAssertionFailed(e.0))
}

/// `L_h = I_{h-1} … I_1`; `L_1` is empty.
pub fn word_l(h: usize) -> Result<Word, GadgetError> {
    if h == 0 {
        return Err(GadgetError::BadIndex("L needs h >= 1".into()));
    }
    Ok(Word::new(i_product(h - 1, 1)))
}

/// `(u₁, …, u_r)` where `uᵢ = ◇3` of the slice made of all but the last
/// `i - 1` blocks.
///
/// The empty word counts as a single empty block here, so that the literal
/// construction for `h = 1, k = (1)` still has `u = (K_{1,1})`.
pub fn u_sequence(a: &NormalWord) -> Result<Vec<NormalWord>, GadgetError> {
    if !a.in_w(3) {
        return Err(GadgetError::NotInW3(a.as_word().clone()));
    }
    if a.is_empty() {
        return Ok(vec![a.diamond(3)]);
    }
    let r = blocks(a)?.len();
    (1..=r).map(|i| Ok(slice(a, r - i + 1)?.diamond(3))).collect()
}

/// The word whose `u`-sequence is `(K_{h,k₁}, …, K_{h,k_r})`.
///
/// Blocks are `(L_h 1)^{i-1} C_i` for `i = r, …, 1` from left to right, with
/// `C_i = I_{h-1} … I_{k_i} 3^{k_i - 1}`.
pub fn build_from_indices(h: usize, ks: &[usize]) -> Result<NormalWord, GadgetError> {
    if h == 0 {
        return Err(GadgetError::BadIndex("h must be at least 1".into()));
    }
    if ks.is_empty() {
        return Err(GadgetError::BadIndex("no indices given".into()));
    }
    if let Some(&k) = ks.iter().find(|&&k| k == 0 || k > h) {
        return Err(GadgetError::BadIndex(format!("index {k} outside 1..={h}")));
    }
    let mut l_one = word_l(h)?.into_symbols();
    l_one.push(1);
    let r = ks.len();
    let mut blocks = Vec::with_capacity(r);
    for i in (1..=r).rev() {
        let k = ks[i - 1];
        let mut block = l_one.repeat(i - 1);
        block.extend(i_product(h - 1, k));
        block.extend(std::iter::repeat_n(3, k - 1));
        blocks.push(Word::new(block));
    }
    let w = Word::join(&blocks, 0);
    NormalWord::new(w).map_err(|e| GadgetError::NormalityAssertionFailed(e.0))
}

/// Reads the biorder encoded by `a`, labelling elements `b1..bh` by first-order rank.
pub fn decode_biorder(a: &NormalWord) -> Result<Biorder, GadgetError> {
    if !a.in_w(3) {
        return Err(GadgetError::NotInW3(a.as_word().clone()));
    }
    let mut domain = slices(a)?;
    domain.sort_by(|x, y| x.compare(y));
    let images: Vec<NormalWord> = domain.iter().map(|s| s.diamond(3)).collect();
    let strict = |ws: &[NormalWord], sorted: bool| {
        let mut ws: Vec<&NormalWord> = ws.iter().collect();
        if !sorted {
            ws.sort_by(|x, y| x.compare(y));
        }
        ws.windows(2).all(|p| p[0].compare(p[1]) == Ordering::Less)
    };
    if domain.is_empty() || !strict(&domain, true) || !strict(&images, false) {
        return Err(GadgetError::NotABiorderEncoding(a.as_word().clone()));
    }
    let mut by_image: Vec<usize> = (0..domain.len()).collect();
    by_image.sort_by(|&x, &y| images[x].compare(&images[y]));
    Biorder::from_permutation(&by_image)
}

/// A word whose decoding is isomorphic to `m`.
pub fn encode_biorder(m: &Biorder) -> NormalWord {
    let h = m.size();
    if h == 1 {
        // The literal construction gives the empty word, which has no slice.
        return NormalWord::new(Word::from([3])).expect("normal");
    }
    let rank = m.signature();
    let ks: Vec<usize> = (1..=h).map(|i| rank[h - i]).collect();
    build_from_indices(h, &ks).expect("indices are ranks in 1..=h and the construction is normal")
}

/// Outcome of [`w3_gate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum W3Verdict {
    /// No counterexample within the search bound.
    Holds,
    /// `witness` is a `y ≺ x` with `◇3 y ⊀ x`; `None` when `x` is empty.
    Refuted { witness: Option<Word> },
}

/// Bounded check that `x ≠ e` and `◇3 y ≺ x` for every normal `y ≺ x` with
/// symbols `≤ max_symbol` and length `≤ max_len`. Witnesses are the first in
/// shortlex order.
pub fn w3_gate(x: &NormalWord, max_symbol: Symbol, max_len: usize) -> W3Verdict {
    if x.is_empty() {
        return W3Verdict::Refuted { witness: None };
    }
    for y in shortlex(max_symbol, max_len) {
        let Ok(y) = NormalWord::new(y) else { continue };
        if y.compare(x) == Ordering::Less && y.diamond(3).compare(x) != Ordering::Less {
            return W3Verdict::Refuted { witness: Some(y.into_word()) };
        }
    }
    W3Verdict::Holds
}

/// Membership in the words over `{0..3}` decided by comparison with `(4)`.
pub fn w3_by_comparison(a: &NormalWord) -> bool {
    compare(a, &Word::from([4])) == Ordering::Less
}

/// Normalizes before decoding.
pub fn decode_word(a: &Word) -> Result<Biorder, GadgetError> {
    decode_biorder(&normalize(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal::enumerate_normal;

    fn nw<const N: usize>(s: [Symbol; N]) -> NormalWord {
        NormalWord::new(Word::from(s)).unwrap()
    }

    fn words(v: Vec<NormalWord>) -> Vec<Word> {
        v.into_iter().map(NormalWord::into_word).collect()
    }

    #[test]
    fn slice_examples() {
        assert_eq!(slice(&nw([1, 0, 1]), 1).unwrap(), nw([1]));
        let a = nw([3, 2, 1, 3, 0, 3, 2]);
        assert_eq!(slice(&a, 2).unwrap(), a);
        assert_eq!(slice(&a, 1).unwrap(), nw([3, 2, 1, 3]));
        assert_eq!(slice(&a, 3), Err(GadgetError::SliceIndexOutOfRange { m: 3, blocks: 2 }));
        assert_eq!(slice(&NormalWord::empty(), 1), Err(GadgetError::EmptyWord));
    }

    #[test]
    fn is_slice_examples() {
        let a = nw([1, 0, 1]);
        assert!(is_slice(&a, &Word::from([1])));
        assert!(!is_slice(&a, &Word::from([1, 0])));
        assert!(is_slice(&a, &Word::from([1, 0, 1])));
        assert!(!is_slice(&nw([0]), &Word::empty()));
    }

    #[test]
    fn is_slice_formula_examples() {
        let a = nw([1, 0, 1]);
        assert_eq!(is_slice_formula(&a, &nw([1])), Ok(true));
        assert_eq!(is_slice_formula(&a, &nw([1, 0])), Ok(false));
        assert_eq!(is_slice_formula(&nw([3, 2, 1, 3, 0, 3, 2]), &nw([3, 2, 1, 3])), Ok(true));
        assert_eq!(is_slice_formula(&nw([4]), &nw([1])), Err(GadgetError::NotInW3(Word::from([4]))));
    }

    #[test]
    fn slice_formula_agrees_small() {
        let ws: Vec<NormalWord> = enumerate_normal(3, 4);
        for a in &ws {
            for b in &ws {
                assert_eq!(is_slice(a, b), is_slice_formula(a, b).unwrap(), "{a} / {b}");
            }
        }
    }

    #[test]
    fn i_k_l_examples() {
        assert_eq!(word_i(1), Word::from([3, 2]));
        assert_eq!(word_k(2, 1).unwrap(), nw([3, 2, 3]));
        assert_eq!(word_k(2, 2).unwrap(), nw([3, 3]));
        assert_eq!(word_l(1).unwrap(), Word::empty());
        assert_eq!(word_l(3).unwrap(), Word::from([3, 3, 2, 3, 2]));
        assert!(matches!(word_k(2, 3), Err(GadgetError::BadIndex(_))));
        assert!(matches!(word_k(2, 0), Err(GadgetError::BadIndex(_))));
        assert!(matches!(word_l(0), Err(GadgetError::BadIndex(_))));
    }

    #[test]
    fn k_chain() {
        for h in 2..=6 {
            for k in 1..h {
                assert_eq!(word_k(h, k).unwrap().compare(&word_k(h, k + 1).unwrap()), Ordering::Less);
            }
        }
    }

    #[test]
    fn l_bracketing() {
        for h in 1..=5 {
            let l = word_l(h).unwrap();
            for k in 1..=h {
                let mut low = i_product(h - 1, k);
                low.extend(std::iter::repeat_n(3, k - 1));
                assert_ne!(compare(&Word::new(low), &l), Ordering::Greater, "h={h} k={k}");
                assert_eq!(compare(&l, &word_k(h, k).unwrap()), Ordering::Less, "h={h} k={k}");
            }
        }
    }

    #[test]
    fn u_sequence_examples() {
        assert_eq!(words(u_sequence(&nw([3, 2])).unwrap()), vec![Word::from([3, 2, 3])]);
        assert_eq!(
            words(u_sequence(&nw([3, 2, 1, 3, 0, 3, 2])).unwrap()),
            vec![Word::from([3, 2, 3]), Word::from([3, 3])]
        );
        assert_eq!(
            u_sequence(&nw([3, 2, 1, 3, 2, 0, 3])).unwrap(),
            vec![word_k(2, 2).unwrap(), word_k(2, 1).unwrap()]
        );
        assert_eq!(u_sequence(&nw([4])), Err(GadgetError::NotInW3(Word::from([4]))));
    }

    #[test]
    fn build_examples() {
        assert_eq!(build_from_indices(2, &[1, 2]).unwrap(), nw([3, 2, 1, 3, 0, 3, 2]));
        assert_eq!(build_from_indices(2, &[2, 1]).unwrap(), nw([3, 2, 1, 3, 2, 0, 3]));
        let single = build_from_indices(1, &[1]).unwrap();
        assert_eq!(u_sequence(&single).unwrap(), vec![word_k(1, 1).unwrap()]);
        assert!(matches!(build_from_indices(2, &[3]), Err(GadgetError::BadIndex(_))));
        assert!(matches!(build_from_indices(2, &[]), Err(GadgetError::BadIndex(_))));
    }

    #[test]
    fn u_sequence_of_construction_small() {
        for h in 1..=3 {
            for ks in [vec![1], vec![h, 1], vec![1, h, 1]] {
                let expected: Vec<NormalWord> = ks.iter().map(|&k| word_k(h, k).unwrap()).collect();
                assert_eq!(u_sequence(&build_from_indices(h, &ks).unwrap()).unwrap(), expected);
            }
        }
    }

    #[test]
    fn decode_examples() {
        let b = decode_biorder(&nw([3, 2, 1, 3, 0, 3, 2])).unwrap();
        assert_eq!(b.l1(), ["b1", "b2"]);
        assert_eq!(b.l2(), ["b2", "b1"]);
        let b = decode_biorder(&nw([3, 2, 1, 3, 2, 0, 3])).unwrap();
        assert_eq!(b.l2(), ["b1", "b2"]);
        assert_eq!(
            decode_biorder(&nw([1, 0, 1])),
            Err(GadgetError::NotABiorderEncoding(Word::from([1, 0, 1])))
        );
        assert_eq!(decode_biorder(&NormalWord::empty()), Err(GadgetError::EmptyWord));
    }

    #[test]
    fn encode_examples() {
        let rev = Biorder::from_permutation(&[1, 0]).unwrap();
        assert_eq!(encode_biorder(&rev), nw([3, 2, 1, 3, 0, 3, 2]));
        let id = Biorder::from_permutation(&[0, 1]).unwrap();
        assert_eq!(encode_biorder(&id), nw([3, 2, 1, 3, 2, 0, 3]));
        assert_eq!(encode_biorder(&Biorder::from_permutation(&[0]).unwrap()), nw([3]));
    }

    #[test]
    fn round_trip_up_to_three() {
        for h in 1..=3 {
            for m in Biorder::all_of_size(h) {
                assert!(decode_biorder(&encode_biorder(&m)).unwrap().is_isomorphic(&m), "{m}");
            }
        }
    }

    #[test]
    fn biorder_json() {
        let text = r#"{"elements":["x","y"],"l1":["y","x"],"l2":["x","y"]}"#;
        let b = Biorder::from_json(text).unwrap();
        assert_eq!(b.signature(), vec![2, 1]);
        assert_eq!(b.to_json(), text);
        assert!(Biorder::from_json(r#"{"elements":["x"],"l1":["x"],"l2":["y"]}"#).is_err());
        assert!(Biorder::from_json(r#"{"elements":["x","x"],"l1":["x","x"],"l2":["x","x"]}"#).is_err());
        assert!(Biorder::from_json(r#"{"elements":[""],"l1":[""],"l2":[""]}"#).is_err());
        assert!(Biorder::from_json(r#"{"elements":[],"l1":[],"l2":[]}"#).is_err());
    }

    #[test]
    fn gate_examples() {
        assert_eq!(w3_gate(&nw([4]), 4, 6), W3Verdict::Holds);
        assert_eq!(w3_gate(&nw([3]), 4, 6), W3Verdict::Refuted { witness: Some(Word::empty()) });
        assert_eq!(w3_gate(&NormalWord::empty(), 4, 6), W3Verdict::Refuted { witness: None });
    }

    #[test]
    fn comparison_examples() {
        assert!(w3_by_comparison(&nw([3, 3])));
        assert!(!w3_by_comparison(&nw([4])));
        assert!(!w3_by_comparison(&nw([5])));
    }
}
