//! The linear preorder on words.
//!
//! Two words are compared by splitting both at the smallest symbol `n`
//! occurring in either, reducing each side's list of parts to its
//! lexicographically maximal subsequence, and comparing those subsequences
//! lexicographically. The recursion bottoms out at `e ≾ e`.
//!
//! Results are reported as [`Ordering`]: `Less` is `≺`, `Equal` is `∼` and
//! `Greater` is `≻`.
//!
//! The maximal subsequence is found greedily from the right (keep an element
//! iff it is not below anything to its right). [`NaiveOracle`] replaces that
//! step by exhaustive search over all subsequences and serves as the
//! independent check of the greedy route.

use std::cmp::Ordering;
use std::convert::Infallible;
use std::fmt;

use smallvec::{smallvec, SmallVec};
use thiserror::Error;

use crate::word::{split_parts, Symbol, Word};

/// Default sequence-length limit of [`NaiveOracle`].
pub const DEFAULT_ORACLE_BOUND: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("index collections are only defined for non-empty sequences")]
    EmptySequence,
    #[error("sequence of length {len} exceeds the oracle bound {bound}")]
    OracleBoundExceeded { len: usize, bound: usize },
}

/// A strictly increasing list of 1-based positions into a sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexCollection(Vec<usize>);

impl IndexCollection {
    /// Builds a collection from 1-based indices, checking that they are
    /// non-zero and strictly increasing.
    pub fn new(indices: Vec<usize>) -> Option<Self> {
        let increasing = indices.windows(2).all(|p| p[0] < p[1]);
        let positive = indices.first().is_none_or(|&i| i >= 1);
        (increasing && positive).then_some(IndexCollection(indices))
    }

    fn from_zero_based(indices: Vec<usize>) -> Self {
        IndexCollection(indices.into_iter().map(|i| i + 1).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The subsequence of `xs` this collection selects.
    pub fn select<'a, T>(&self, xs: &'a [T]) -> Vec<&'a T> {
        self.0.iter().map(|&i| &xs[i - 1]).collect()
    }
}

impl fmt::Display for IndexCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub(crate) type Keep = SmallVec<[usize; 8]>;

/// Strategy for picking the lexicographically maximal subsequence.
///
/// `collect` returns 0-based indices and is only called on non-empty input.
trait Collector {
    type Error;
    fn collect(&self, parts: &[&[Symbol]]) -> Result<Keep, Self::Error>;
}

// The comparison exactly as defined, parameterised by the collection step.
fn compare_by<C: Collector>(c: &C, a: &[Symbol], b: &[Symbol]) -> Result<Ordering, C::Error> {
    let Some(&n) = a.iter().chain(b).min() else {
        return Ok(Ordering::Equal);
    };
    let pa = split_parts(a, n);
    let pb = split_parts(b, n);
    let ia = c.collect(&pa)?;
    let ib = c.collect(&pb)?;
    lex_by(
        |x, y| compare_by(c, x, y),
        ia.iter().map(|&i| pa[i]),
        ib.iter().map(|&i| pb[i]),
    )
}

/// First `∼`-mismatch decides; a proper prefix is smaller.
fn lex_by<T, E>(
    mut cmp: impl FnMut(T, T) -> Result<Ordering, E>,
    mut xs: impl Iterator<Item = T>,
    mut ys: impl Iterator<Item = T>,
) -> Result<Ordering, E> {
    loop {
        match (xs.next(), ys.next()) {
            (None, None) => return Ok(Ordering::Equal),
            (None, Some(_)) => return Ok(Ordering::Less),
            (Some(_), None) => return Ok(Ordering::Greater),
            (Some(x), Some(y)) => match cmp(x, y)? {
                Ordering::Equal => {}
                other => return Ok(other),
            },
        }
    }
}

fn unwrap_infallible<T>(r: Result<T, Infallible>) -> T {
    match r {
        Ok(v) => v,
        Err(never) => match never {},
    }
}

// Greedy route. Rather than recomputing collections at every level, each
// word is first brought to normal form bottom-up (normalize the parts, then
// keep the greedy maximal subsequence). Parts of a normal word are already
// non-increasing, so normal words compare by plain lexicographic recursion.

pub(crate) type Buf = SmallVec<[Symbol; 32]>;

/// Comparison of two words that are both in normal form.
pub(crate) fn compare_normal(a: &[Symbol], b: &[Symbol]) -> Ordering {
    let Some(&n) = a.iter().chain(b).min() else {
        return Ordering::Equal;
    };
    unwrap_infallible(lex_by(
        |x, y| Ok(compare_normal(x, y)),
        a.split(|&s| s == n),
        b.split(|&s| s == n),
    ))
}

/// Appends the normal form of `symbols` to `out`.
pub(crate) fn normal_form_into(symbols: &[Symbol], out: &mut Buf) {
    let Some(&n) = symbols.iter().min() else {
        return;
    };
    // Normalize every part in place, then compact down to the greedy
    // maximal subsequence.
    let base = out.len();
    let mut ranges: SmallVec<[(usize, usize); 8]> = SmallVec::new();
    for (k, part) in symbols.split(|&s| s == n).enumerate() {
        if k > 0 {
            out.push(n);
        }
        let start = out.len();
        normal_form_into(part, out);
        ranges.push((start, out.len()));
    }
    let mut keep: SmallVec<[(usize, usize); 8]> = SmallVec::new();
    let mut running_max = *ranges.last().expect("split yields a part");
    keep.push(running_max);
    for &(s, e) in ranges.iter().rev().skip(1) {
        let (ms, me) = running_max;
        if compare_normal(&out[s..e], &out[ms..me]) != Ordering::Less {
            running_max = (s, e);
            keep.push(running_max);
        }
    }
    let mut write = base;
    for (k, &(s, e)) in keep.iter().rev().enumerate() {
        if k > 0 {
            out[write] = n;
            write += 1;
        }
        out.copy_within(s..e, write);
        write += e - s;
    }
    // Parts only move left, so the write position never passes unread data.
    out.truncate(write);
}

// Greedy maximal subsequence of parts that are each in normal form.
fn greedy_normal(parts: &[&[Symbol]]) -> Keep {
    let last = parts.len() - 1;
    let mut keep: Keep = smallvec![last];
    let mut running_max = parts[last];
    for i in (0..last).rev() {
        if compare_normal(parts[i], running_max) != Ordering::Less {
            keep.push(i);
            running_max = parts[i];
        }
    }
    keep.reverse();
    keep
}

pub(crate) fn normal_form(symbols: &[Symbol]) -> Buf {
    let mut out = Buf::new();
    normal_form_into(symbols, &mut out);
    out
}

pub(crate) fn compare_symbols(a: &[Symbol], b: &[Symbol]) -> Ordering {
    compare_normal(&normal_form(a), &normal_form(b))
}

/// Greedy maximal subsequence of arbitrary words.
pub(crate) fn greedy_collection(parts: &[&[Symbol]]) -> Keep {
    let normal: Vec<Buf> = parts.iter().map(|p| normal_form(p)).collect();
    let refs: Vec<&[Symbol]> = normal.iter().map(|p| &p[..]).collect();
    greedy_normal(&refs)
}

/// Compares two words under `≾`.
pub fn compare(a: &Word, b: &Word) -> Ordering {
    compare_symbols(a.symbols(), b.symbols())
}

/// `a ≾ b`.
pub fn le(a: &Word, b: &Word) -> bool {
    compare(a, b) != Ordering::Greater
}

/// `a ≺ b`.
pub fn lt(a: &Word, b: &Word) -> bool {
    compare(a, b) == Ordering::Less
}

/// `a ∼ b`.
pub fn equiv(a: &Word, b: &Word) -> bool {
    compare(a, b) == Ordering::Equal
}

/// Lexicographic comparison of word sequences, elements compared by `≾`.
pub fn lex_compare(xs: &[Word], ys: &[Word]) -> Ordering {
    unwrap_infallible(lex_by(
        |x, y| Ok(compare_symbols(x, y)),
        xs.iter().map(Word::symbols),
        ys.iter().map(Word::symbols),
    ))
}

/// The unique index collection selecting the lexicographically maximal
/// subsequence of `xs`.
pub fn max_index_collection(xs: &[Word]) -> Result<IndexCollection, OrderError> {
    if xs.is_empty() {
        return Err(OrderError::EmptySequence);
    }
    let parts: Vec<&[Symbol]> = xs.iter().map(Word::symbols).collect();
    Ok(IndexCollection::from_zero_based(greedy_collection(&parts).into_vec()))
}

/// Exhaustive-search version of [`max_index_collection`] with the default bound.
pub fn max_index_collection_naive(xs: &[Word]) -> Result<IndexCollection, OrderError> {
    NaiveOracle::default().max_index_collection(xs)
}

/// Maximal collection of `xs ++ ys` assembled from the collections of the
/// two halves: keep the left collection up to the last element that is not
/// below the first kept element on the right, then the whole right collection.
pub fn concat_collection(xs: &[Word], ys: &[Word]) -> Result<IndexCollection, OrderError> {
    let left = max_index_collection(xs)?;
    let right = max_index_collection(ys)?;
    let right_head = &ys[right.indices()[0] - 1];
    let k = left
        .indices()
        .iter()
        .rposition(|&g| le(right_head, &xs[g - 1]))
        .map_or(0, |pos| pos + 1);
    let mut indices = left.indices()[..k].to_vec();
    indices.extend(right.indices().iter().map(|&h| xs.len() + h));
    Ok(IndexCollection(indices))
}

/// A comparator whose maximal-subsequence step enumerates every non-empty
/// subsequence. Exponential; only usable while every part list stays within
/// `bound` elements.
#[derive(Debug, Clone, Copy)]
pub struct NaiveOracle {
    pub bound: usize,
}

impl Default for NaiveOracle {
    fn default() -> Self {
        NaiveOracle { bound: DEFAULT_ORACLE_BOUND }
    }
}

impl Collector for NaiveOracle {
    type Error = OrderError;

    fn collect(&self, parts: &[&[Symbol]]) -> Result<Keep, OrderError> {
        let len = parts.len();
        if len == 0 {
            return Err(OrderError::EmptySequence);
        }
        if len > self.bound {
            return Err(OrderError::OracleBoundExceeded { len, bound: self.bound });
        }
        exhaustive_collection(len, |x, y| compare_by(self, parts[x], parts[y]))
    }
}

/// Tries every non-empty subsequence of `0..len`; `cmp` compares elements.
fn exhaustive_collection<E>(
    len: usize,
    mut cmp: impl FnMut(usize, usize) -> Result<Ordering, E>,
) -> Result<Keep, E> {
    let mut best = Keep::new();
    for mask in 1u32..(1u32 << len) {
        let candidate: Keep = (0..len).filter(|&i| mask & (1 << i) != 0).collect();
        if best.is_empty() {
            best = candidate;
            continue;
        }
        let verdict = lex_by(&mut cmp, candidate.iter().copied(), best.iter().copied())?;
        let better = match verdict {
            Ordering::Greater => true,
            Ordering::Less => false,
            // Equivalent values: prefer longer, then leftmost indices.
            Ordering::Equal => {
                (candidate.len(), std::cmp::Reverse(&candidate))
                    > (best.len(), std::cmp::Reverse(&best))
            }
        };
        if better {
            best = candidate;
        }
    }
    Ok(best)
}

impl NaiveOracle {
    pub fn with_bound(bound: usize) -> Self {
        NaiveOracle { bound }
    }

    /// The word comparison rebuilt on exhaustive subsequence search.
    pub fn compare(&self, a: &Word, b: &Word) -> Result<Ordering, OrderError> {
        compare_by(self, a.symbols(), b.symbols())
    }

    pub fn max_index_collection(&self, xs: &[Word]) -> Result<IndexCollection, OrderError> {
        let parts: Vec<&[Symbol]> = xs.iter().map(Word::symbols).collect();
        self.collect(&parts).map(|k| IndexCollection::from_zero_based(k.into_vec()))
    }
}

/// All verdicts of the naive comparator on the words with symbols
/// `≤ max_symbol` and length `≤ max_len`.
///
/// Entries are filled in order of total length, so every recursive
/// comparison the definition asks for is an earlier table entry, and every
/// maximal subsequence is found by exhaustive search. This is the naive
/// comparator with memoization; it never consults the greedy route.
#[derive(Debug, Clone)]
pub struct NaiveTable {
    max_symbol: Symbol,
    max_len: usize,
    offsets: Vec<usize>,
    verdicts: Vec<i8>,
}

impl NaiveTable {
    /// Fails if some word would split into more parts than the oracle bound.
    pub fn build(max_symbol: Symbol, max_len: usize) -> Result<Self, OrderError> {
        if max_len + 1 > DEFAULT_ORACLE_BOUND {
            return Err(OrderError::OracleBoundExceeded {
                len: max_len + 1,
                bound: DEFAULT_ORACLE_BOUND,
            });
        }
        let base = max_symbol as usize + 1;
        let mut offsets = vec![0];
        let mut layer = 1;
        for _ in 0..=max_len {
            offsets.push(offsets.last().unwrap() + layer);
            layer *= base;
        }
        let count = offsets[max_len + 1];
        let mut table = NaiveTable {
            max_symbol,
            max_len,
            offsets,
            verdicts: vec![0; count * count],
        };
        let words = crate::word::enumerate_words(max_symbol, max_len);
        let mut collections: Vec<Option<Keep>> = vec![None; count * base];
        for total in 0..=2 * max_len {
            for len_a in total.saturating_sub(max_len)..=total.min(max_len) {
                let len_b = total - len_a;
                for ia in table.offsets[len_a]..table.offsets[len_a + 1] {
                    for ib in table.offsets[len_b]..table.offsets[len_b + 1] {
                        let v = table.fill(&words, &mut collections, ia, ib);
                        table.verdicts[ia * count + ib] = v as i8;
                    }
                }
            }
        }
        Ok(table)
    }

    fn count(&self) -> usize {
        self.offsets[self.max_len + 1]
    }

    fn index(&self, symbols: &[Symbol]) -> usize {
        let base = self.max_symbol as usize + 1;
        self.offsets[symbols.len()] + symbols.iter().fold(0, |acc, &s| acc * base + s as usize)
    }

    fn lookup(&self, a: usize, b: usize) -> Ordering {
        self.verdicts[a * self.count() + b].cmp(&0)
    }

    fn fill(&self, words: &[Word], collections: &mut [Option<Keep>], ia: usize, ib: usize) -> Ordering {
        let (a, b) = (words[ia].symbols(), words[ib].symbols());
        let Some(&n) = a.iter().chain(b).min() else {
            return Ordering::Equal;
        };
        let pa: PartIds = split_parts(a, n).iter().map(|p| self.index(p)).collect();
        let pb: PartIds = split_parts(b, n).iter().map(|p| self.index(p)).collect();
        let ka = self.collection(collections, ia, n, &pa);
        let kb = self.collection(collections, ib, n, &pb);
        unwrap_infallible(lex_by(
            |x: usize, y: usize| Ok(self.lookup(x, y)),
            ka.iter().map(|&i| pa[i]),
            kb.iter().map(|&i| pb[i]),
        ))
    }

    fn collection(&self, cache: &mut [Option<Keep>], word: usize, n: Symbol, parts: &[usize]) -> Keep {
        let slot = word * (self.max_symbol as usize + 1) + n as usize;
        if let Some(k) = &cache[slot] {
            return k.clone();
        }
        let keep = unwrap_infallible(exhaustive_collection(parts.len(), |x, y| {
            Ok(self.lookup(parts[x], parts[y]))
        }));
        cache[slot] = Some(keep.clone());
        keep
    }

    pub fn max_symbol(&self) -> Symbol {
        self.max_symbol
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// The naive verdict, or `None` if a word is outside the table.
    pub fn compare(&self, a: &Word, b: &Word) -> Option<Ordering> {
        let fits = |w: &Word| w.len() <= self.max_len && w.in_w(self.max_symbol);
        (fits(a) && fits(b)).then(|| self.lookup(self.index(a.symbols()), self.index(b.symbols())))
    }

    /// Verdict by position in [`crate::word::enumerate_words`] order.
    pub fn compare_indices(&self, a: usize, b: usize) -> Ordering {
        self.lookup(a, b)
    }
}

type PartIds = SmallVec<[usize; 8]>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::enumerate_words;

    fn w<const N: usize>(s: [Symbol; N]) -> Word {
        Word::from(s)
    }

    fn ic<const N: usize>(i: [usize; N]) -> IndexCollection {
        IndexCollection::new(i.to_vec()).unwrap()
    }

    #[test]
    fn compare_examples() {
        let e = Word::empty();
        assert_eq!(compare(&e, &e), Ordering::Equal);
        assert_eq!(compare(&w([0]), &w([1])), Ordering::Less);
        assert_eq!(compare(&w([1, 1, 2]), &w([2])), Ordering::Equal);
        assert_eq!(compare(&w([1, 1]), &w([2])), Ordering::Less);
        assert_eq!(compare(&e, &w([5])), Ordering::Less);
        assert_eq!(compare(&w([4]), &w([3, 3, 3])), Ordering::Greater);
    }

    #[test]
    fn lex_examples() {
        let e = Word::empty();
        assert_eq!(lex_compare(std::slice::from_ref(&e), &[e.clone(), e.clone()]), Ordering::Less);
        assert_eq!(lex_compare(&[w([3])], &[w([3])]), Ordering::Equal);
        assert_eq!(lex_compare(&[w([3, 2]), w([3])], &[w([3, 2, 3])]), Ordering::Less);
        assert_eq!(lex_compare(&[], &[]), Ordering::Equal);
    }

    #[test]
    fn collection_examples() {
        let e = Word::empty();
        assert_eq!(max_index_collection(std::slice::from_ref(&e)).unwrap(), ic([1]));
        assert_eq!(max_index_collection(&[w([1]), e.clone(), w([1])]).unwrap(), ic([1, 3]));
        assert_eq!(max_index_collection(&[w([2]), w([1]), w([1])]).unwrap(), ic([1, 2, 3]));
        assert_eq!(max_index_collection(&[]), Err(OrderError::EmptySequence));
    }

    #[test]
    fn naive_examples() {
        let e = Word::empty();
        assert_eq!(max_index_collection_naive(std::slice::from_ref(&e)).unwrap(), ic([1]));
        assert_eq!(max_index_collection_naive(&[w([1]), e.clone(), w([1])]).unwrap(), ic([1, 3]));
        assert_eq!(max_index_collection_naive(&[]), Err(OrderError::EmptySequence));
        let long = vec![e; 13];
        assert_eq!(
            max_index_collection_naive(&long),
            Err(OrderError::OracleBoundExceeded { len: 13, bound: 12 })
        );
        assert_eq!(
            NaiveOracle::with_bound(2).compare(&w([0, 0, 0]), &w([1])),
            Err(OrderError::OracleBoundExceeded { len: 4, bound: 2 })
        );
    }

    #[test]
    fn concat_examples() {
        let e = Word::empty();
        assert_eq!(concat_collection(&[w([2])], &[w([1])]).unwrap(), ic([1, 2]));
        assert_eq!(concat_collection(&[w([1])], &[w([2])]).unwrap(), ic([2]));
        assert_eq!(concat_collection(std::slice::from_ref(&e), std::slice::from_ref(&e)).unwrap(), ic([1, 2]));
        assert_eq!(concat_collection(&[], &[e]), Err(OrderError::EmptySequence));
    }

    #[test]
    fn index_collection_validation() {
        assert!(IndexCollection::new(vec![1, 1]).is_none());
        assert!(IndexCollection::new(vec![0, 2]).is_none());
        assert!(IndexCollection::new(vec![]).is_some());
        assert_eq!(ic([1, 3]).to_string(), "(1,3)");
    }

    #[test]
    fn greedy_matches_naive_on_short_sequences() {
        let words = enumerate_words(3, 2);
        // all sequences of length <= 3 over the 21 words
        for a in &words {
            for b in &words {
                let xs = [a.clone(), b.clone()];
                assert_eq!(max_index_collection(&xs), max_index_collection_naive(&xs));
                for c in words.iter().step_by(3) {
                    let xs = [a.clone(), b.clone(), c.clone()];
                    assert_eq!(max_index_collection(&xs), max_index_collection_naive(&xs));
                }
            }
        }
    }

    #[test]
    fn preorder_laws_small() {
        let words = enumerate_words(2, 3);
        for a in &words {
            assert_eq!(compare(a, a), Ordering::Equal);
            for b in &words {
                assert_eq!(compare(a, b), compare(b, a).reverse(), "{a} vs {b}");
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn shift_invariance(a in proptest::collection::vec(0u32..4, 0..7),
                            b in proptest::collection::vec(0u32..4, 0..7)) {
            let (a, b) = (Word::new(a), Word::new(b));
            proptest::prop_assert_eq!(compare(&a, &b), compare(&a.shifted(1), &b.shifted(1)));
        }

        #[test]
        fn concat_collection_agrees(
            xs in proptest::collection::vec(proptest::collection::vec(0u32..4, 0..4), 1..7),
            ys in proptest::collection::vec(proptest::collection::vec(0u32..4, 0..4), 1..7),
        ) {
            let xs: Vec<Word> = xs.into_iter().map(Word::new).collect();
            let ys: Vec<Word> = ys.into_iter().map(Word::new).collect();
            let joined: Vec<Word> = xs.iter().chain(&ys).cloned().collect();
            proptest::prop_assert_eq!(concat_collection(&xs, &ys).unwrap(),
                                      max_index_collection(&joined).unwrap());
        }
    }

    #[test]
    fn naive_table_matches_naive_oracle() {
        let table = NaiveTable::build(2, 4).unwrap();
        let words = enumerate_words(2, 4);
        let oracle = NaiveOracle::default();
        for (i, a) in words.iter().enumerate() {
            for (j, b) in words.iter().enumerate().step_by(3) {
                let expected = oracle.compare(a, b).unwrap();
                assert_eq!(table.compare_indices(i, j), expected, "{a} vs {b}");
                assert_eq!(table.compare(a, b), Some(expected));
            }
        }
        assert_eq!(table.compare(&w([3]), &w([0])), None);
        assert!(NaiveTable::build(1, 12).is_err());
    }
}
