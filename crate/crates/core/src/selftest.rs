//! Invariant suites, each an exhaustive or seeded sweep over a bounded domain.
//!
//! Every suite returns the number of cases it checked, or the first failure
//! met while scanning in shortlex order, so counterexamples are minimal in
//! that order.

use std::cmp::Ordering;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::correspondence::{
    ms_compare, ms_diamond0, ms_diamond1, ms_diamond2, o_map, word_of, word_to_multiset,
};
use crate::gadget::{
    build_from_indices, decode_biorder, encode_biorder, i_product_word, is_slice,
    is_slice_formula, u_sequence, w3_by_comparison, w3_gate, word_k, word_l, Biorder, W3Verdict,
};
use crate::normal::{append_a, enumerate_normal, is_normal, normalize, NormalWord};
use crate::order::{compare, concat_collection, max_index_collection, NaiveTable};
use crate::ordinal::{
    cofinal, cofinal_index, enumerate_ordinals, is_r, omega_tail, omega_tower, psi, Ordinal,
};
use crate::word::{enumerate_words, Symbol, Word};

/// A violated invariant and the first counterexample found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub invariant: &'static str,
    pub counterexample: String,
}

pub type Outcome = Result<u64, Failure>;

fn ensure(cond: bool, invariant: &'static str, ce: impl FnOnce() -> String) -> Result<(), Failure> {
    if cond {
        Ok(())
    } else {
        Err(Failure { invariant, counterexample: ce() })
    }
}

/// All words up to a bound, with every pairwise verdict of [`compare`].
#[derive(Debug, Clone)]
pub struct WordDomain {
    max_symbol: Symbol,
    max_len: usize,
    words: Vec<Word>,
    verdicts: Vec<i8>,
}

impl WordDomain {
    pub fn new(max_symbol: Symbol, max_len: usize) -> Self {
        let words = enumerate_words(max_symbol, max_len);
        let mut verdicts = Vec::with_capacity(words.len() * words.len());
        for a in &words {
            verdicts.extend(words.iter().map(|b| compare(a, b) as i8));
        }
        WordDomain { max_symbol, max_len, words, verdicts }
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn verdict(&self, i: usize, j: usize) -> Ordering {
        self.verdicts[i * self.words.len() + j].cmp(&0)
    }
}

/// Reflexivity, antisymmetry up to `∼`, and transitivity on the whole domain.
///
/// Transitivity is checked without enumerating triples: the relation is a
/// total preorder iff every verdict agrees with comparing the number of
/// words strictly below each side.
pub fn preorder_laws(d: &WordDomain) -> Outcome {
    let n = d.words.len();
    for i in 0..n {
        ensure(d.verdict(i, i) == Ordering::Equal, "reflexivity", || d.words[i].to_string())?;
        for j in 0..n {
            ensure(d.verdict(i, j) == d.verdict(j, i).reverse(), "antisymmetry", || {
                format!("{} / {}", d.words[i], d.words[j])
            })?;
        }
    }
    let below: Vec<usize> = (0..n)
        .map(|i| (0..n).filter(|&j| d.verdict(j, i) == Ordering::Less).count())
        .collect();
    for i in 0..n {
        for j in 0..n {
            if d.verdict(i, j) != below[i].cmp(&below[j]) {
                return Err(Failure {
                    invariant: "transitivity",
                    counterexample: transitivity_witness(d).unwrap_or_else(|| {
                        format!("{} / {}", d.words[i], d.words[j])
                    }),
                });
            }
        }
    }
    Ok((n * n) as u64)
}

fn transitivity_witness(d: &WordDomain) -> Option<String> {
    let n = d.words.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let ab = d.verdict(a, b);
                let bc = d.verdict(b, c);
                if ab == bc && ab != Ordering::Greater && d.verdict(a, c) != ab {
                    return Some(format!("{} / {} / {}", d.words[a], d.words[b], d.words[c]));
                }
            }
        }
    }
    None
}

/// Transitivity on random triples: `<∘<` gives `<`, `∼∘∼` gives `∼`.
pub fn transitivity_sampled(d: &WordDomain, triples: u64, seed: u64) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = d.words.len();
    for _ in 0..triples {
        let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
        let ab = d.verdict(a, b);
        if ab != Ordering::Greater && d.verdict(b, c) == ab {
            ensure(d.verdict(a, c) == ab, "transitivity", || {
                format!("{} / {} / {}", d.words[a], d.words[b], d.words[c])
            })?;
        }
    }
    Ok(triples)
}

/// The greedy comparison agrees with the exhaustive-search comparator on
/// every pair of the domain.
pub fn oracle_agreement(d: &WordDomain) -> Outcome {
    let table = NaiveTable::build(d.max_symbol, d.max_len).map_err(|e| Failure {
        invariant: "oracle agreement",
        counterexample: e.to_string(),
    })?;
    let n = d.words.len();
    for i in 0..n {
        for j in 0..n {
            ensure(d.verdict(i, j) == table.compare_indices(i, j), "oracle agreement", || {
                format!("{} / {}", d.words[i], d.words[j])
            })?;
        }
    }
    Ok((n * n) as u64)
}

/// Words of length `0..=max_len` with symbols `≤ max_symbol`, uniform in length.
pub fn random_word(rng: &mut StdRng, max_symbol: Symbol, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new((0..len).map(|_| rng.gen_range(0..=max_symbol)).collect())
}

fn random_sequence(rng: &mut StdRng, max_symbol: Symbol, max_len: usize) -> Vec<Word> {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| random_word(rng, max_symbol, max_len)).collect()
}

/// The maximal collection of a concatenation, assembled from the halves,
/// equals the one computed directly.
pub fn concat_agreement(max_symbol: Symbol, max_len: usize, samples: u64, seed: u64) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..samples {
        let xs = random_sequence(&mut rng, max_symbol, max_len);
        let ys = random_sequence(&mut rng, max_symbol, max_len);
        let joined: Vec<Word> = xs.iter().chain(&ys).cloned().collect();
        let show = |v: &[Word]| v.iter().map(|w| format!("({w})")).collect::<Vec<_>>().join(" ");
        ensure(
            concat_collection(&xs, &ys).ok() == max_index_collection(&joined).ok(),
            "concatenated collection",
            || format!("{} | {}", show(&xs), show(&ys)),
        )?;
    }
    Ok(samples)
}

/// Verdicts are unchanged when every symbol is raised by one.
pub fn shift_invariance(d: &WordDomain) -> Outcome {
    let n = d.words.len();
    let shifted: Vec<Word> = d.words.iter().map(|w| w.shifted(1)).collect();
    for i in 0..n {
        for j in 0..n {
            ensure(compare(&shifted[i], &shifted[j]) == d.verdict(i, j), "shift invariance", || {
                format!("{} / {}", d.words[i], d.words[j])
            })?;
        }
    }
    Ok((n * n) as u64)
}

/// `a ∼ b` implies `a k ∼ b k` for every `k ≤ max_k`.
pub fn congruence(d: &WordDomain, max_k: Symbol) -> Outcome {
    let n = d.words.len();
    let mut cases = 0;
    for i in 0..n {
        for j in 0..n {
            if d.verdict(i, j) != Ordering::Equal {
                continue;
            }
            for k in 0..=max_k {
                cases += 1;
                ensure(
                    compare(&d.words[i].push(k), &d.words[j].push(k)) == Ordering::Equal,
                    "congruence",
                    || format!("{} / {} / {k}", d.words[i], d.words[j]),
                )?;
            }
        }
    }
    Ok(cases)
}

// All words pointwise at most `b`, in shortlex order.
fn pointwise_below(b: &Word) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for &s in b.symbols() {
        out = out
            .into_iter()
            .flat_map(|p: Vec<Symbol>| {
                (0..=s).map(move |t| {
                    let mut q = p.clone();
                    q.push(t);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(Word::new).collect()
}

/// `a ≾ d b c` whenever `a` is pointwise below `b`, strictly when `c` is
/// non-empty or the last symbols of `a` and `b` differ. Covers every `d`, `b`,
/// `c` with `|d| + |b| + |c| ≤ max_len`.
pub fn monotonicity(max_symbol: Symbol, max_len: usize) -> Outcome {
    let words = enumerate_words(max_symbol, max_len);
    let mut cases = 0;
    for b in &words {
        let below = pointwise_below(b);
        for d in words.iter().take_while(|d| d.len() + b.len() <= max_len) {
            let db = d.concat(b);
            for c in words.iter().take_while(|c| db.len() + c.len() <= max_len) {
                let dbc = db.concat(c);
                for a in &below {
                    cases += 1;
                    let v = compare(a, &dbc);
                    let strict = !c.is_empty() || a.last() != b.last();
                    let ok = if strict { v == Ordering::Less } else { v != Ordering::Greater };
                    ensure(ok, "monotonicity", || format!("a={a} d={d} b={b} c={c}"))?;
                }
            }
        }
    }
    Ok(cases)
}

/// Soundness, length, idempotence and uniqueness of normal forms.
pub fn normal_form_laws(d: &WordDomain) -> Outcome {
    let nfs: Vec<NormalWord> = d.words.iter().map(normalize).collect();
    for (a, nf) in d.words.iter().zip(&nfs) {
        ensure(is_normal(nf), "normal form is normal", || a.to_string())?;
        ensure(nf.len() <= a.len(), "normal form is no longer", || a.to_string())?;
        ensure(compare(a, nf) == Ordering::Equal, "normal form is equivalent", || a.to_string())?;
        ensure(normalize(nf) == *nf, "idempotence", || a.to_string())?;
        ensure(!is_normal(a) || nf.as_word() == a, "normal words are fixed", || a.to_string())?;
    }
    let n = d.words.len();
    for i in 0..n {
        for j in 0..n {
            if d.verdict(i, j) == Ordering::Equal {
                ensure(nfs[i] == nfs[j], "uniqueness", || format!("{} / {}", d.words[i], d.words[j]))?;
            }
        }
    }
    Ok((n * n) as u64)
}

/// `◇n a ∼ a n` and `a ≺ ◇n a` for normal `a` and `n ≤ max_symbol + 1`.
pub fn diamond_laws(max_symbol: Symbol, max_len: usize) -> Outcome {
    let mut cases = 0;
    for a in enumerate_normal(max_symbol, max_len) {
        for n in 0..=max_symbol + 1 {
            cases += 1;
            let dia = a.diamond(n);
            ensure(compare(&append_a(n, &a), &dia) == Ordering::Equal, "diamond coherence", || {
                format!("{a} / {n}")
            })?;
            ensure(a.compare(&dia) == Ordering::Less, "diamond growth", || format!("{a} / {n}"))?;
        }
    }
    Ok(cases)
}

/// `o_map(·, 0)` is order-preserving, lands below the right tower, and is
/// inverted by `word_of`; shifting a word up one level does not change its value.
pub fn isomorphism(max_symbol: Symbol, max_len: usize) -> Outcome {
    let words = enumerate_normal(max_symbol, max_len);
    let ords: Vec<Ordinal> = words.iter().map(|a| o_map(a, 0).expect("level 0")).collect();
    let towers: Vec<Ordinal> = (1..=max_symbol as usize + 1)
        .map(|k| omega_tower(k).expect("small tower"))
        .collect();
    for (a, x) in words.iter().zip(&ords) {
        let top = a.max_symbol().unwrap_or(0) as usize;
        ensure(*x < towers[top], "tower bound", || a.to_string())?;
        ensure(word_of(x, 0) == *a, "word_of inverts o_map", || a.to_string())?;
        let up = NormalWord::new(a.shifted(1)).map_err(|_| Failure {
            invariant: "shifted normal word",
            counterexample: a.to_string(),
        })?;
        ensure(o_map(&up, 1).ok().as_ref() == Some(x), "level shift", || a.to_string())?;
    }
    for (a, x) in words.iter().zip(&ords) {
        for (b, y) in words.iter().zip(&ords) {
            ensure(a.compare(b) == x.cmp(y), "order isomorphism", || format!("{a} / {b}"))?;
        }
    }
    Ok((words.len() * words.len()) as u64)
}

/// `o_map ∘ word_of` is the identity on ordinals below `ω_{tower}` of size `≤ max_size`.
pub fn ordinal_round_trip(max_size: u64, tower: usize) -> Outcome {
    let bound = omega_tower(tower).expect("small tower");
    let mut cases = 0;
    for alpha in enumerate_ordinals(max_size).into_iter().filter(|a| *a < bound) {
        cases += 1;
        let w = word_of(&alpha, 0);
        ensure(o_map(&w, 0).ok() == Some(alpha.clone()), "o_map inverts word_of", || {
            alpha.to_string()
        })?;
    }
    Ok(cases)
}

/// The multiset reading is order-faithful and commutes with `◇0`, `◇1`, `◇2`
/// on non-empty words.
pub fn multiset_model(max_symbol: Symbol, max_len: usize) -> Outcome {
    let words = enumerate_normal(max_symbol, max_len);
    let ms: Vec<_> = words.iter().map(word_to_multiset).collect();
    for (a, x) in words.iter().zip(&ms) {
        for (b, y) in words.iter().zip(&ms) {
            ensure(ms_compare(x, y) == a.compare(b), "multiset order", || format!("{a} / {b}"))?;
        }
    }
    for (a, x) in words.iter().zip(&ms).filter(|(a, _)| !a.is_empty()) {
        ensure(word_to_multiset(&a.diamond(0)) == ms_diamond0(x), "multiset ◇0", || a.to_string())?;
        ensure(word_to_multiset(&a.diamond(1)) == ms_diamond1(x), "multiset ◇1", || a.to_string())?;
        ensure(word_to_multiset(&a.diamond(2)) == ms_diamond2(x), "multiset ◇2", || a.to_string())?;
    }
    Ok((words.len() * words.len()) as u64)
}

/// `ψ(o₁(a)) = o₁(◇2 a)` for normal `a` over `{1..=max_symbol}`.
pub fn psi_bridge(max_symbol: Symbol, max_len: usize) -> Outcome {
    let mut cases = 0;
    for a in enumerate_normal(max_symbol.saturating_sub(1), max_len) {
        let a = NormalWord::new(a.shifted(1)).expect("shift preserves normality");
        cases += 1;
        let lhs = psi(&o_map(&a, 1).expect("level 1"));
        let rhs = o_map(&a.diamond(2), 1).expect("level 1");
        ensure(lhs == rhs, "ψ bridge", || a.to_string())?;
    }
    Ok(cases)
}

/// `ω²·a + ω·b + c` for `a + b + c ≤ total`, ascending.
pub fn below_omega_cubed(total: u64) -> Vec<Ordinal> {
    let mut out = Vec::new();
    for a in 0..=total {
        for b in 0..=total - a {
            for c in 0..=total - a - b {
                out.push(quadratic(a, b, c));
            }
        }
    }
    out.sort();
    out
}

fn quadratic(a: u64, b: u64, c: u64) -> Ordinal {
    let terms = [(Ordinal::from_nat(2), a), (Ordinal::one(), b), (Ordinal::zero(), c)];
    Ordinal::from_terms(terms.into_iter().filter(|t| t.1 > 0).collect()).expect("decreasing")
}

/// `β + 1` and `ψ(β)` are the first two `R`-successors of non-zero `β` among
/// [`below_omega_cubed`]`(total)`, and `1` is the only one of `0`. Candidates are all
/// `ω²·a + ω·b + c` with coefficients up to `coefficient_bound`.
pub fn psi_second_successor(total: u64, coefficient_bound: u64) -> Outcome {
    let mut candidates = Vec::new();
    for a in 0..=coefficient_bound {
        for b in 0..=coefficient_bound {
            for c in 0..=coefficient_bound {
                candidates.push(quadratic(a, b, c));
            }
        }
    }
    let mut cases = 0;
    // No fundamental sequence contains 0, so 0 has a single R-successor.
    ensure(is_r(&Ordinal::zero(), &Ordinal::one()), "R to successor", || "0".into())?;
    for g in candidates.iter().filter(|g| **g > Ordinal::one()) {
        cases += 1;
        ensure(!is_r(&Ordinal::zero(), g), "0 has one R-successor", || format!("0 / {g}"))?;
    }
    for beta in below_omega_cubed(total).into_iter().filter(|b| !b.is_zero()) {
        let (s, p) = (beta.succ(), psi(&beta));
        ensure(is_r(&beta, &s), "R to successor", || beta.to_string())?;
        ensure(is_r(&beta, &p), "R to ψ", || beta.to_string())?;
        ensure(s < p, "ψ beyond successor", || beta.to_string())?;
        for g in candidates.iter().filter(|g| s < **g && **g < p) {
            cases += 1;
            ensure(!is_r(&beta, g), "ψ is the second R-successor", || format!("{beta} / {g}"))?;
        }
    }
    Ok(cases)
}

/// Limits below `ω^(ω²)` with at most `max_summands` summands whose exponents
/// are `ω·p + q` with `p + q ≤ exponent_total`, ascending.
pub fn limits_below_omega_omega_squared(max_summands: usize, exponent_total: u64) -> Vec<Ordinal> {
    let mut exponents = Vec::new();
    for p in 0..=exponent_total {
        for q in 0..=exponent_total - p {
            let terms = [(Ordinal::one(), p), (Ordinal::zero(), q)];
            exponents.push(
                Ordinal::from_terms(terms.into_iter().filter(|t| t.1 > 0).collect()).expect("decreasing"),
            );
        }
    }
    exponents.sort();
    exponents.reverse();
    let mut out = Vec::new();
    // Non-increasing exponent sequences, as start positions into `exponents`.
    fn go(exps: &[Ordinal], from: usize, left: usize, acc: &mut Vec<Ordinal>, out: &mut Vec<Ordinal>) {
        if !acc.is_empty() {
            let sum = acc.iter().fold(Ordinal::zero(), |s, e| s + Ordinal::omega_pow(e.clone()));
            if sum.is_limit() {
                out.push(sum);
            }
        }
        if left == 0 {
            return;
        }
        for i in from..exps.len() {
            acc.push(exps[i].clone());
            go(exps, i, left - 1, acc, out);
            acc.pop();
        }
    }
    go(&exponents, 0, max_summands, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// Fundamental sequences lie below their limit, increase, and are inverted
/// by `cofinal_index`.
pub fn fundamental_sequences(limits: &[Ordinal], max_n: u64) -> Outcome {
    let mut cases = 0;
    for b in limits {
        let mut prev: Option<Ordinal> = None;
        for n in 0..=max_n {
            cases += 1;
            let x = cofinal(b, n).map_err(|e| Failure {
                invariant: "cofinal defined on limits",
                counterexample: format!("{b}: {e}"),
            })?;
            ensure(x < *b, "cofinal below limit", || format!("{b} / {n}"))?;
            ensure(prev.as_ref().is_none_or(|p| *p < x), "cofinal increasing", || {
                format!("{b} / {n}")
            })?;
            ensure(cofinal_index(b, &x) == Some(n), "cofinal_index inverts cofinal", || {
                format!("{b} / {n}")
            })?;
            prev = Some(x);
        }
    }
    Ok(cases)
}

/// The transitive closure of `R` on `segment` equals `<` there.
pub fn r_closure(segment: &[Ordinal]) -> Outcome {
    let n = segment.len();
    let mut reach: Vec<Vec<bool>> = segment
        .iter()
        .map(|a| segment.iter().map(|b| is_r(a, b)).collect())
        .collect();
    for k in 0..n {
        let via = reach[k].clone();
        for row in reach.iter_mut().filter(|row| row[k]) {
            for (r, &v) in row.iter_mut().zip(&via) {
                *r |= v;
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            ensure(reach[i][j] == (segment[i] < segment[j]), "R closure is <", || {
                format!("{} / {}", segment[i], segment[j])
            })?;
        }
    }
    Ok((n * n) as u64)
}

/// `omega_tail(ω_m) = ω^ω` for the given towers, and the tail fixes every
/// listed ordinal below `ω^ω`.
pub fn omega_tail_laws(towers: &[usize], sample: &[Ordinal]) -> Outcome {
    let omega_omega = Ordinal::omega_pow(Ordinal::omega());
    for &m in towers {
        let t = omega_tower(m).expect("small tower");
        ensure(omega_tail(&t) == omega_omega, "tail of a tower", || format!("m={m}"))?;
    }
    let fixed: Vec<&Ordinal> = sample.iter().filter(|a| **a < omega_omega).collect();
    for a in &fixed {
        ensure(omega_tail(a) == **a, "tail fixes small ordinals", || a.to_string())?;
    }
    Ok((towers.len() + fixed.len()) as u64)
}

/// Slices and their order-theoretic characterization agree on normal words
/// over `{0..3}` of length `≤ max_len`.
pub fn slice_characterization(max_len: usize) -> Outcome {
    let words = enumerate_normal(3, max_len);
    for a in &words {
        for b in &words {
            let formula = is_slice_formula(a, b).expect("words over 0..3");
            ensure(is_slice(a, b) == formula, "slice characterization", || format!("{a} / {b}"))?;
        }
    }
    Ok((words.len() * words.len()) as u64)
}

/// `K_{h,1} ≺ … ≺ K_{h,h}`, and `I_{h-1}…I_k 3^{k-1} ≾ L_h ≺ K_{h,k}`.
pub fn k_and_l_words(max_h_chain: usize, max_h_bracket: usize) -> Outcome {
    let mut cases = 0;
    for h in 2..=max_h_chain {
        for k in 1..h {
            cases += 1;
            let (lo, hi) = (word_k(h, k).expect("index"), word_k(h, k + 1).expect("index"));
            ensure(lo.compare(&hi) == Ordering::Less, "K chain", || format!("h={h} k={k}"))?;
        }
    }
    for h in 1..=max_h_bracket {
        let l = word_l(h).expect("index");
        for k in 1..=h {
            cases += 1;
            let low = i_product_word(h - 1, k).concat(&Word::repeat(3, k - 1));
            let top = word_k(h, k).expect("index");
            ensure(compare(&low, &l) != Ordering::Greater, "L lower bracket", || {
                format!("h={h} k={k}")
            })?;
            ensure(compare(&l, &top) == Ordering::Less, "L upper bracket", || format!("h={h} k={k}"))?;
        }
    }
    Ok(cases)
}

/// `u(build(h, k)) = (K_{h,k₁}, …)` for every `h ≤ max_h` and every index
/// vector of length `≤ max_r`.
pub fn u_sequence_identity(max_h: usize, max_r: usize) -> Outcome {
    let mut cases = 0;
    for h in 1..=max_h {
        let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..max_r {
            layer = layer
                .into_iter()
                .flat_map(|ks| {
                    (1..=h).map(move |k| {
                        let mut next = ks.clone();
                        next.push(k);
                        next
                    })
                })
                .collect();
            for ks in &layer {
                cases += 1;
                let show = || format!("h={h} k={ks:?}");
                let a = build_from_indices(h, ks).map_err(|e| Failure {
                    invariant: "construction",
                    counterexample: format!("{}: {e}", show()),
                })?;
                let expected: Vec<NormalWord> = ks.iter().map(|&k| word_k(h, k).expect("index")).collect();
                ensure(u_sequence(&a).ok() == Some(expected), "u-sequence of construction", show)?;
            }
        }
    }
    Ok(cases)
}

/// `decode ∘ encode` preserves every biorder of size `≤ max_size`, plus
/// `random` seeded biorders of size `random_size`.
pub fn biorder_round_trip(max_size: usize, random_size: usize, random: u64, seed: u64) -> Outcome {
    let mut cases = Vec::new();
    for h in 1..=max_size {
        cases.extend(Biorder::all_of_size(h));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..random {
        let mut perm: Vec<usize> = (0..random_size).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        cases.push(Biorder::from_permutation(&perm).expect("permutation"));
    }
    for m in &cases {
        let a = encode_biorder(m);
        let back = decode_biorder(&a).map_err(|e| Failure {
            invariant: "decode of encoding",
            counterexample: format!("{m}: {e}"),
        })?;
        ensure(back.is_isomorphic(m), "biorder round trip", || format!("{m} -> {a} -> {back}"))?;
    }
    Ok(cases.len() as u64)
}

/// Comparison with `(4)` decides membership in words over `{0..3}`; the
/// bounded gate holds at `(4)` and refutes each non-empty normal word over
/// `{0..3}` of length `≤ gate_len` with an explicit witness.
pub fn w3_definability(max_symbol: Symbol, max_len: usize, gate_len: usize, bound: (Symbol, usize)) -> Outcome {
    let mut cases = 0;
    for a in enumerate_normal(max_symbol, max_len) {
        cases += 1;
        ensure(w3_by_comparison(&a) == a.in_w(3), "membership by comparison", || a.to_string())?;
    }
    let four = NormalWord::new(Word::from([4])).expect("normal");
    ensure(w3_gate(&four, bound.0, bound.1) == W3Verdict::Holds, "gate holds at (4)", || {
        "4".into()
    })?;
    for x in enumerate_normal(3, gate_len).into_iter().filter(|x| !x.is_empty()) {
        cases += 1;
        let refuted = match w3_gate(&x, bound.0, bound.1) {
            W3Verdict::Refuted { witness: Some(y) } => {
                let y = NormalWord::new(y).expect("witnesses are normal");
                y.compare(&x) == Ordering::Less && y.diamond(3).compare(&x) != Ordering::Less
            }
            _ => false,
        };
        ensure(refuted, "gate refutes words over 0..3", || x.to_string())?;
    }
    Ok(cases)
}

/// One suite's result in a [`run`] report.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub cases: u64,
    pub seconds: f64,
    pub failure: Option<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Times `f` and packages its outcome.
pub fn timed(suite: &'static str, f: impl FnOnce() -> Outcome) -> SuiteReport {
    let start = Instant::now();
    let outcome = f();
    let seconds = start.elapsed().as_secs_f64();
    match outcome {
        Ok(cases) => SuiteReport { suite, cases, seconds, failure: None },
        Err(failure) => SuiteReport { suite, cases: 0, seconds, failure: Some(failure) },
    }
}

/// Every suite, with word domains bounded by `alphabet` (largest symbol) and
/// `max_len`, and ordinal and gadget suites at fixed desk-scale bounds.
pub fn run(alphabet: Symbol, max_len: usize) -> Vec<SuiteReport> {
    const SEED: u64 = 0x5eed;
    let domain = WordDomain::new(alphabet, max_len);
    let below_tower_three = enumerate_ordinals(6);
    vec![
        timed("preorder laws", || preorder_laws(&domain)),
        timed("sampled transitivity", || transitivity_sampled(&domain, 100_000, SEED)),
        timed("oracle agreement", || oracle_agreement(&domain)),
        timed("concatenated collection", || concat_agreement(alphabet, max_len, 10_000, SEED)),
        timed("shift invariance", || shift_invariance(&domain)),
        timed("congruence", || congruence(&domain, alphabet + 1)),
        timed("monotonicity", || monotonicity(alphabet, max_len)),
        timed("normal forms", || normal_form_laws(&domain)),
        timed("diamond laws", || diamond_laws(alphabet, max_len)),
        timed("isomorphism", || isomorphism(alphabet, max_len)),
        timed("ordinal round trip", || ordinal_round_trip(6, 3)),
        timed("multiset model", || multiset_model(alphabet, max_len)),
        timed("ψ bridge", || psi_bridge(alphabet, max_len)),
        timed("ψ second R-successor", || psi_second_successor(4, 8)),
        timed("fundamental sequences", || {
            fundamental_sequences(&limits_below_omega_omega_squared(4, 4), 5)
        }),
        timed("R closure", || r_closure(&below_omega_cubed(3))),
        timed("ω-tail", || omega_tail_laws(&[3, 4, 5], &below_tower_three)),
        timed("slice characterization", || slice_characterization(max_len)),
        timed("K and L words", || k_and_l_words(6, 5)),
        timed("u-sequence identity", || u_sequence_identity(4, 4)),
        timed("biorder round trip", || biorder_round_trip(4, 5, 20, SEED)),
        timed("W3 definability", || w3_definability(alphabet.max(5), max_len, max_len, (4, max_len + 1))),
    ]
}
