//! Randomized cross-checks on words longer than the exhaustive sweeps reach.

use std::cmp::Ordering;

use proptest::prelude::*;
use worms::correspondence::{ms_compare, o_map, word_of, word_to_multiset};
use worms::normal::normalize;
use worms::order::{compare, NaiveOracle};
use worms::word::Word;

fn word(max_symbol: u32, max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0..=max_symbol, 0..=max_len).prop_map(Word::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn greedy_matches_naive(a in word(4, 9), b in word(4, 9)) {
        let naive = NaiveOracle::default().compare(&a, &b).unwrap();
        prop_assert_eq!(compare(&a, &b), naive);
    }

    #[test]
    fn ordinals_mirror_words(a in word(5, 12), b in word(5, 12)) {
        let (na, nb) = (normalize(&a), normalize(&b));
        let (x, y) = (o_map(&na, 0).unwrap(), o_map(&nb, 0).unwrap());
        prop_assert_eq!(compare(&a, &b), x.cmp(&y));
        prop_assert_eq!(word_of(&x, 0), na.clone());
        prop_assert_eq!(ms_compare(&word_to_multiset(&na), &word_to_multiset(&nb)), x.cmp(&y));
    }

    #[test]
    fn transitivity_on_longer_words(a in word(3, 10), b in word(3, 10), c in word(3, 10)) {
        let (ab, bc) = (compare(&a, &b), compare(&b, &c));
        if ab == bc && ab != Ordering::Greater {
            prop_assert_eq!(compare(&a, &c), ab);
        }
    }
}
