#![allow(dead_code)]

use burau::BraidWord;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_word(rng: &mut ChaCha8Rng, strings: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strings as i64);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(strings, letters).unwrap()
}

/// Deterministic fuzz corpus: `count` words on 2..=max_strings strings.
pub fn fuzz_corpus(seed: u64, count: usize, max_strings: usize, max_len: usize) -> Vec<BraidWord> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(2..=max_strings);
            random_word(&mut r, n, max_len)
        })
        .collect()
}

pub mod strategies {
    use burau::BraidWord;
    use proptest::prelude::*;

    pub fn letter(strings: usize) -> impl Strategy<Value = i64> {
        (1..strings as i64, any::<bool>()).prop_map(|(g, pos)| if pos { g } else { -g })
    }

    pub fn word_on(strings: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
        prop::collection::vec(letter(strings), 0..=max_len)
            .prop_map(move |letters| BraidWord::new(strings, letters).unwrap())
    }

    pub fn word(max_strings: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
        (2..=max_strings).prop_flat_map(move |n| word_on(n, max_len))
    }

    /// Two words on the same number of strings.
    pub fn word_pair(max_strings: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
        (2..=max_strings).prop_flat_map(move |n| (word_on(n, max_len), word_on(n, max_len)))
    }
}
