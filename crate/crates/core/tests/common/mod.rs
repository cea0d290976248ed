#![allow(dead_code)]

use marked_groups::word::{reduced_words, Letter, Word};
use marked_groups::MarkedGroup;
use proptest::prelude::*;
use rand::Rng;

pub fn word_strategy(arity: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..2 * arity, 0..=max_len).prop_map(|idx| Word::from_letters(idx.into_iter().map(Letter::from_index).collect()))
}

pub fn random_word(rng: &mut impl Rng, arity: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| Letter::from_index(rng.gen_range(0..2 * arity))).collect())
}

/// Equality pattern of the radius-`r` ball read off words directly: for
/// every reduced word `w` of length `≤ r + 1` and `v` of length `≤ r`,
/// whether `w = v` in the group. Words of length `r + 1` cover the edges
/// leaving the ball, which the ball signature also records.
pub fn brute_pattern(m: &MarkedGroup, r: usize) -> Vec<bool> {
    let outer = reduced_words(m.arity(), r + 1);
    let inner_len = outer.iter().take_while(|w| w.len() <= r).count();
    let keys: Vec<_> = outer.iter().map(|w| m.key(w)).collect();
    let mut out = Vec::with_capacity(outer.len() * inner_len);
    for k in &keys {
        for kv in &keys[..inner_len] {
            out.push(k == kv);
        }
    }
    out
}
