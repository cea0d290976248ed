mod common;

use common::word_strategy;
use marked_groups::word::{longest_common_prefix, reduced_words, Alphabet, Letter, Word};
use proptest::prelude::*;

proptest! {
    #[test]
    fn free_reduce_is_idempotent(w in word_strategy(3, 30)) {
        let r = w.free_reduce();
        prop_assert!(r.is_reduced());
        prop_assert_eq!(r.free_reduce(), r);
    }

    #[test]
    fn free_reduce_is_confluent(w in word_strategy(3, 20), pos in 0usize..21, idx in 0usize..6) {
        // inserting a cancelling pair anywhere does not change the result
        let pos = pos.min(w.len());
        let x = Letter::from_index(idx);
        let mut ls = w.letters().to_vec();
        ls.splice(pos..pos, [x, x.inverse()]);
        prop_assert_eq!(Word::from_letters(ls).free_reduce(), w.free_reduce());
    }

    #[test]
    fn reduction_preserves_parity(w in word_strategy(2, 40)) {
        prop_assert_eq!(w.len() % 2, w.free_reduce().len() % 2);
    }

    #[test]
    fn inverse_cancels(w in word_strategy(3, 40)) {
        prop_assert!(w.mul(&w.inverse()).is_empty());
        prop_assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn cyclic_reduce_is_a_conjugate(w in word_strategy(2, 30)) {
        let (prefix, core) = w.cyclic_decompose();
        prop_assert!(core.is_cyclically_reduced());
        prop_assert_eq!(&core, &w.cyclic_reduce());
        let back = prefix.concat(&core).concat(&prefix.inverse()).free_reduce();
        prop_assert_eq!(back, w.free_reduce());
    }

    #[test]
    fn rotations_are_conjugates(w in word_strategy(2, 20), k in 0usize..20) {
        let c = w.cyclic_reduce();
        if !c.is_empty() {
            let k = k % c.len();
            let head = Word::from_letters(c.letters()[..k].to_vec());
            prop_assert_eq!(c.rotate(k), head.inverse().mul(&c).mul(&head));
        }
    }

    #[test]
    fn common_prefix_bound(u in word_strategy(2, 12), v in word_strategy(2, 12)) {
        let n = longest_common_prefix(u.letters(), v.letters());
        prop_assert!(n <= u.len().min(v.len()));
        prop_assert_eq!(&u.letters()[..n], &v.letters()[..n]);
        let is_prefix = u.starts_with(v.letters()) || v.starts_with(u.letters());
        prop_assert_eq!(n == u.len().min(v.len()), is_prefix);
    }

    #[test]
    fn text_round_trip(w in word_strategy(3, 25)) {
        let a = Alphabet::standard(3);
        let w = w.free_reduce();
        prop_assert_eq!(a.parse_word(&a.format_word(&w)).unwrap(), w);
    }
}

#[test]
fn reduced_word_counts() {
    for n in 1..=3usize {
        let words = reduced_words(n, 5);
        let mut expect = 1;
        let mut layer = 2 * n;
        for _ in 1..=5 {
            expect += layer;
            layer *= 2 * n - 1;
        }
        assert_eq!(words.len(), expect);
        assert!(words.windows(2).all(|w| w[0] < w[1]));
        assert!(words.iter().all(Word::is_reduced));
    }
}
