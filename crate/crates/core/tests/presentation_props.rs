mod common;

use common::word_strategy;
use marked_groups::presentation::{check_small_cancellation, symmetrize, Presentation};
use marked_groups::word::{Alphabet, Letter, Word};
use num_rational::Ratio;
use proptest::prelude::*;

fn presentation_strategy() -> impl Strategy<Value = Presentation> {
    prop::collection::vec(word_strategy(2, 12), 1..4).prop_filter_map("trivial relator", |ws| {
        let rels: Vec<Word> = ws.iter().map(Word::cyclic_reduce).collect();
        if rels.iter().any(Word::is_empty) {
            return None;
        }
        Presentation::new(Alphabet::standard(2), rels).ok()
    })
}

fn with_relators(p: &Presentation, rels: Vec<Word>) -> Presentation {
    Presentation::new(p.alphabet().clone(), rels).unwrap()
}

proptest! {
    #[test]
    fn symmetrized_set_is_closed(p in presentation_strategy()) {
        let sym = symmetrize(&p);
        for w in sym.words() {
            prop_assert!(sym.contains(&w.inverse()));
            prop_assert!(sym.contains(&w.rotate(1)));
        }
        for r in p.relators() {
            prop_assert!(sym.contains(r));
        }
    }

    #[test]
    fn monotone_in_lambda(p in presentation_strategy(), n in 1u64..12, d in 1u64..12, extra in 0u64..5) {
        let lambda = Ratio::new(n, d);
        if check_small_cancellation(&p, lambda).passed {
            prop_assert!(check_small_cancellation(&p, lambda + Ratio::new(extra, d)).passed);
        }
    }

    #[test]
    fn ratio_invariant_under_shifts_and_inversion(p in presentation_strategy(), k in 0usize..12, which in 0usize..3, invert: bool) {
        let base = check_small_cancellation(&p, Ratio::new(1, 6)).max_ratio;
        let i = which % p.relators().len();
        let mut rels = p.relators().to_vec();
        let r = rels[i].rotate(k % rels[i].len());
        rels[i] = if invert { r.inverse() } else { r };
        let q = with_relators(&p, rels);
        prop_assert_eq!(check_small_cancellation(&q, Ratio::new(1, 6)).max_ratio, base);
    }

    #[test]
    fn ratio_invariant_under_renaming(p in presentation_strategy()) {
        let base = check_small_cancellation(&p, Ratio::new(1, 6)).max_ratio;
        let renamed = p.renamed(Alphabet::new(&["x", "y"]).unwrap()).unwrap();
        prop_assert_eq!(check_small_cancellation(&renamed, Ratio::new(1, 6)).max_ratio, base);
        // swapping the generators is a renaming too
        let swap = [Word::letter(Letter::pos(1)), Word::letter(Letter::pos(0))];
        let swapped = with_relators(&p, p.relators().iter().map(|r| r.substitute(&swap)).collect());
        prop_assert_eq!(check_small_cancellation(&swapped, Ratio::new(1, 6)).max_ratio, base);
    }

    #[test]
    fn single_relator_symmetrized_size(r in word_strategy(2, 14)) {
        let r = r.cyclic_reduce();
        let inv = r.inverse();
        let self_inverse_rotation = (0..r.len()).any(|k| r.rotate(k) == inv);
        if !r.is_empty() && r.primitive_period() == r.len() && !self_inverse_rotation {
            let p = Presentation::new(Alphabet::standard(2), vec![r.clone()]).unwrap();
            prop_assert_eq!(symmetrize(&p).len(), 2 * r.len());
        }
    }
}
