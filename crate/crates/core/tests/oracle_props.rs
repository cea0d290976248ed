mod common;

use common::{random_word, word_strategy};
use marked_groups::oracle::{build_oracle, DehnOracle, GroupOracle};
use marked_groups::presentation::parse_presentation;
use marked_groups::word::{Letter, Word};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn oracle(spec: &str) -> std::sync::Arc<dyn GroupOracle> {
    build_oracle(spec).unwrap().oracle
}

fn dehn(text: &str) -> DehnOracle {
    DehnOracle::new(parse_presentation(text).unwrap().presentation, "pres".into()).unwrap()
}

/// Inserts a relator conjugate at a random position, giving a word equal
/// to `w` in the group.
fn insert_relator(rng: &mut StdRng, w: &Word, relators: &[Word]) -> Word {
    let r = &relators[rng.gen_range(0..relators.len())];
    let r = if rng.gen() { r.inverse() } else { r.clone() };
    let pos = rng.gen_range(0..=w.len());
    let mut ls = w.letters()[..pos].to_vec();
    ls.extend_from_slice(r.letters());
    ls.extend_from_slice(&w.letters()[pos..]);
    Word::from_letters(ls)
}

#[test]
fn congruence_spot_checks() {
    let mut rng = StdRng::seed_from_u64(7);
    for spec in ["free:2", "cyclic:6", "zn:3", "Ap:3", "Bp:3", "Hp:2", "Hp:3"] {
        let o = oracle(spec);
        let relators: Vec<Word> =
            marked_groups::families::build_family(spec).unwrap().presentation.map(|p| p.relators().to_vec()).unwrap_or_default();
        for _ in 0..300 {
            let u = random_word(&mut rng, o.arity(), 10);
            let v = if relators.is_empty() { u.free_reduce() } else { insert_relator(&mut rng, &u, &relators) };
            let w = random_word(&mut rng, o.arity(), 6);
            assert_eq!(o.normal_form(&u), o.normal_form(&v), "{spec}");
            assert_eq!(o.normal_form(&w.concat(&u)), o.normal_form(&w.concat(&v)), "{spec}");
            assert_eq!(o.normal_form(&u.concat(&w)), o.normal_form(&v.concat(&w)), "{spec}");
        }
        assert_eq!(o.normal_form(&Word::empty()), o.identity_key());
    }
}

#[test]
fn hp_generators_and_action() {
    for p in [2usize, 3, 5] {
        let o = oracle(&format!("Hp:{p}"));
        let a = |i: usize| Word::letter(Letter::pos(i));
        for i in 0..p {
            assert_eq!(o.normal_form(&a(i).pow(p)), o.identity_key());
            for j in 1..p {
                assert_ne!(o.normal_form(&a(i).pow(j)), o.identity_key());
            }
        }
        for t in [p, p + 1] {
            for i in 0..p {
                // t⁻¹ a_i t = a_{i+1}
                let conj = a(t).inverse().concat(&a(i)).concat(&a(t));
                assert_eq!(o.normal_form(&conj), o.normal_form(&a((i + 1) % p)));
            }
        }
    }
}

#[test]
fn dehn_agrees_with_structural_families() {
    let mut rng = StdRng::seed_from_u64(11);
    let cases = [("cyclic:7", "gens: a\nrel: a^7"), ("Bp:3", "gens: c d\nrel: c^3\nrel: d^3"), ("Bp:5", "gens: c d\nrel: c^5\nrel: d^5")];
    for (spec, text) in cases {
        let s = oracle(spec);
        let d = dehn(text);
        let rels = d.presentation().unwrap().relators().to_vec();
        for _ in 0..500 {
            let u = random_word(&mut rng, s.arity(), 10);
            let v = if rng.gen() { insert_relator(&mut rng, &u, &rels) } else { random_word(&mut rng, s.arity(), 10) };
            assert_eq!(d.equal(&u, &v), s.normal_form(&u) == s.normal_form(&v), "{spec}: {u:?} {v:?}");
            assert_eq!(d.normal_form(&u) == d.normal_form(&v), s.normal_form(&u) == s.normal_form(&v));
        }
    }
}

proptest! {
    #[test]
    fn dehn_steps_shorten(w in word_strategy(2, 24)) {
        let d = dehn("gens: c d\nrel: c^3\nrel: d^3");
        let trace = d.algorithm().reduce(&w);
        prop_assert!(trace.steps.len() <= w.len());
        prop_assert_eq!(trace.replay(d.algorithm().symmetrized()).unwrap(), trace.final_word.clone());
    }

    #[test]
    fn free_product_keys_match_dehn(u in word_strategy(2, 12), v in word_strategy(2, 12)) {
        let s = oracle("Bp:3");
        let d = dehn("gens: c d\nrel: c^3\nrel: d^3");
        prop_assert_eq!(d.equal(&u, &v), s.normal_form(&u) == s.normal_form(&v));
    }
}
