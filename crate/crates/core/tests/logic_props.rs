use std::collections::HashMap;

use marked_groups::logic::{
    abelian_tables, eval_formula, find_phi_witness, phi, psi, shift_extension_table, tuple_vars, verify_phi_witness, FiniteGroupTable,
    Formula, Term, DEFAULT_BUDGET,
};
use proptest::prelude::*;

/// Direct transcription of the satisfaction relation, without budget or
/// short-circuiting.
fn naive(t: &FiniteGroupTable, f: &Formula, env: &HashMap<String, usize>) -> bool {
    fn term(t: &FiniteGroupTable, x: &Term, env: &HashMap<String, usize>) -> usize {
        match x {
            Term::One => 0,
            Term::Var(v) => env[v],
            Term::Mul(ts) => ts.iter().fold(0, |acc, s| t.mul(acc, term(t, s, env))),
            Term::Inv(s) => t.inv(term(t, s, env)),
        }
    }
    match f {
        Formula::Eq(a, b) => term(t, a, env) == term(t, b, env),
        Formula::Not(g) => !naive(t, g, env),
        Formula::And(gs) => gs.iter().map(|g| naive(t, g, env)).fold(true, |a, b| a & b),
        Formula::Or(gs) => gs.iter().map(|g| naive(t, g, env)).fold(false, |a, b| a | b),
        Formula::Forall(v, g) | Formula::Exists(v, g) => {
            let vals: Vec<bool> = (0..t.order())
                .map(|x| {
                    let mut e = env.clone();
                    e.insert(v.clone(), x);
                    naive(t, g, &e)
                })
                .collect();
            if matches!(f, Formula::Forall(..)) {
                vals.iter().all(|&b| b)
            } else {
                vals.iter().any(|&b| b)
            }
        }
    }
}

const VARS: [&str; 3] = ["a", "b", "c"];

fn term_strategy() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![Just(Term::One), (0..3usize).prop_map(|i| Term::var(VARS[i]))];
    leaf.prop_recursive(3, 8, 3, |inner| {
        prop_oneof![prop::collection::vec(inner.clone(), 2..4).prop_map(Term::Mul), inner.prop_map(Term::inv),]
    })
}

fn formula_strategy() -> impl Strategy<Value = Formula> {
    let atom = (term_strategy(), term_strategy()).prop_map(|(a, b)| Formula::eq(a, b));
    atom.prop_recursive(4, 16, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            prop::collection::vec(inner.clone(), 1..3).prop_map(Formula::And),
            prop::collection::vec(inner.clone(), 1..3).prop_map(Formula::Or),
            (0..3usize, inner.clone()).prop_map(|(i, f)| Formula::forall(VARS[i], f)),
            (0..3usize, inner).prop_map(|(i, f)| Formula::exists(VARS[i], f)),
        ]
    })
}

fn small_tables() -> Vec<FiniteGroupTable> {
    let z2 = FiniteGroupTable::cyclic(2);
    vec![FiniteGroupTable::trivial(), z2.clone(), FiniteGroupTable::cyclic(3), z2.product(&z2), shift_extension_table(2)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn evaluator_matches_naive_semantics(f in formula_strategy(), which in 0usize..5, vals in prop::collection::vec(0usize..8, 3)) {
        let t = &small_tables()[which];
        let env: Vec<(String, usize)> = VARS.iter().zip(&vals).map(|(v, &x)| (v.to_string(), x % t.order())).collect();
        let map: HashMap<String, usize> = env.iter().cloned().collect();
        let fast = eval_formula(t, &f, &env, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(fast, naive(t, &f, &map));
        prop_assert_eq!(eval_formula(t, &Formula::not(f.clone()), &env, DEFAULT_BUDGET).unwrap(), !fast);
    }
}

#[test]
fn phi_implies_psi_and_witnesses_verify() {
    let mut tables = abelian_tables(8);
    tables.extend(small_tables());
    let z2 = FiniteGroupTable::cyclic(2);
    tables.push(shift_extension_table(2).product(&z2));
    for t in &tables {
        for p in 1..=2 {
            let holds = eval_formula(t, &phi(p), &[], DEFAULT_BUDGET).unwrap();
            let witness = find_phi_witness(t, p, DEFAULT_BUDGET).unwrap();
            assert_eq!(holds, witness.is_some());
            if let Some(w) = witness {
                assert!(verify_phi_witness(t, p, &w).all());
                let some_psi = Formula::exists_all(&tuple_vars(p), psi(p));
                assert!(eval_formula(t, &some_psi, &[], DEFAULT_BUDGET).unwrap());
            }
            if t.is_abelian() {
                assert!(!holds);
            }
        }
    }
}

#[test]
fn phi_three_on_the_shift_extension() {
    let t = shift_extension_table(3);
    assert_eq!(t.order(), 81);
    let w = find_phi_witness(&t, 3, DEFAULT_BUDGET).unwrap().expect("the coordinate vectors witness phi_3");
    let check = verify_phi_witness(&t, 3, &w);
    assert!(check.all(), "{check:?}");
    // conjugation by h cycles the witness tuple
    let mut action = check.h_action.clone();
    action.sort_unstable();
    assert_eq!(action, vec![0, 1, 2]);
}
