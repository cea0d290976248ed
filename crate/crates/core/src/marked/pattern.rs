//! Finite existential sentences describing a radius-`r` ball.

use crate::error::MarkedError;
use crate::logic::formula::{tuple_vars, Formula, Term};
use crate::marked::{ball, MarkedGroup};
use crate::word::{Letter, Word};

fn conj(mut fs: Vec<Formula>) -> Formula {
    if fs.len() == 1 {
        fs.pop().expect("one conjunct")
    } else {
        Formula::And(fs)
    }
}

/// `∃x_1..x_n` of the conjunction describing the radius-`r` ball of `m`:
/// ball vertices are pairwise distinct, every edge inside the ball holds,
/// and every edge leaving the ball misses all of its vertices. A group
/// satisfies it iff it has a tuple whose radius-`r` ball is isomorphic to
/// that of `m`.
///
/// Vertices are named by their shortlex representatives. Edges whose two
/// sides are equal as reduced words are dropped, and each edge inside the
/// ball is written once (its reverse is equivalent).
pub fn pattern_sentence(m: &MarkedGroup, r: usize, cap: usize) -> Result<Formula, MarkedError> {
    let g = ball(m, r, cap)?;
    let vars = tuple_vars(m.arity());
    let term = |w: &Word| Term::from_word(w, &vars);
    let mut conjuncts = Vec::new();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            conjuncts.push(Formula::not(Formula::eq(term(&g.reps[i]), term(&g.reps[j]))));
        }
    }
    for (u, row) in g.transitions.iter().enumerate() {
        for (idx, target) in row.iter().enumerate() {
            let x = Letter::from_index(idx);
            let ux = g.reps[u].concat(&Word::letter(x));
            match *target {
                Some(t) => {
                    if ux.free_reduce() == g.reps[t] {
                        continue;
                    }
                    // the reverse edge t --x⁻¹--> u says the same thing
                    if (t, x.inverse().index()) < (u, idx) && g.transitions[t][x.inverse().index()] == Some(u) {
                        continue;
                    }
                    conjuncts.push(Formula::eq(term(&ux), term(&g.reps[t])));
                }
                None => {
                    for v in &g.reps {
                        conjuncts.push(Formula::not(Formula::eq(term(&ux), term(v))));
                    }
                }
            }
        }
    }
    let body = if conjuncts.is_empty() { Formula::eq(Term::One, Term::One) } else { conj(conjuncts) };
    Ok(Formula::exists_all(&vars, body))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::marked_group;
    use crate::logic::eval::{eval_formula, DEFAULT_BUDGET};
    use crate::logic::table::FiniteGroupTable;

    fn sentence(spec: &str, r: usize) -> Formula {
        pattern_sentence(&marked_group(spec).unwrap(), r, 10_000).unwrap()
    }

    fn holds(t: &FiniteGroupTable, f: &Formula) -> bool {
        eval_formula(t, f, &[], DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn trivial_marking() {
        let f = sentence("cyclic:1", 0);
        assert_eq!(f.to_string(), "(exists x_1 (= x_1 e))");
        for n in 1..5 {
            assert!(holds(&FiniteGroupTable::cyclic(n), &f));
        }
    }

    #[test]
    fn cyclic_two() {
        let f = sentence("cyclic:2", 1);
        assert!(f.is_sentence());
        assert!(holds(&FiniteGroupTable::cyclic(2), &f));
        assert!(!holds(&FiniteGroupTable::cyclic(3), &f));
    }

    #[test]
    fn infinite_cyclic() {
        let f = sentence("free:1", 2);
        assert!(holds(&FiniteGroupTable::cyclic(7), &f));
        assert!(!holds(&FiniteGroupTable::cyclic(4), &f));
        // the ball of radius 2 has an outgoing edge, so Z/5 fails too
        assert!(!holds(&FiniteGroupTable::cyclic(5), &f));
        assert!(holds(&FiniteGroupTable::cyclic(6), &f));
    }
}
