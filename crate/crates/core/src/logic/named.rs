//! The explicit sentences `ψ_p`, `φ_p`, `ζ`, plus witness extraction and
//! independent witness verification for `φ_p`.

use serde::{Deserialize, Serialize};

use crate::error::LogicError;
use crate::logic::eval::Evaluator;
use crate::logic::formula::{tuple_vars, Formula, Term};
use crate::logic::table::FiniteGroupTable;

fn var(v: &str) -> Term {
    Term::var(v)
}

/// `ψ_p(x_1..x_p)`: each `x_i^p = 1` and all `x_i x_j = x_j x_i`.
pub fn psi(p: usize) -> Formula {
    let xs = tuple_vars(p);
    let mut atoms: Vec<Formula> = xs.iter().map(|x| Formula::eq(Term::Mul(vec![var(x); p]), Term::One)).collect();
    for xi in &xs {
        for xj in &xs {
            atoms.push(Formula::eq(Term::Mul(vec![var(xi), var(xj)]), Term::Mul(vec![var(xj), var(xi)])));
        }
    }
    Formula::And(atoms)
}

/// `φ_p = ∃x_1..x_p (ψ_p ∧ (∀g ⋀_i ⋁_j x_i g = g x_j ∧ ∃h x_1 h ≠ h x_1))`.
pub fn phi(p: usize) -> Formula {
    Formula::exists_all(&tuple_vars(p), phi_body(p))
}

fn phi_body(p: usize) -> Formula {
    let xs = tuple_vars(p);
    let permuted = Formula::forall(
        "g",
        Formula::And(
            xs.iter()
                .map(|xi| {
                    Formula::Or(
                        xs.iter().map(|xj| Formula::eq(Term::Mul(vec![var(xi), var("g")]), Term::Mul(vec![var("g"), var(xj)]))).collect(),
                    )
                })
                .collect(),
        ),
    );
    let noncentral =
        Formula::exists("h", Formula::not(Formula::eq(Term::Mul(vec![var(&xs[0]), var("h")]), Term::Mul(vec![var("h"), var(&xs[0])]))));
    Formula::And(vec![psi(p), Formula::And(vec![permuted, noncentral])])
}

/// `ζ = ∀a ∀b ∃t (a = 1 ∨ b = 1 ∨ t⁻¹ a t = b)`.
pub fn zeta() -> Formula {
    Formula::forall(
        "a",
        Formula::forall(
            "b",
            Formula::exists(
                "t",
                Formula::Or(vec![
                    Formula::eq(var("a"), Term::One),
                    Formula::eq(var("b"), Term::One),
                    Formula::eq(Term::Mul(vec![Term::inv(var("t")), var("a"), var("t")]), var("b")),
                ]),
            ),
        ),
    )
}

/// `psi:P`, `phi:P` or `zeta`.
pub fn make_named_formula(name: &str) -> Result<Formula, LogicError> {
    let param = |s: &str| -> Result<usize, LogicError> {
        match s.parse::<usize>() {
            Ok(p) if p >= 1 => Ok(p),
            _ => Err(LogicError::BadParameter(format!("`{name}`: P must be a positive integer"))),
        }
    };
    match name.split_once(':') {
        Some(("psi", p)) => Ok(psi(param(p)?)),
        Some(("phi", p)) => Ok(phi(param(p)?)),
        None if name == "zeta" => Ok(zeta()),
        _ => Err(LogicError::UnknownFormula(name.to_string())),
    }
}

/// A tuple and a non-central element witnessing `φ_p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiWitness {
    pub xs: Vec<usize>,
    pub h: usize,
}

/// Runs the model checker on `φ_p` and, when it holds, returns the first
/// witness tuple in the checker's search order.
pub fn find_phi_witness(table: &FiniteGroupTable, p: usize, budget: u64) -> Result<Option<PhiWitness>, LogicError> {
    let body = phi_body(p);
    let names = tuple_vars(p);
    let n = table.order();
    let mut ev = Evaluator::new(table, budget);
    let mut xs = vec![0usize; p];
    loop {
        let mut env: Vec<(String, usize)> = names.iter().cloned().zip(xs.iter().copied()).collect();
        if ev.eval(&body, &mut env)? {
            let noncentral =
                Formula::not(Formula::eq(Term::Mul(vec![var(&names[0]), var("h")]), Term::Mul(vec![var("h"), var(&names[0])])));
            for h in 0..n {
                env.push(("h".to_string(), h));
                let ok = ev.eval(&noncentral, &mut env)?;
                env.pop();
                if ok {
                    return Ok(Some(PhiWitness { xs, h }));
                }
            }
            unreachable!("φ_p body holds, so some h exists");
        }
        // odometer over tuples, last coordinate fastest (matches nested ∃)
        let mut k = p;
        loop {
            if k == 0 {
                return Ok(None);
            }
            k -= 1;
            xs[k] += 1;
            if xs[k] < n {
                break;
            }
            xs[k] = 0;
        }
    }
}

/// Independent check of a `φ_p` witness, straight from the table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCheck {
    /// Each `x_i` has order dividing `p` and the `x_i` commute.
    pub psi_holds: bool,
    /// For every `g`, `g⁻¹ x_i g` is again some `x_j`.
    pub conjugation_permutes: bool,
    /// `⟨x_1, ..., x_p⟩` is normal.
    pub normal_subgroup: bool,
    /// `x_1 h ≠ h x_1`.
    pub noncentral: bool,
    /// Permutation of `{x_1..x_p}` induced by conjugation by `h`, as the
    /// index of `h⁻¹ x_i h` among the `x`'s (first match).
    pub h_action: Vec<usize>,
}

impl WitnessCheck {
    pub fn all(&self) -> bool {
        self.psi_holds && self.conjugation_permutes && self.normal_subgroup && self.noncentral
    }
}

pub fn verify_phi_witness(table: &FiniteGroupTable, p: usize, w: &PhiWitness) -> WitnessCheck {
    let t = table;
    let xs = &w.xs;
    let power = |x: usize, k: usize| (0..k).fold(0, |acc, _| t.mul(acc, x));
    let conj = |g: usize, x: usize| t.mul(t.mul(t.inv(g), x), g);
    let psi_holds =
        xs.len() == p && xs.iter().all(|&x| power(x, p) == 0) && xs.iter().all(|&x| xs.iter().all(|&y| t.mul(x, y) == t.mul(y, x)));
    let conjugation_permutes = (0..t.order()).all(|g| xs.iter().all(|&x| xs.contains(&conj(g, x))));
    let k = t.generated_subgroup(xs);
    let normal_subgroup = (0..t.order()).all(|g| k.iter().all(|&x| k.binary_search(&conj(g, x)).is_ok()));
    let noncentral = t.mul(xs[0], w.h) != t.mul(w.h, xs[0]);
    let h_action = xs.iter().map(|&x| xs.iter().position(|&y| y == conj(w.h, x)).unwrap_or(usize::MAX)).collect();
    WitnessCheck { psi_holds, conjugation_permutes, normal_subgroup, noncentral, h_action }
}

/// `(Z/p)^p ⋊ Z/p` with the generator cyclically shifting coordinates the
/// same way `c` and `d` act in `H_p`. For `p = 2` this is the order-8
/// dihedral group `(Z/2)^2 ⋊ Z/2`.
pub fn shift_extension_table(p: usize) -> FiniteGroupTable {
    let base = p.pow(p as u32);
    let order = base * p;
    let decode = |x: usize| -> (Vec<usize>, usize) {
        let (mut v, s) = (Vec::with_capacity(p), x / base);
        let mut r = x % base;
        for _ in 0..p {
            v.push(r % p);
            r /= p;
        }
        (v, s)
    };
    let encode = |v: &[usize], s: usize| v.iter().rev().fold(0, |acc, &c| acc * p + c) + s * base;
    let names = (0..order)
        .map(|x| {
            let (v, s) = decode(x);
            format!("({:?},{s})", v)
        })
        .collect();
    FiniteGroupTable::from_fn(names, |x, y| {
        let (v1, s1) = decode(x);
        let (v2, s2) = decode(y);
        // (σ^s v)[i] = v[i + s]
        let v: Vec<usize> = (0..p).map(|i| (v1[i] + v2[(i + s1) % p]) % p).collect();
        encode(&v, (s1 + s2) % p)
    })
    .expect("semidirect product is a group")
}

/// One representative of every abelian group of order `≤ max_order`.
pub fn abelian_tables(max_order: usize) -> Vec<FiniteGroupTable> {
    fn partitions(k: usize, max: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        (1..=k.min(max))
            .rev()
            .flat_map(|first| {
                partitions(k - first, first).into_iter().map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
            })
            .collect()
    }
    let mut out = vec![FiniteGroupTable::trivial()];
    for n in 2..=max_order {
        // cyclic factors for each prime power in n
        let mut factors: Vec<Vec<Vec<usize>>> = Vec::new();
        let mut m = n;
        let mut q = 2;
        while m > 1 {
            let mut k = 0;
            while m % q == 0 {
                m /= q;
                k += 1;
            }
            if k > 0 {
                factors.push(partitions(k, k).into_iter().map(|part| part.iter().map(|&e| q.pow(e as u32)).collect()).collect());
            }
            q += 1;
        }
        let mut combos: Vec<Vec<usize>> = vec![vec![]];
        for choices in &factors {
            combos = combos.iter().flat_map(|c| choices.iter().map(move |ch| c.iter().chain(ch).copied().collect())).collect();
        }
        for orders in combos {
            let t = orders.iter().map(|&o| FiniteGroupTable::cyclic(o)).reduce(|a, b| a.product(&b)).expect("n > 1 has a factor");
            out.push(t);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::eval::{eval_formula, DEFAULT_BUDGET};

    fn holds(t: &FiniteGroupTable, f: &Formula) -> bool {
        eval_formula(t, f, &[], DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn shapes() {
        assert_eq!(psi(3).atom_count(), 3 + 9);
        assert_eq!(zeta().to_string(), "(forall a (forall b (exists t (or (= a e) (= b e) (= (* (inv t) a t) b)))))");
        assert!(phi(2).is_sentence());
        assert!(!psi(2).is_sentence());
        assert!(matches!(make_named_formula("psi:0"), Err(LogicError::BadParameter(_))));
        assert!(matches!(make_named_formula("omega"), Err(LogicError::UnknownFormula(_))));
        assert_eq!(make_named_formula("phi:2").unwrap(), phi(2));
    }

    #[test]
    fn zeta_examples() {
        assert!(holds(&FiniteGroupTable::trivial(), &zeta()));
        assert!(holds(&FiniteGroupTable::cyclic(2), &zeta()));
        assert!(!holds(&FiniteGroupTable::cyclic(3), &zeta()));
        // S_3 has three conjugacy classes
        assert!(!holds(&shift_extension_table(2), &zeta()));
    }

    #[test]
    fn psi_on_klein_four() {
        let z2 = FiniteGroupTable::cyclic(2);
        let k4 = z2.product(&z2);
        // (1,0) is element 2, (0,1) is element 1
        let env = vec![("x_1".to_string(), 2), ("x_2".to_string(), 1)];
        assert!(eval_formula(&k4, &psi(2), &env, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn phi_on_dihedral_eight() {
        let d4 = shift_extension_table(2);
        assert_eq!(d4.order(), 8);
        assert!(!d4.is_abelian());
        assert!(holds(&d4, &phi(2)));
        let w = find_phi_witness(&d4, 2, DEFAULT_BUDGET).unwrap().unwrap();
        let check = verify_phi_witness(&d4, 2, &w);
        assert!(check.all(), "{check:?}");
    }

    #[test]
    fn abelian_table_census() {
        let ts = abelian_tables(8);
        let orders: Vec<usize> = ts.iter().map(FiniteGroupTable::order).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 4, 5, 6, 7, 8, 8, 8]);
        assert!(ts.iter().all(FiniteGroupTable::is_abelian));
        for t in &ts {
            assert!(!holds(t, &phi(2)));
            assert!(find_phi_witness(t, 2, DEFAULT_BUDGET).unwrap().is_none());
        }
    }
}
