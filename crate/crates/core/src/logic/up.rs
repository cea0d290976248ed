//! The ball test for the neighbourhood `U_p` of `H_p`.

use serde::{Deserialize, Serialize};

use crate::error::{MarkedError, OracleError};
use crate::families::marked_group;
use crate::marked::{similarity_radius, MarkedGroup, Similarity};
use crate::word::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpReport {
    pub p: usize,
    /// `max(p, 2)`.
    pub required_radius: usize,
    pub similarity: Similarity,
    pub member: bool,
    /// Each `a'_i` has order exactly `p`.
    pub orders_p: bool,
    /// The `a'_i` pairwise commute.
    pub commute: bool,
    /// Conjugation by `c'` and by `d'` permutes `{a'_1..a'_p}`.
    pub conjugation_permutes: bool,
    /// `a'_1 c' ≠ c' a'_1`.
    pub noncentral: bool,
    /// `c_action[i] = j` when `c'⁻¹ a'_{i+1} c' = a'_{j+1}`.
    pub c_action: Vec<Option<usize>>,
    pub d_action: Vec<Option<usize>>,
}

impl UpReport {
    pub fn facts_hold(&self) -> bool {
        self.orders_p && self.commute && self.conjugation_permutes && self.noncentral
    }
}

/// Decides `(m) ≈_{max(p,2)} H_p` and checks the ball-level facts used to
/// show that `U_p` forces `ψ_p` and the permutation action. Markers are
/// read as `a'_1..a'_p, c', d'`.
pub fn check_up_membership(m: &MarkedGroup, p: usize, cap: usize) -> Result<UpReport, MarkedError> {
    if p == 0 {
        return Err(MarkedError::Oracle(OracleError::MalformedSpec { spec: format!("Hp:{p}"), reason: "p must be at least 1".into() }));
    }
    if m.arity() != p + 2 {
        return Err(MarkedError::ArityMismatch { left: m.arity(), right: p + 2 });
    }
    let hp = marked_group(&format!("Hp:{p}"))?;
    let required_radius = p.max(2);
    let similarity = similarity_radius(m, &hp, required_radius, cap)?;
    let member = similarity.radius >= required_radius as i64;

    let a = |i: usize| Word::letter(Letter::pos(i));
    let eq = |u: &Word, v: &Word| m.key(u) == m.key(v);
    let orders_p = (0..p).all(|i| (1..p).all(|j| !m.is_identity(&a(i).pow(j))) && m.is_identity(&a(i).pow(p)));
    let commute = (0..p).all(|i| (i + 1..p).all(|j| eq(&a(i).concat(&a(j)), &a(j).concat(&a(i)))));
    let action = |g: usize| -> Vec<Option<usize>> {
        let t = a(g);
        (0..p).map(|i| (0..p).find(|&j| eq(&a(i).concat(&t), &t.concat(&a(j))))).collect()
    };
    let is_perm = |act: &[Option<usize>]| {
        let mut seen = vec![false; p];
        act.iter().all(|x| match *x {
            Some(j) if !seen[j] => {
                seen[j] = true;
                true
            }
            _ => false,
        })
    };
    let c_action = action(p);
    let d_action = action(p + 1);
    let conjugation_permutes = is_perm(&c_action) && is_perm(&d_action);
    let noncentral = !eq(&a(0).concat(&a(p)), &a(p).concat(&a(0)));
    Ok(UpReport { p, required_radius, similarity, member, orders_p, commute, conjugation_permutes, noncentral, c_action, d_action })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hp_is_in_its_own_neighbourhood() {
        for p in [2, 3] {
            let r = check_up_membership(&marked_group(&format!("Hp:{p}")).unwrap(), p, 1_000_000).unwrap();
            assert!(r.member, "p={p}");
            assert!(r.facts_hold(), "{r:?}");
            // c⁻¹ a_1 c = a_2
            assert_eq!(r.c_action[0], Some(1));
        }
    }

    #[test]
    fn free_group_is_not() {
        let r = check_up_membership(&marked_group("free:5").unwrap(), 3, 1_000_000).unwrap();
        assert!(!r.member);
        assert!(!r.orders_p);
        assert!(matches!(
            check_up_membership(&marked_group("free:4").unwrap(), 3, 1000),
            Err(MarkedError::ArityMismatch { left: 4, right: 5 })
        ));
    }
}
