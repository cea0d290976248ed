//! Injectivity radii of marked epimorphisms and finite checks of lacunary
//! hyperbolicity certificates.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::MarkedError;
use crate::marked::{BallExplorer, MarkedGroup};
use crate::rational::{self, Rational};

/// How the generator-to-generator map `src → dst` was vouched for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum EpimorphismCheck {
    /// `src` has no presentation; the caller's word is taken.
    Trusted,
    /// Every relator of `src` dies in `dst`.
    Verified { relators: usize },
    /// This relator of `src` survives in `dst`: the map is not a
    /// homomorphism.
    Refuted { relator_index: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InjectivityReport {
    /// Largest `r ≤ max_r` such that the epimorphism is injective on the
    /// radius-`r` ball of `src`.
    pub radius: usize,
    pub capped: bool,
    pub epimorphism: EpimorphismCheck,
}

fn check_epimorphism(src: &MarkedGroup, dst: &MarkedGroup) -> EpimorphismCheck {
    match src.presentation() {
        None => EpimorphismCheck::Trusted,
        Some(p) => match p.relators().iter().position(|r| !dst.is_identity(r)) {
            Some(relator_index) => EpimorphismCheck::Refuted { relator_index },
            None => EpimorphismCheck::Verified { relators: p.relators().len() },
        },
    }
}

/// Largest `r ≤ max_r` such that distinct elements of `src`'s radius-`r`
/// ball stay distinct in `dst` under `x_i ↦ y_i`.
pub fn injectivity_radius(src: &MarkedGroup, dst: &MarkedGroup, max_r: usize, cap: usize) -> Result<InjectivityReport, MarkedError> {
    if src.arity() != dst.arity() {
        return Err(MarkedError::ArityMismatch { left: src.arity(), right: dst.arity() });
    }
    let epimorphism = check_epimorphism(src, dst);
    let mut explorer = BallExplorer::new(src, cap)?;
    let mut images = HashSet::new();
    images.insert(dst.identity_key());
    for r in 1..=max_r {
        let before = explorer.size_at(r - 1);
        explorer.grow()?;
        for rep in &explorer.reps()[before..] {
            if !images.insert(dst.key(rep)) {
                return Ok(InjectivityReport { radius: r - 1, capped: false, epimorphism });
            }
        }
    }
    Ok(InjectivityReport { radius: max_r, capped: true, epimorphism })
}

/// A finite prefix of a chain `G_1 → G_2 → ...` of marked epimorphisms with
/// claimed injectivity radii `r_i` and trusted hyperbolicity constants
/// `δ_i` (one per link).
#[derive(Clone, Debug)]
pub struct LacunaryCertificate {
    pub stages: Vec<MarkedGroup>,
    pub radii: Vec<usize>,
    pub deltas: Vec<Rational>,
}

impl LacunaryCertificate {
    pub fn new(stages: Vec<MarkedGroup>, radii: Vec<usize>, deltas: Vec<Rational>) -> Result<Self, MarkedError> {
        if stages.len() < 2 {
            return Err(MarkedError::InvalidCertificate("need at least two stages".into()));
        }
        if radii.len() != stages.len() - 1 || deltas.len() != stages.len() - 1 {
            return Err(MarkedError::InvalidCertificate(format!(
                "{} stages need {} radii and deltas, got {} and {}",
                stages.len(),
                stages.len() - 1,
                radii.len(),
                deltas.len()
            )));
        }
        if radii.contains(&0) {
            return Err(MarkedError::InvalidCertificate("radii must be at least 1".into()));
        }
        if deltas.iter().any(|d| *d.numer() == 0) {
            return Err(MarkedError::InvalidCertificate("deltas must be positive".into()));
        }
        let arity = stages[0].arity();
        if let Some(s) = stages.iter().find(|s| s.arity() != arity) {
            return Err(MarkedError::ArityMismatch { left: arity, right: s.arity() });
        }
        Ok(LacunaryCertificate { stages, radii, deltas })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkReport {
    pub from: String,
    pub to: String,
    pub claimed_radius: usize,
    /// `min(claimed_radius, max_r)`: the radius actually tested.
    pub checked_radius: usize,
    pub injectivity: InjectivityReport,
    /// Injective on the checked ball and the map was not refuted.
    pub passed: bool,
    #[serde(with = "rational::text")]
    pub delta: Rational,
    #[serde(with = "rational::text")]
    pub ratio: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LacunaryReport {
    pub links: Vec<LinkReport>,
    /// Condition (ii) holds on every link.
    pub injectivity_holds: bool,
    /// 1-based index of the first failing link.
    pub first_failure: Option<usize>,
    /// `r_i / δ_i` strictly increases along the given prefix.
    pub ratios_increasing: bool,
    /// Hyperbolicity constants are inputs, never checked.
    pub deltas_status: String,
}

pub fn check_lacunary_certificate(c: &LacunaryCertificate, max_r: usize, cap: usize) -> Result<LacunaryReport, MarkedError> {
    let mut links = Vec::new();
    for (i, pair) in c.stages.windows(2).enumerate() {
        let checked_radius = c.radii[i].min(max_r);
        let injectivity = injectivity_radius(&pair[0], &pair[1], checked_radius, cap)?;
        let passed = injectivity.radius >= checked_radius && !matches!(injectivity.epimorphism, EpimorphismCheck::Refuted { .. });
        let delta = c.deltas[i];
        links.push(LinkReport {
            from: pair[0].label().to_string(),
            to: pair[1].label().to_string(),
            claimed_radius: c.radii[i],
            checked_radius,
            injectivity,
            passed,
            delta,
            ratio: Rational::from_integer(c.radii[i] as u64) / delta,
        });
    }
    let first_failure = links.iter().position(|l| !l.passed).map(|i| i + 1);
    let ratios_increasing = links.windows(2).all(|w| w[0].ratio < w[1].ratio);
    Ok(LacunaryReport {
        injectivity_holds: first_failure.is_none(),
        first_failure,
        ratios_increasing,
        links,
        deltas_status: "UNVERIFIED".to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::marked_group;

    fn inj(a: &str, b: &str, max_r: usize) -> InjectivityReport {
        injectivity_radius(&marked_group(a).unwrap(), &marked_group(b).unwrap(), max_r, 100_000).unwrap()
    }

    #[test]
    fn injectivity_examples() {
        assert_eq!(inj("free:1", "cyclic:5", 10).radius, 2);
        assert_eq!(inj("free:2", "zn:2", 10).radius, 1);
        let same = inj("Hp:2", "Hp:2", 3);
        assert_eq!((same.radius, same.capped), (3, true));
    }

    #[test]
    fn epimorphism_checks() {
        // Z/4 -> Z/2 is a homomorphism, Z/4 -> Z/3 is not
        assert_eq!(inj("cyclic:4", "cyclic:2", 3).epimorphism, EpimorphismCheck::Verified { relators: 1 });
        assert_eq!(inj("cyclic:4", "cyclic:3", 3).epimorphism, EpimorphismCheck::Refuted { relator_index: 0 });
        assert!(injectivity_radius(&marked_group("free:1").unwrap(), &marked_group("free:2").unwrap(), 3, 100).is_err());
    }

    #[test]
    fn failing_chain() {
        let stages = ["free:1", "cyclic:4", "cyclic:2"].iter().map(|s| marked_group(s).unwrap()).collect();
        let c = LacunaryCertificate::new(stages, vec![2, 1], vec![Rational::from_integer(1); 2]).unwrap();
        let r = check_lacunary_certificate(&c, 12, 1000).unwrap();
        assert_eq!(r.first_failure, Some(1));
        assert!(!r.injectivity_holds);
        assert_eq!(r.links[0].injectivity.radius, 1);
        // Z/4 -> Z/2 also collapses 1 and -1
        assert!(!r.links[1].passed);
    }

    #[test]
    fn constant_chain_passes() {
        let stages = vec![marked_group("cyclic:5").unwrap(); 3];
        let c = LacunaryCertificate::new(stages, vec![1, 1], vec![Rational::from_integer(1); 2]).unwrap();
        let r = check_lacunary_certificate(&c, 12, 1000).unwrap();
        assert!(r.injectivity_holds);
        assert!(!r.ratios_increasing);
        assert_eq!(r.deltas_status, "UNVERIFIED");
    }

    #[test]
    fn certificate_validation() {
        let one = || vec![marked_group("cyclic:5").unwrap()];
        assert!(LacunaryCertificate::new(one(), vec![], vec![]).is_err());
        let two = vec![marked_group("cyclic:5").unwrap(); 2];
        assert!(LacunaryCertificate::new(two.clone(), vec![0], vec![Rational::from_integer(1)]).is_err());
        assert!(LacunaryCertificate::new(two.clone(), vec![1], vec![Rational::from_integer(0)]).is_err());
        assert!(LacunaryCertificate::new(two, vec![1, 2], vec![Rational::from_integer(1)]).is_err());
    }
}
