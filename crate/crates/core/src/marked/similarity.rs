use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::MarkedError;
use crate::marked::{BallExplorer, MarkedGroup};

/// Largest radius at which two marked groups have isomorphic balls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Similarity {
    /// `-1` when even the radius-0 balls differ (or arities differ).
    pub radius: i64,
    /// The search stopped at `max_r` with balls still equal, so `radius` is
    /// only a lower bound.
    pub capped: bool,
    pub arity_mismatch: bool,
}

/// `2^-radius`, with `radius = -1` giving 2. When `upper_bound` is set the
/// true distance may be smaller.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedDistance {
    pub exponent: i64,
    pub upper_bound: bool,
}

impl MarkedDistance {
    pub fn value(&self) -> f64 {
        (-self.exponent as f64).exp2()
    }
}

impl PartialOrd for MarkedDistance {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(other.exponent.cmp(&self.exponent))
    }
}

impl fmt::Display for MarkedDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bound = if self.upper_bound { "<= " } else { "" };
        write!(f, "{bound}2^{}", -self.exponent)
    }
}

impl Similarity {
    pub fn distance(&self) -> MarkedDistance {
        MarkedDistance { exponent: self.radius, upper_bound: self.capped }
    }
}

/// Largest `r ≤ max_r` with `a ≈_r b`: equal ball signatures, i.e. a
/// basepoint-fixing, label-preserving isomorphism of the radius-`r` balls.
pub fn similarity_radius(a: &MarkedGroup, b: &MarkedGroup, max_r: usize, cap: usize) -> Result<Similarity, MarkedError> {
    if a.arity() != b.arity() {
        return Ok(Similarity { radius: -1, capped: false, arity_mismatch: true });
    }
    let mut ea = BallExplorer::new(a, cap)?;
    let mut eb = BallExplorer::new(b, cap)?;
    let differ =
        |r: usize, ea: &BallExplorer, eb: &BallExplorer| ea.size_at(r) != eb.size_at(r) || ea.signature_at(r) != eb.signature_at(r);
    if differ(0, &ea, &eb) {
        return Ok(Similarity { radius: -1, capped: false, arity_mismatch: false });
    }
    for r in 1..=max_r {
        ea.grow()?;
        eb.grow()?;
        if differ(r, &ea, &eb) {
            return Ok(Similarity { radius: r as i64 - 1, capped: false, arity_mismatch: false });
        }
    }
    Ok(Similarity { radius: max_r as i64, capped: true, arity_mismatch: false })
}
