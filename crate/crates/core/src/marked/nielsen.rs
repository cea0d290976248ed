use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::MarkedError;
use crate::marked::MarkedGroup;
use crate::word::{Alphabet, Word};

/// Elementary move on a marking (0-based indices; text form is 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NielsenMove {
    Swap(usize, usize),
    Invert(usize),
    /// `x_i ↦ x_i x_j^{±1}`, `i ≠ j`.
    RightMultiply {
        i: usize,
        j: usize,
        inverse: bool,
    },
    /// Appends a trivial marker.
    Stabilize,
    /// Drops a marker that evaluates to the identity.
    Destabilize(usize),
}

impl NielsenMove {
    /// Moves undoing `self` on a marking of the given arity (before the
    /// move).
    pub fn inverse(&self, arity: usize) -> Vec<NielsenMove> {
        match *self {
            NielsenMove::Swap(..) | NielsenMove::Invert(_) => vec![*self],
            NielsenMove::RightMultiply { i, j, inverse } => vec![NielsenMove::RightMultiply { i, j, inverse: !inverse }],
            NielsenMove::Stabilize => vec![NielsenMove::Destabilize(arity)],
            NielsenMove::Destabilize(i) => {
                // re-append the trivial marker, then bubble it back to slot i
                let mut moves = vec![NielsenMove::Stabilize];
                moves.extend((i..arity - 1).rev().map(|k| NielsenMove::Swap(k, k + 1)));
                moves
            }
        }
    }
}

impl fmt::Display for NielsenMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NielsenMove::Swap(i, j) => write!(f, "swap:{},{}", i + 1, j + 1),
            NielsenMove::Invert(i) => write!(f, "invert:{}", i + 1),
            NielsenMove::RightMultiply { i, j, inverse } => {
                write!(f, "rmul:{},{},{}", i + 1, j + 1, if inverse { '-' } else { '+' })
            }
            NielsenMove::Stabilize => write!(f, "stab"),
            NielsenMove::Destabilize(i) => write!(f, "destab:{}", i + 1),
        }
    }
}

impl FromStr for NielsenMove {
    type Err = MarkedError;

    /// `swap:i,j`, `invert:i`, `rmul:i,j,+|-`, `stab`, `destab:i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || MarkedError::InvalidMove(format!("cannot parse `{s}`"));
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let args: Vec<&str> = if args.is_empty() { Vec::new() } else { args.split(',').collect() };
        let index = |t: &str| -> Result<usize, MarkedError> {
            match t.trim().parse::<usize>() {
                Ok(k) if k >= 1 => Ok(k - 1),
                _ => Err(bad()),
            }
        };
        match (name, args.as_slice()) {
            ("swap", [i, j]) => Ok(NielsenMove::Swap(index(i)?, index(j)?)),
            ("invert", [i]) => Ok(NielsenMove::Invert(index(i)?)),
            ("rmul", [i, j, sign]) => {
                let inverse = match sign.trim() {
                    "+" => false,
                    "-" => true,
                    _ => return Err(bad()),
                };
                Ok(NielsenMove::RightMultiply { i: index(i)?, j: index(j)?, inverse })
            }
            ("stab", []) => Ok(NielsenMove::Stabilize),
            ("destab", [i]) => Ok(NielsenMove::Destabilize(index(i)?)),
            _ => Err(bad()),
        }
    }
}

/// Parses a whitespace- or `;`-separated move list.
pub fn parse_moves(text: &str) -> Result<Vec<NielsenMove>, MarkedError> {
    text.split(|c: char| c.is_whitespace() || c == ';').filter(|t| !t.is_empty()).map(str::parse).collect()
}

fn fresh_name(alphabet: &Alphabet) -> String {
    (1..).map(|k| format!("t{k}")).find(|n| alphabet.lookup(n).is_none()).expect("infinitely many names")
}

/// Applies one move. The group is unchanged; only the marking moves.
pub fn nielsen_apply(m: &MarkedGroup, mv: NielsenMove) -> Result<MarkedGroup, MarkedError> {
    let n = m.arity();
    let check = |k: usize| {
        if k < n {
            Ok(())
        } else {
            Err(MarkedError::InvalidMove(format!("{mv}: index {} outside arity {n}", k + 1)))
        }
    };
    let mut markers = m.markers().to_vec();
    let mut names = m.alphabet().names();
    match mv {
        NielsenMove::Swap(i, j) => {
            check(i)?;
            check(j)?;
            markers.swap(i, j);
            names.swap(i, j);
        }
        NielsenMove::Invert(i) => {
            check(i)?;
            markers[i] = markers[i].inverse();
        }
        NielsenMove::RightMultiply { i, j, inverse } => {
            check(i)?;
            check(j)?;
            if i == j {
                return Err(MarkedError::InvalidMove(format!("{mv}: indices must differ")));
            }
            let factor = if inverse { markers[j].inverse() } else { markers[j].clone() };
            markers[i] = markers[i].mul(&factor);
        }
        NielsenMove::Stabilize => {
            names.push(fresh_name(m.alphabet()));
            markers.push(Word::empty());
        }
        NielsenMove::Destabilize(i) => {
            check(i)?;
            if n == 1 {
                return Err(MarkedError::InvalidMove(format!("{mv}: cannot drop the only marker")));
            }
            if m.oracle().normal_form(&markers[i]) != m.identity_key() {
                return Err(MarkedError::InvalidMove(format!("{mv}: marker {} is not trivial", i + 1)));
            }
            markers.remove(i);
            names.remove(i);
        }
    }
    let alphabet = Alphabet::new(&names).map_err(|e| MarkedError::InvalidMove(e.to_string()))?;
    Ok(m.with_markers(markers, alphabet, format!("{} | {mv}", m.label())))
}
