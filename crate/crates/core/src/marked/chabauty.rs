//! The kernel view: a marked group as the set of words it kills.

use crate::error::OracleError;
use crate::marked::MarkedGroup;
use crate::word::{reduced_words, Word};

/// Reduced words of length `≤ max_len` that evaluate to the identity, in
/// shortlex order (the empty word excluded).
pub fn kernel_elements(m: &MarkedGroup, max_len: usize) -> Vec<Word> {
    let id = m.identity_key();
    reduced_words(m.arity(), max_len).into_iter().skip(1).filter(|w| m.key(w) == id).collect()
}

/// Membership in the basic open set `{N : Y ⊆ N, Z ∩ N = ∅}` of the kernel.
pub fn in_basic_open(m: &MarkedGroup, inside: &[Word], outside: &[Word]) -> Result<bool, OracleError> {
    let id = m.identity_key();
    for w in inside {
        if m.evaluate(w)? != id {
            return Ok(false);
        }
    }
    for w in outside {
        if m.evaluate(w)? == id {
            return Ok(false);
        }
    }
    Ok(true)
}
