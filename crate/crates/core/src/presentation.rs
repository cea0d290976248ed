//! Finite presentations `⟨X | R⟩`, their symmetrized relator sets, and the
//! metric small cancellation condition `C'(λ)`.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{PresentationError, WordParseError};
use crate::rational::{self, Rational};
use crate::word::{longest_common_prefix, Alphabet, Word};

/// A finite presentation. Relators are nonempty and cyclically reduced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    alphabet: Alphabet,
    relators: Vec<Word>,
}

/// Result of [`parse_presentation`]: the presentation plus notes about
/// relators that had to be cyclically reduced on the way in.
#[derive(Clone, Debug)]
pub struct ParsedPresentation {
    pub presentation: Presentation,
    pub warnings: Vec<String>,
}

impl Presentation {
    pub fn new(alphabet: Alphabet, relators: Vec<Word>) -> Result<Presentation, PresentationError> {
        let arity = alphabet.len();
        for (index, r) in relators.iter().enumerate() {
            if let Some(l) = r.letters().iter().find(|l| l.gen >= arity) {
                return Err(PresentationError::LetterOutOfRange { index, gen: l.gen, arity });
            }
            if r.is_empty() || !r.is_cyclically_reduced() {
                return Err(PresentationError::NotCyclicallyReduced { index });
            }
        }
        Ok(Presentation { alphabet, relators })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn arity(&self) -> usize {
        self.alphabet.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Same relators under a different set of generator names.
    pub fn renamed(&self, alphabet: Alphabet) -> Result<Presentation, PresentationError> {
        Presentation::new(alphabet, self.relators.clone())
    }
}

/// Writes the presentation file format: a `gens:` line then one `rel:` line
/// per relator.
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens: {}", self.alphabet.names().join(" "))?;
        for r in &self.relators {
            writeln!(f, "rel: {}", self.alphabet.format_word(r))?;
        }
        Ok(())
    }
}

/// Parses the presentation file format.
///
/// `#` starts a comment, blank lines are skipped, the first remaining line
/// must be `gens: ...` and every later one `rel: <word>`.
pub fn parse_presentation(text: &str) -> Result<ParsedPresentation, PresentationError> {
    let mut alphabet: Option<Alphabet> = None;
    let mut relators = Vec::new();
    let mut warnings = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        let body = content.trim_start();
        let syntax = |column: usize, message: &str| PresentationError::Syntax { line: line_no, column, message: message.to_string() };

        if let Some(rest) = body.strip_prefix("gens:") {
            if alphabet.is_some() {
                return Err(syntax(indent + 1, "duplicate `gens:` line"));
            }
            let names: Vec<&str> = rest.split_whitespace().collect();
            let alpha = Alphabet::new(&names).map_err(|e| syntax(indent + 6, &e.to_string()))?;
            alphabet = Some(alpha);
        } else if let Some(rest) = body.strip_prefix("rel:") {
            let Some(alpha) = alphabet.as_ref() else {
                return Err(syntax(indent + 1, "expected `gens:` before any relator"));
            };
            let offset = indent + 4;
            let word = alpha.parse_word(rest).map_err(|e| match e {
                WordParseError::UnknownGenerator { name, column } => {
                    PresentationError::UnknownGenerator { name, line: line_no, column: offset + column }
                }
                WordParseError::BadExponent { column, .. } => syntax(offset + column, &e.to_string()),
                other => syntax(offset + 1, &other.to_string()),
            })?;
            let reduced = word.cyclic_reduce();
            if reduced.is_empty() {
                return Err(PresentationError::TrivialRelator { line: line_no });
            }
            if reduced != word {
                warnings.push(format!(
                    "line {line_no}: relator `{}` cyclically reduced to `{}`",
                    alpha.format_word(&word),
                    alpha.format_word(&reduced)
                ));
            }
            relators.push(reduced);
        } else {
            let message = if alphabet.is_none() { "expected `gens:` line" } else { "expected `rel:` line" };
            return Err(syntax(indent + 1, message));
        }
    }

    let alphabet = alphabet.ok_or(PresentationError::Syntax { line: 1, column: 1, message: "missing `gens:` line".to_string() })?;
    let presentation = Presentation::new(alphabet, relators)?;
    Ok(ParsedPresentation { presentation, warnings })
}

/// Relators closed under inversion and cyclic shifts, deduplicated and kept
/// in shortlex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetrizedSet {
    words: Vec<Word>,
}

impl SymmetrizedSet {
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    pub fn min_len(&self) -> usize {
        self.words.iter().map(Word::len).min().unwrap_or(0)
    }
}

/// All cyclic shifts of all `R^{±1}`.
pub fn symmetrize(p: &Presentation) -> SymmetrizedSet {
    symmetrize_words(p.relators())
}

pub fn symmetrize_words(relators: &[Word]) -> SymmetrizedSet {
    let mut set = BTreeSet::new();
    for r in relators {
        let inv = r.inverse();
        for k in 0..r.len() {
            set.insert(r.rotate(k));
            set.insert(inv.rotate(k));
        }
    }
    SymmetrizedSet { words: set.into_iter().collect() }
}

/// Outcome of a `C'(λ)` check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallCancellationReport {
    #[serde(with = "rational::text")]
    pub lambda: Rational,
    /// Longest piece over all pairs.
    pub max_piece_len: usize,
    /// Shortlex-least pair `(R, S)`, `R < S`, attaining `max_ratio`; absent
    /// when no two distinct words share a letter prefix.
    pub witness_pair: Option<(Word, Word)>,
    pub witness_piece_len: usize,
    /// Max over pieces `U` of `|U| / min(|R|, |S|)`.
    #[serde(with = "rational::text")]
    pub max_ratio: Rational,
    pub passed: bool,
    pub symmetrized_size: usize,
}

impl SmallCancellationReport {
    pub fn max_ratio_text(&self) -> String {
        rational::format(&self.max_ratio)
    }
}

/// Checks `C'(λ)`: every common prefix `U` of two distinct words `R ≠ S` of
/// the symmetrized set satisfies `|U| < λ·min(|R|, |S|)`.
pub fn check_small_cancellation(p: &Presentation, lambda: Rational) -> SmallCancellationReport {
    check_symmetrized(&symmetrize(p), lambda)
}

pub fn check_symmetrized(sym: &SymmetrizedSet, lambda: Rational) -> SmallCancellationReport {
    let words = sym.words();
    // Pairs with an empty common prefix contribute ratio 0, so only words
    // sharing a first letter need comparing.
    let mut by_first: Vec<Vec<usize>> = Vec::new();
    for (i, w) in words.iter().enumerate() {
        let idx = w.letters()[0].index();
        if by_first.len() <= idx {
            by_first.resize(idx + 1, Vec::new());
        }
        by_first[idx].push(i);
    }

    let mut max_piece_len = 0;
    let mut best: Option<(Rational, usize, usize, usize)> = None;
    for group in &by_first {
        for (a, &i) in group.iter().enumerate() {
            for &j in &group[a + 1..] {
                let (r, s) = (&words[i], &words[j]);
                let piece = longest_common_prefix(r.letters(), s.letters());
                max_piece_len = max_piece_len.max(piece);
                let ratio = Ratio::new(piece as u64, r.len().min(s.len()) as u64);
                let better = match best {
                    None => true,
                    Some((br, bi, bj, _)) => ratio > br || (ratio == br && (i, j) < (bi, bj)),
                };
                if better {
                    best = Some((ratio, i, j, piece));
                }
            }
        }
    }

    let (max_ratio, witness_pair, witness_piece_len) = match best {
        Some((ratio, i, j, piece)) => (ratio, Some((words[i].clone(), words[j].clone())), piece),
        None => (Ratio::from_integer(0), None, 0),
    };
    SmallCancellationReport {
        lambda,
        max_piece_len,
        witness_pair,
        witness_piece_len,
        max_ratio,
        passed: max_ratio < lambda,
        symmetrized_size: words.len(),
    }
}

/// A relator that is literally `root^exponent` with `exponent ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProperPower {
    pub relator_index: usize,
    pub relator: Word,
    pub root: Word,
    pub exponent: usize,
}

/// `Ok(())` when no relator is a proper power, otherwise the first one
/// found, with its primitive root.
pub fn is_proper_power_free(p: &Presentation) -> Result<(), ProperPower> {
    for (relator_index, r) in p.relators().iter().enumerate() {
        let period = r.primitive_period();
        if period < r.len() {
            return Err(ProperPower {
                relator_index,
                relator: r.clone(),
                root: Word::from_letters(r.letters()[..period].to_vec()),
                exponent: r.len() / period,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(text: &str) -> Presentation {
        parse_presentation(text).unwrap().presentation
    }

    #[test]
    fn parses_commutator() {
        let p = pres("gens: a b\nrel: a b a^-1 b^-1");
        assert_eq!(p.arity(), 2);
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0].len(), 4);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_presentation("gens: a\nrel: a b"),
            Err(PresentationError::UnknownGenerator { ref name, line: 2, column: 8 }) if name == "b"
        ));
        assert!(matches!(parse_presentation("gens: a\nrel: a a^-1"), Err(PresentationError::TrivialRelator { line: 2 })));
        assert!(matches!(parse_presentation("rel: a"), Err(PresentationError::Syntax { line: 1, .. })));
        assert!(matches!(parse_presentation("gens: a\nfoo"), Err(PresentationError::Syntax { line: 2, column: 1, .. })));
        assert!(matches!(parse_presentation("gens: a\ngens: b"), Err(PresentationError::Syntax { line: 2, .. })));
        assert!(matches!(parse_presentation("# nothing\n"), Err(PresentationError::Syntax { .. })));
    }

    #[test]
    fn comments_and_reduction_warnings() {
        let parsed = parse_presentation("# torus\n\ngens: a b  # two\nrel: b^-1 a b a^-1 b a^-1 b # conj\n").unwrap();
        assert_eq!(parsed.warnings.len(), 1);
        let p = parsed.presentation;
        let expect = p.alphabet().parse_word("a b a^-1 b a^-1").unwrap().cyclic_reduce();
        assert_eq!(p.relators()[0], expect);
    }

    #[test]
    fn display_round_trips() {
        let p = pres("gens: u v\nrel: u^3 v u^3 v^2\nrel: v^-1 u");
        assert_eq!(pres(&p.to_string()), p);
    }

    #[test]
    fn symmetrize_sizes() {
        assert_eq!(symmetrize(&pres("gens: a\nrel: a^4")).len(), 2);
        let torus = pres("gens: a b\nrel: a b a^-1 b^-1");
        assert_eq!(symmetrize(&torus).len(), 8);
        let doubled = pres("gens: a b\nrel: a b a^-1 b^-1\nrel: b a^-1 b^-1 a");
        assert_eq!(symmetrize(&doubled), symmetrize(&torus));
    }

    #[test]
    fn surface_ratios() {
        let g1 = pres("gens: a b\nrel: a b a^-1 b^-1");
        let r = check_small_cancellation(&g1, Ratio::new(1, 6));
        assert!(!r.passed);
        assert_eq!(r.max_ratio, Ratio::new(1, 4));

        let g2 = pres("gens: a b c d\nrel: a b a^-1 b^-1 c d c^-1 d^-1");
        let r = check_small_cancellation(&g2, Ratio::new(1, 6));
        assert!(r.passed);
        assert_eq!(r.max_ratio, Ratio::new(1, 8));
        assert_eq!(r.max_piece_len, 1);
    }

    #[test]
    fn single_power_relator_has_no_pieces() {
        let p = pres("gens: a\nrel: a^4");
        for lambda in [Ratio::new(1, 100), Ratio::new(1, 6), Ratio::from_integer(1)] {
            let r = check_small_cancellation(&p, lambda);
            assert_eq!(r.max_piece_len, 0);
            assert!(r.passed);
            assert_eq!(r.witness_pair, None);
        }
    }

    #[test]
    fn proper_powers() {
        let p = pres("gens: a\nrel: a^4");
        let w = is_proper_power_free(&p).unwrap_err();
        assert_eq!(w.exponent, 4);
        assert_eq!(w.root, p.alphabet().parse_word("a").unwrap());
        assert!(is_proper_power_free(&pres("gens: a b c d\nrel: a b a^-1 b^-1 c d c^-1 d^-1")).is_ok());
        let w = is_proper_power_free(&pres("gens: a b\nrel: a b a b a b")).unwrap_err();
        assert_eq!((w.root.len(), w.exponent), (2, 3));
    }
}
