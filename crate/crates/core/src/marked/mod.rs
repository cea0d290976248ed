//! The space of marked groups, seen through finite balls.
//!
//! A [`MarkedGroup`] is an oracle plus an ordered tuple of marker words.
//! Everything here is computed from radius-`r` Cayley balls around the
//! identity, enumerated in shortlex breadth-first order so that the
//! numbering of vertices (and hence [`BallSignature`]) is canonical.

mod ball;
mod certificate;
mod chabauty;
mod nielsen;
mod pattern;
mod similarity;

use std::fmt;
use std::sync::Arc;

pub use ball::{ball, ball_signature, growth, BallExplorer, BallExport, BallGraph, BallSignature};
pub use certificate::{
    check_lacunary_certificate, injectivity_radius, EpimorphismCheck, InjectivityReport, LacunaryCertificate, LacunaryReport, LinkReport,
};
pub use chabauty::{in_basic_open, kernel_elements};
pub use nielsen::{nielsen_apply, parse_moves, NielsenMove};
pub use pattern::pattern_sentence;
pub use similarity::{similarity_radius, MarkedDistance, Similarity};

use crate::error::OracleError;
use crate::oracle::{CanonicalKey, GroupOracle};
use crate::presentation::Presentation;
use crate::word::{Alphabet, Word};

/// A group with an ordered tuple of markers, each a word in the oracle's
/// generators.
#[derive(Clone)]
pub struct MarkedGroup {
    oracle: Arc<dyn GroupOracle>,
    markers: Vec<Word>,
    /// Markers are exactly the oracle generators, in order.
    standard: bool,
    alphabet: Alphabet,
    presentation: Option<Presentation>,
    label: String,
}

impl fmt::Debug for MarkedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MarkedGroup").field("label", &self.label).field("arity", &self.arity()).finish()
    }
}

impl MarkedGroup {
    /// The oracle's own generators as the marking.
    pub fn new(oracle: Arc<dyn GroupOracle>, label: &str) -> MarkedGroup {
        let n = oracle.arity();
        let markers = (0..n).map(|g| Word::letter(crate::word::Letter::pos(g))).collect();
        MarkedGroup {
            alphabet: oracle.alphabet().clone(),
            presentation: oracle.presentation().cloned(),
            oracle,
            markers,
            standard: true,
            label: label.to_string(),
        }
    }

    /// Attaches a presentation whose relators are words in the markers.
    pub fn with_presentation(mut self, p: Option<Presentation>) -> MarkedGroup {
        if p.is_some() {
            self.presentation = p;
        }
        self
    }

    /// A new marking of the same group. The presentation is dropped since
    /// it was written in the old markers.
    pub fn with_markers(&self, markers: Vec<Word>, alphabet: Alphabet, label: String) -> MarkedGroup {
        assert_eq!(markers.len(), alphabet.len());
        let n = self.oracle.arity();
        let standard = markers.len() == n && markers.iter().enumerate().all(|(g, w)| *w == Word::letter(crate::word::Letter::pos(g)));
        MarkedGroup { oracle: self.oracle.clone(), markers, standard, alphabet, presentation: None, label }
    }

    pub fn arity(&self) -> usize {
        self.markers.len()
    }

    pub fn oracle(&self) -> &Arc<dyn GroupOracle> {
        &self.oracle
    }

    /// Markers as words in the oracle's generators.
    pub fn markers(&self) -> &[Word] {
        &self.markers
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn presentation(&self) -> Option<&Presentation> {
        self.presentation.as_ref()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Key of a word in the markers. Letters must be below [`arity`].
    ///
    /// [`arity`]: MarkedGroup::arity
    pub fn key(&self, w: &Word) -> CanonicalKey {
        if self.standard {
            self.oracle.normal_form(w)
        } else {
            self.oracle.normal_form(&w.substitute(&self.markers))
        }
    }

    pub fn evaluate(&self, w: &Word) -> Result<CanonicalKey, OracleError> {
        let arity = self.arity();
        if let Some(l) = w.letters().iter().find(|l| l.gen >= arity) {
            return Err(OracleError::LetterOutOfRange { gen: l.gen, arity });
        }
        Ok(self.key(w))
    }

    pub fn identity_key(&self) -> CanonicalKey {
        self.oracle.identity_key()
    }

    pub fn is_identity(&self, w: &Word) -> bool {
        self.key(w) == self.identity_key()
    }

    /// Text for the markers in the oracle's own alphabet.
    pub fn marker_texts(&self) -> Vec<String> {
        self.markers.iter().map(|w| self.oracle.alphabet().format_word(w)).collect()
    }
}
