//! Word-problem backends.
//!
//! Every backend realises the evaluation map from words over its generators
//! to group elements through a normal form: two words get the same
//! [`CanonicalKey`] exactly when they represent the same element. Ball
//! enumeration then needs one evaluation per word and a hash lookup.

mod dehn;
mod structural;
mod table;

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use dehn::{dehn_is_trivial, AbelianInvariant, DehnAlgorithm, DehnOracle, DehnStep, DehnTrace};
pub use structural::{CyclicOracle, ElementaryAbelianOracle, FreeAbelianOracle, FreeOracle, FreeProductOracle, SemidirectOracle};
pub use table::TableOracle;

use crate::error::OracleError;
use crate::presentation::parse_presentation;
use crate::word::{Alphabet, Word};

/// Normal form of a group element. Only equality and order are meaningful
/// across keys of the same oracle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CanonicalKey {
    /// Reduced word (free groups).
    Word(Word),
    /// Residue modulo the cyclic order.
    Residue(u64),
    /// Integer exponent vector (free abelian groups).
    Integers(Vec<i64>),
    /// Exponent vector modulo `p`.
    Residues(Vec<u64>),
    /// Alternating syllables `(generator, exponent)` of a free product of
    /// cyclic groups.
    Syllables(Vec<(usize, u64)>),
    /// Semidirect product element `(normal part, quotient part)`.
    Pair(Box<CanonicalKey>, Box<CanonicalKey>),
    /// Row index in a multiplication table.
    Element(usize),
    /// Equivalence class number assigned by an interning backend; `0` is
    /// the identity.
    Class(u64),
}

/// A word-problem backend for a group with a fixed ordered generating set.
pub trait GroupOracle: Send + Sync + fmt::Debug {
    fn arity(&self) -> usize {
        self.alphabet().len()
    }

    fn alphabet(&self) -> &Alphabet;

    /// The spec text this oracle was built from.
    fn descriptor(&self) -> &str;

    /// Key of the element represented by `w`. Letters must be in range;
    /// use [`evaluate`] for checked access.
    fn normal_form(&self, w: &Word) -> CanonicalKey;

    fn identity_key(&self) -> CanonicalKey {
        self.normal_form(&Word::empty())
    }

    /// Presentation backing the oracle, when there is one.
    fn presentation(&self) -> Option<&crate::presentation::Presentation> {
        None
    }
}

/// Checked evaluation: rejects letters beyond the oracle's arity.
pub fn evaluate(o: &dyn GroupOracle, w: &Word) -> Result<CanonicalKey, OracleError> {
    let arity = o.arity();
    if let Some(l) = w.letters().iter().find(|l| l.gen >= arity) {
        return Err(OracleError::LetterOutOfRange { gen: l.gen, arity });
    }
    Ok(o.normal_form(w))
}

/// Parsed form of an oracle spec such as `cyclic:6` or `pres:file.gp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleSpec {
    Free(usize),
    Cyclic(u64),
    FreeAbelian(usize),
    Table(PathBuf),
    Ap(u64),
    Bp(u64),
    Hp(u64),
    Pres(PathBuf),
}

pub(crate) fn parse_count(spec: &str, value: &str) -> Result<u64, OracleError> {
    match value.trim().parse::<u64>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(OracleError::MalformedSpec { spec: spec.to_string(), reason: format!("expected a positive integer, got `{value}`") }),
    }
}

impl FromStr for OracleSpec {
    type Err = OracleError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let (kind, arg) = spec
            .split_once(':')
            .ok_or_else(|| OracleError::MalformedSpec { spec: spec.to_string(), reason: "expected `kind:argument`".to_string() })?;
        let path = || {
            if arg.is_empty() {
                Err(OracleError::MalformedSpec { spec: spec.to_string(), reason: "empty path".to_string() })
            } else {
                Ok(PathBuf::from(arg))
            }
        };
        Ok(match kind {
            "free" => OracleSpec::Free(parse_count(spec, arg)? as usize),
            "cyclic" => OracleSpec::Cyclic(parse_count(spec, arg)?),
            "zn" => OracleSpec::FreeAbelian(parse_count(spec, arg)? as usize),
            "Ap" => OracleSpec::Ap(parse_count(spec, arg)?),
            "Bp" => OracleSpec::Bp(parse_count(spec, arg)?),
            "Hp" => OracleSpec::Hp(parse_count(spec, arg)?),
            "table" => OracleSpec::Table(path()?),
            "pres" => OracleSpec::Pres(path()?),
            _ => return Err(OracleError::MalformedSpec { spec: spec.to_string(), reason: format!("unknown group kind `{kind}`") }),
        })
    }
}

/// An oracle together with construction warnings.
#[derive(Debug, Clone)]
pub struct BuiltOracle {
    pub oracle: Arc<dyn GroupOracle>,
    pub warnings: Vec<String>,
}

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Builds an oracle from spec text: `free:N`, `cyclic:M`, `zn:N`,
/// `table:PATH`, `Ap:P`, `Bp:P`, `Hp:P` or `pres:PATH`.
///
/// `pres:` oracles run Dehn's algorithm and are refused unless the
/// presentation satisfies `C'(1/6)`.
pub fn build_oracle(spec: &str) -> Result<BuiltOracle, OracleError> {
    let parsed: OracleSpec = spec.parse()?;
    build_from_spec(spec, &parsed)
}

pub(crate) fn build_from_spec(text: &str, spec: &OracleSpec) -> Result<BuiltOracle, OracleError> {
    let mut warnings = Vec::new();
    if let OracleSpec::Ap(p) | OracleSpec::Bp(p) | OracleSpec::Hp(p) = spec {
        if !is_prime(*p) {
            warnings.push(format!("{text}: parameter {p} is not prime"));
        }
    }
    let d = text.to_string();
    let oracle: Arc<dyn GroupOracle> = match spec {
        OracleSpec::Free(n) => Arc::new(FreeOracle::new(*n, d)),
        OracleSpec::Cyclic(m) => Arc::new(CyclicOracle::new(*m, d)),
        OracleSpec::FreeAbelian(n) => Arc::new(FreeAbelianOracle::new(*n, d)),
        OracleSpec::Ap(p) => Arc::new(ElementaryAbelianOracle::new(*p, d)),
        OracleSpec::Bp(p) => Arc::new(FreeProductOracle::new(*p, d)),
        OracleSpec::Hp(p) => Arc::new(SemidirectOracle::new(*p, d)),
        OracleSpec::Table(path) => {
            let text = read(path)?;
            let oracle = TableOracle::from_json(&text, d).map_err(|source| OracleError::Table { path: path.clone(), source })?;
            Arc::new(oracle)
        }
        OracleSpec::Pres(path) => {
            let text = read(path)?;
            let parsed = parse_presentation(&text).map_err(|source| OracleError::Presentation { path: path.clone(), source })?;
            warnings.extend(parsed.warnings);
            Arc::new(DehnOracle::new(parsed.presentation, d)?)
        }
    };
    Ok(BuiltOracle { oracle, warnings })
}

fn read(path: &Path) -> Result<String, OracleError> {
    std::fs::read_to_string(path).map_err(|source| OracleError::Io { path: path.to_path_buf(), source })
}
