//! Constructors for the explicit groups and presentations used throughout:
//! the oracle kinds plus the small cancellation families `W_n(k)` and
//! surface groups.

use std::str::FromStr;
use std::sync::Arc;

use crate::error::OracleError;
use crate::marked::MarkedGroup;
use crate::oracle::{build_from_spec, parse_count, DehnOracle, FreeAbelianOracle, GroupOracle, OracleSpec};
use crate::presentation::Presentation;
use crate::word::{Alphabet, Letter, Word};

/// Smallest `k` for which `W_n(k)` gets a Dehn-backed oracle.
pub const WNK_MIN_K: u64 = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Oracle(OracleSpec),
    /// `W_n(k) = ⟨u, v | R_1, ..., R_n⟩`, `R_j = u^j v u^j v^2 ... u^j v^k`.
    Wnk {
        n: u64,
        k: u64,
    },
    /// Closed orientable surface of genus `g`.
    Surface {
        g: u64,
    },
}

impl FromStr for FamilySpec {
    type Err = OracleError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        match spec.split_once(':') {
            Some(("Wnk", args)) => {
                let (n, k) = args
                    .split_once(',')
                    .ok_or_else(|| OracleError::MalformedSpec { spec: spec.to_string(), reason: "expected `Wnk:N,K`".to_string() })?;
                Ok(FamilySpec::Wnk { n: parse_count(spec, n)?, k: parse_count(spec, k)? })
            }
            Some(("surface", g)) => Ok(FamilySpec::Surface { g: parse_count(spec, g)? }),
            _ => Ok(FamilySpec::Oracle(spec.parse()?)),
        }
    }
}

/// What a family spec produces. `marked` is absent only when no sound
/// oracle is available (`W_n(k)` with `k < 30`); `note` then says why.
#[derive(Clone, Debug)]
pub struct Family {
    pub spec: String,
    pub marked: Option<MarkedGroup>,
    pub presentation: Option<Presentation>,
    pub warnings: Vec<String>,
    pub note: Option<String>,
}

impl Family {
    /// The marked group, or an error carrying the explanation.
    pub fn into_marked(self) -> Result<MarkedGroup, OracleError> {
        let note = self.note;
        self.marked.ok_or_else(|| OracleError::NoOracle(note.unwrap_or_else(|| "no oracle for this family".into())))
    }
}

/// The relator `R_j = u^j v u^j v^2 ... u^j v^k` over `u = 0`, `v = 1`.
pub fn wnk_relator(j: u64, k: u64) -> Word {
    let mut w = Word::empty();
    for i in 1..=k {
        w = w.concat(&Word::power_of_gen(0, j as i64));
        w = w.concat(&Word::power_of_gen(1, i as i64));
    }
    w
}

pub fn wnk_presentation(n: u64, k: u64) -> Presentation {
    let alphabet = Alphabet::new(&["u", "v"]).expect("valid names");
    let relators = (1..=n).map(|j| wnk_relator(j, k)).collect();
    Presentation::new(alphabet, relators).expect("W_n(k) relators are cyclically reduced")
}

/// `⟨a_1, b_1, ..., a_g, b_g | [a_1,b_1] ... [a_g,b_g]⟩`.
pub fn surface_presentation(g: u64) -> Presentation {
    let mut names = Vec::new();
    for i in 1..=g {
        names.push(format!("a_{i}"));
        names.push(format!("b_{i}"));
    }
    let alphabet = Alphabet::new(&names).expect("valid names");
    let mut rel = Vec::new();
    for i in 0..g as usize {
        let (a, b) = (2 * i, 2 * i + 1);
        rel.extend([Letter::pos(a), Letter::pos(b), Letter::neg(a), Letter::neg(b)]);
    }
    Presentation::new(alphabet, vec![Word::from_letters(rel)]).expect("surface relator is cyclically reduced")
}

fn power_relators(gens: &[usize], exp: u64) -> Vec<Word> {
    gens.iter().map(|&g| Word::power_of_gen(g, exp as i64)).collect()
}

fn commutator(x: usize, y: usize) -> Word {
    Word::from_letters(vec![Letter::pos(x), Letter::pos(y), Letter::neg(x), Letter::neg(y)])
}

/// Finite presentation matching a structural oracle's marking, where one
/// is available.
fn structural_presentation(spec: &OracleSpec, oracle: &dyn GroupOracle) -> Option<Presentation> {
    let alphabet = oracle.alphabet().clone();
    let n = alphabet.len();
    let relators = match *spec {
        OracleSpec::Free(_) => Vec::new(),
        OracleSpec::Cyclic(m) => power_relators(&[0], m),
        OracleSpec::FreeAbelian(_) => pairs(n).map(|(i, j)| commutator(i, j)).collect(),
        OracleSpec::Ap(p) => {
            let mut r = power_relators(&(0..n).collect::<Vec<_>>(), p);
            r.extend(pairs(n).map(|(i, j)| commutator(i, j)));
            r
        }
        OracleSpec::Bp(p) => power_relators(&[0, 1], p),
        OracleSpec::Hp(p) => {
            let pu = p as usize;
            let mut r = power_relators(&(0..n).collect::<Vec<_>>(), p);
            r.extend(pairs(pu).map(|(i, j)| commutator(i, j)));
            for t in [pu, pu + 1] {
                for i in 0..pu {
                    // t^-1 a_i t a_{i+1}^-1
                    let next = (i + 1) % pu;
                    let w = Word::from_letters(vec![Letter::neg(t), Letter::pos(i), Letter::pos(t), Letter::neg(next)]);
                    r.push(w.cyclic_reduce());
                }
            }
            r
        }
        OracleSpec::Table(_) | OracleSpec::Pres(_) => return oracle.presentation().cloned(),
    };
    let relators = relators.into_iter().map(|w| w.cyclic_reduce()).filter(|w| !w.is_empty()).collect();
    Presentation::new(alphabet, relators).ok()
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// Builds a family from its spec text (any oracle spec, `Wnk:N,K` or
/// `surface:G`).
pub fn build_family(spec: &str) -> Result<Family, OracleError> {
    let parsed: FamilySpec = spec.parse()?;
    match parsed {
        FamilySpec::Oracle(os) => {
            let built = build_from_spec(spec, &os)?;
            let presentation = structural_presentation(&os, &*built.oracle);
            let marked = MarkedGroup::new(built.oracle, spec).with_presentation(presentation.clone());
            Ok(Family { spec: spec.to_string(), marked: Some(marked), presentation, warnings: built.warnings, note: None })
        }
        FamilySpec::Wnk { n, k } => {
            let p = wnk_presentation(n, k);
            if k < WNK_MIN_K {
                let note = format!("{spec}: k = {k} < {WNK_MIN_K}, so C'(1/6) is not guaranteed; presentation only");
                return Ok(Family {
                    spec: spec.to_string(),
                    marked: None,
                    presentation: Some(p),
                    warnings: vec![note.clone()],
                    note: Some(note),
                });
            }
            let oracle = Arc::new(DehnOracle::new(p.clone(), spec.to_string())?);
            let marked = MarkedGroup::new(oracle, spec);
            Ok(Family { spec: spec.to_string(), marked: Some(marked), presentation: Some(p), warnings: Vec::new(), note: None })
        }
        FamilySpec::Surface { g } => {
            let p = surface_presentation(g);
            let oracle: Arc<dyn GroupOracle> = if g == 1 {
                // the torus group is Z^2, marked by a_1, b_1
                Arc::new(FreeAbelianOracle::new(2, spec.to_string()).with_alphabet(p.alphabet().clone()))
            } else {
                Arc::new(DehnOracle::new(p.clone(), spec.to_string())?)
            };
            let marked = MarkedGroup::new(oracle, spec).with_presentation(Some(p.clone()));
            Ok(Family { spec: spec.to_string(), marked: Some(marked), presentation: Some(p), warnings: Vec::new(), note: None })
        }
    }
}

/// Shorthand for `build_family(spec)?.into_marked()`.
pub fn marked_group(spec: &str) -> Result<MarkedGroup, OracleError> {
    build_family(spec)?.into_marked()
}
