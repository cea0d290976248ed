//! Dehn's algorithm for `C'(1/6)` presentations.
//!
//! In such a presentation every nonempty reduced word representing the
//! identity contains more than half of some symmetrized relator as a
//! subword. Replacing that half by the inverse of the remainder strictly
//! shortens the word, so repeating the step decides triviality.

use std::collections::HashMap;
use std::sync::Mutex;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::OracleError;
use crate::oracle::{CanonicalKey, GroupOracle};
use crate::presentation::{check_symmetrized, symmetrize, Presentation, SmallCancellationReport, SymmetrizedSet};
use crate::word::{longest_common_prefix, Alphabet, Word};

/// One rewriting step: `current[position..position+prefix_len]` equals the
/// first `prefix_len` letters of `relator` and is replaced by
/// `replacement`, the inverse of the rest of `relator`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DehnStep {
    pub position: usize,
    pub relator: Word,
    pub prefix_len: usize,
    pub replacement: Word,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DehnTrace {
    /// Input after free and cyclic reduction.
    pub start_word: Word,
    pub steps: Vec<DehnStep>,
    pub final_word: Word,
}

impl DehnTrace {
    pub fn is_trivial(&self) -> bool {
        self.final_word.is_empty()
    }

    /// Re-applies every step as a literal substitution plus free reduction,
    /// checking each step's claims against the symmetrized relators.
    /// Returns the word reached.
    pub fn replay(&self, sym: &SymmetrizedSet) -> Result<Word, String> {
        let mut current = self.start_word.clone();
        for (k, step) in self.steps.iter().enumerate() {
            if !sym.contains(&step.relator) {
                return Err(format!("step {k}: relator is not in the symmetrized set"));
            }
            let m = step.prefix_len;
            if 2 * m <= step.relator.len() || m > step.relator.len() {
                return Err(format!("step {k}: prefix of length {m} is not more than half"));
            }
            let u = &step.relator.letters()[..m];
            let v = Word::from_letters(step.relator.letters()[m..].to_vec());
            if step.replacement != v.inverse() {
                return Err(format!("step {k}: replacement is not the inverse complement"));
            }
            let ls = current.letters();
            if step.position + m > ls.len() || &ls[step.position..step.position + m] != u {
                return Err(format!("step {k}: subword does not match at position {}", step.position));
            }
            let mut next = ls[..step.position].to_vec();
            next.extend_from_slice(step.replacement.letters());
            next.extend_from_slice(&ls[step.position + m..]);
            let next = Word::from_letters(next).free_reduce();
            if next.len() >= current.len() {
                return Err(format!("step {k}: word did not get shorter"));
            }
            current = next;
        }
        Ok(current)
    }
}

/// Dehn's algorithm over a fixed symmetrized relator set.
#[derive(Clone, Debug)]
pub struct DehnAlgorithm {
    sym: SymmetrizedSet,
    /// Indices into `sym` grouped by first letter.
    by_first: Vec<Vec<usize>>,
    min_len: usize,
}

impl DehnAlgorithm {
    /// Symmetrizes `p` and checks `C'(1/6)`; the report is returned as the
    /// error when the check fails.
    pub fn new(p: &Presentation) -> Result<DehnAlgorithm, Box<SmallCancellationReport>> {
        let sym = symmetrize(p);
        let report = check_symmetrized(&sym, Ratio::new(1, 6));
        if !report.passed {
            return Err(Box::new(report));
        }
        let mut by_first = vec![Vec::new(); 2 * p.arity()];
        for (i, w) in sym.words().iter().enumerate() {
            by_first[w.letters()[0].index()].push(i);
        }
        let min_len = sym.min_len();
        Ok(DehnAlgorithm { sym, by_first, min_len })
    }

    pub fn symmetrized(&self) -> &SymmetrizedSet {
        &self.sym
    }

    /// Leftmost position, then longest prefix, then shortlex-least relator.
    fn find_step(&self, current: &Word) -> Option<(usize, usize, usize)> {
        let ls = current.letters();
        for pos in 0..ls.len() {
            // a usable prefix has more than min_len/2 letters
            if 2 * (ls.len() - pos) <= self.min_len {
                break;
            }
            let mut best: Option<(usize, usize)> = None;
            for &idx in &self.by_first[ls[pos].index()] {
                let r = &self.sym.words()[idx];
                let m = longest_common_prefix(&ls[pos..], r.letters());
                if 2 * m > r.len() && best.is_none_or(|(_, bm)| m > bm) {
                    best = Some((idx, m));
                }
            }
            if let Some((idx, m)) = best {
                return Some((pos, idx, m));
            }
        }
        None
    }

    /// Runs the algorithm to completion and records every step.
    pub fn reduce(&self, w: &Word) -> DehnTrace {
        let start_word = w.cyclic_reduce();
        let mut current = start_word.clone();
        let mut steps = Vec::new();
        while let Some((position, idx, prefix_len)) = self.find_step(&current) {
            let relator = self.sym.words()[idx].clone();
            let replacement = Word::from_letters(relator.letters()[prefix_len..].to_vec()).inverse();
            let ls = current.letters();
            let mut next = ls[..position].to_vec();
            next.extend_from_slice(replacement.letters());
            next.extend_from_slice(&ls[position + prefix_len..]);
            current = Word::from_letters(next).free_reduce();
            steps.push(DehnStep { position, relator, prefix_len, replacement });
        }
        DehnTrace { start_word, steps, final_word: current }
    }

    pub fn is_trivial(&self, w: &Word) -> bool {
        self.reduce(w).is_trivial()
    }

    /// Reduced word with no more-than-half relator subword, freely equal
    /// to a conjugate of `w`.
    pub fn dehn_reduced(&self, w: &Word) -> Word {
        self.reduce(w).final_word
    }
}

/// Decides triviality of `w` in `⟨X | R⟩`, refusing presentations that do
/// not satisfy `C'(1/6)`.
pub fn dehn_is_trivial(p: &Presentation, w: &Word) -> Result<(bool, DehnTrace), OracleError> {
    if let Some(l) = w.letters().iter().find(|l| l.gen >= p.arity()) {
        return Err(OracleError::LetterOutOfRange { gen: l.gen, arity: p.arity() });
    }
    let algo = DehnAlgorithm::new(p).map_err(OracleError::NotSmallCancellation)?;
    let trace = algo.reduce(w);
    Ok((trace.is_trivial(), trace))
}

/// Canonical representatives of `Z^n / L` where `L` is spanned by the
/// relators' exponent-sum vectors. Equal group elements have equal images,
/// which makes this a cheap hash bucket for equality testing.
#[derive(Clone, Debug)]
pub struct AbelianInvariant {
    arity: usize,
    /// Echelon basis: `(pivot column, row)` with positive pivots and
    /// strictly increasing pivot columns.
    rows: Vec<(usize, Vec<i128>)>,
}

impl AbelianInvariant {
    pub fn new(p: &Presentation) -> AbelianInvariant {
        let n = p.arity();
        let mut m: Vec<Vec<i128>> = p.relators().iter().map(|r| r.exponent_sums(n).into_iter().map(i128::from).collect()).collect();
        let mut rows = Vec::new();
        let mut top = 0;
        for col in 0..n {
            loop {
                let pivot = (top..m.len()).filter(|&i| m[i][col] != 0).min_by_key(|&i| m[i][col].abs());
                let Some(pi) = pivot else { break };
                m.swap(top, pi);
                let mut clean = true;
                for i in top + 1..m.len() {
                    let q = m[i][col] / m[top][col];
                    if q != 0 {
                        let pivot_row = m[top].clone();
                        m[i].iter_mut().zip(&pivot_row).for_each(|(x, y)| *x -= q * y);
                    }
                    clean &= m[i][col] == 0;
                }
                if clean {
                    if m[top][col] < 0 {
                        m[top].iter_mut().for_each(|x| *x = -*x);
                    }
                    rows.push((col, m[top].clone()));
                    top += 1;
                    break;
                }
            }
        }
        AbelianInvariant { arity: n, rows }
    }

    pub fn image(&self, w: &Word) -> Vec<i64> {
        let mut v: Vec<i128> = w.exponent_sums(self.arity).into_iter().map(i128::from).collect();
        for (col, row) in &self.rows {
            let q = v[*col].div_euclid(row[*col]);
            if q != 0 {
                v.iter_mut().zip(row).for_each(|(x, y)| *x -= q * y);
            }
        }
        v.into_iter().map(|x| x as i64).collect()
    }
}

#[derive(Debug, Default)]
struct ClassTable {
    by_word: HashMap<Word, u64>,
    buckets: HashMap<Vec<i64>, Vec<(Word, u64)>>,
    next: u64,
}

/// Oracle for a `C'(1/6)` presentation.
///
/// Dehn's algorithm decides equality; keys are class numbers handed out by
/// an internal table the first time a class is seen (the identity is class
/// `0`). Keys are therefore stable within one oracle instance, which is
/// all the ball and kernel computations rely on.
#[derive(Debug)]
pub struct DehnOracle {
    presentation: Presentation,
    descriptor: String,
    algo: DehnAlgorithm,
    abelian: AbelianInvariant,
    classes: Mutex<ClassTable>,
}

impl DehnOracle {
    pub fn new(presentation: Presentation, descriptor: String) -> Result<DehnOracle, OracleError> {
        let algo = DehnAlgorithm::new(&presentation).map_err(OracleError::NotSmallCancellation)?;
        let abelian = AbelianInvariant::new(&presentation);
        let classes = Mutex::new(ClassTable { next: 1, ..ClassTable::default() });
        Ok(DehnOracle { presentation, descriptor, algo, abelian, classes })
    }

    pub fn algorithm(&self) -> &DehnAlgorithm {
        &self.algo
    }

    pub fn equal(&self, u: &Word, v: &Word) -> bool {
        self.algo.is_trivial(&u.mul(&v.inverse()))
    }
}

impl GroupOracle for DehnOracle {
    fn alphabet(&self) -> &Alphabet {
        self.presentation.alphabet()
    }

    fn descriptor(&self) -> &str {
        &self.descriptor
    }

    fn presentation(&self) -> Option<&Presentation> {
        Some(&self.presentation)
    }

    fn normal_form(&self, w: &Word) -> CanonicalKey {
        // Conjugating changes the element, so only free-reduce here; Dehn
        // steps are applied to the linear word through `equal`.
        let w = w.free_reduce();
        if w.is_empty() || self.algo.is_trivial(&w) {
            return CanonicalKey::Class(0);
        }
        let mut classes = self.classes.lock().expect("class table lock");
        if let Some(&id) = classes.by_word.get(&w) {
            return CanonicalKey::Class(id);
        }
        let bucket_key = self.abelian.image(&w);
        let found = classes.buckets.get(&bucket_key).and_then(|reps| reps.iter().find(|(rep, _)| self.equal(&w, rep)).map(|&(_, id)| id));
        let id = match found {
            Some(id) => id,
            None => {
                let id = classes.next;
                classes.next += 1;
                classes.buckets.entry(bucket_key).or_default().push((w.clone(), id));
                id
            }
        };
        classes.by_word.insert(w, id);
        CanonicalKey::Class(id)
    }
}
