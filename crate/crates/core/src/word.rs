//! Free-group words over a finite alphabet of signed generator letters.
//!
//! A [`Word`] is just a sequence of [`Letter`]s. Being reduced or cyclically
//! reduced is a predicate, not a type: callers decide when to normalise.
//! Display names live only in an [`Alphabet`], so words stay independent of
//! how generators are printed.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::WordParseError;

/// Exponent sign of a letter. `Pos` sorts before `Neg`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A generator `x_gen` or its inverse.
///
/// The derived order is generator index first, then `+` before `-`, which
/// is the letter order used by every shortlex comparison in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub gen: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(gen: usize) -> Letter {
        Letter { gen, sign: Sign::Pos }
    }

    pub fn neg(gen: usize) -> Letter {
        Letter { gen, sign: Sign::Neg }
    }

    pub fn inverse(self) -> Letter {
        Letter { gen: self.gen, sign: self.sign.flip() }
    }

    /// Dense index in `0..2n`: `2*gen` for `x`, `2*gen+1` for `x^-1`.
    pub fn index(self) -> usize {
        2 * self.gen + usize::from(self.sign == Sign::Neg)
    }

    pub fn from_index(idx: usize) -> Letter {
        let sign = if idx.is_multiple_of(2) { Sign::Pos } else { Sign::Neg };
        Letter { gen: idx / 2, sign }
    }

    /// All `2n` signed letters of an `n`-letter alphabet in letter order.
    pub fn all(arity: usize) -> impl Iterator<Item = Letter> + Clone {
        (0..2 * arity).map(Letter::from_index)
    }
}

/// A finite sequence of letters. The empty word is the identity.
///
/// `Ord` is shortlex: shorter words first, equal lengths compared
/// lexicographically in letter order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letter(l: Letter) -> Word {
        Word(vec![l])
    }

    /// `x_gen^exp`; a negative exponent yields inverse letters.
    pub fn power_of_gen(gen: usize, exp: i64) -> Word {
        let l = if exp >= 0 { Letter::pos(gen) } else { Letter::neg(gen) };
        Word(vec![l; exp.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest generator index used plus one (0 for the empty word).
    pub fn max_gen_bound(&self) -> usize {
        self.0.iter().map(|l| l.gen + 1).max().unwrap_or(0)
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Literal concatenation, no cancellation.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Reduced product `free_reduce(self · other)`.
    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.free_reduce();
        for &l in other.letters() {
            push_reduced(&mut out.0, l);
        }
        out
    }

    /// Literal `m`-fold repetition.
    pub fn pow(&self, m: usize) -> Word {
        Word(self.0.repeat(m))
    }

    /// Replaces each letter `x_i^{±1}` by `images[i]^{±1}` and reduces.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Vec::new();
        for &l in &self.0 {
            let img = &images[l.gen];
            match l.sign {
                Sign::Pos => img.0.iter().for_each(|&x| push_reduced(&mut out, x)),
                Sign::Neg => img.0.iter().rev().for_each(|&x| push_reduced(&mut out, x.inverse())),
            }
        }
        Word(out)
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1].inverse())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_reduced()
            && match (self.0.first(), self.0.last()) {
                (Some(&a), Some(&b)) => self.len() == 1 || a != b.inverse(),
                _ => true,
            }
    }

    /// The unique reduced word freely equal to `self`.
    pub fn free_reduce(&self) -> Word {
        let mut out = Vec::with_capacity(self.len());
        for &l in &self.0 {
            push_reduced(&mut out, l);
        }
        Word(out)
    }

    /// Cyclically reduced core of `self`.
    pub fn cyclic_reduce(&self) -> Word {
        self.cyclic_decompose().1
    }

    /// Splits `free_reduce(self)` as `prefix · core · prefix^-1` with `core`
    /// cyclically reduced.
    pub fn cyclic_decompose(&self) -> (Word, Word) {
        let r = self.free_reduce().0;
        let mut lo = 0;
        let mut hi = r.len();
        while hi - lo >= 2 && r[lo] == r[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        (Word(r[..lo].to_vec()), Word(r[lo..hi].to_vec()))
    }

    /// Cyclic shift starting at position `k`.
    pub fn rotate(&self, k: usize) -> Word {
        if self.is_empty() {
            return Word::empty();
        }
        let k = k % self.len();
        let mut v = Vec::with_capacity(self.len());
        v.extend_from_slice(&self.0[k..]);
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    pub fn rotations(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.len().max(1)).map(move |k| self.rotate(k))
    }

    pub fn starts_with(&self, prefix: &[Letter]) -> bool {
        self.0.starts_with(prefix)
    }

    /// Sum of exponents per generator, `arity` entries.
    pub fn exponent_sums(&self, arity: usize) -> Vec<i64> {
        let mut v = vec![0; arity];
        for l in &self.0 {
            v[l.gen] += l.sign.as_i64();
        }
        v
    }

    /// Smallest `d` dividing `len` with `self = (self[..d])^(len/d)`.
    pub fn primitive_period(&self) -> usize {
        let n = self.len();
        (1..=n).filter(|&d| n.is_multiple_of(d)).find(|&d| (d..n).all(|i| self.0[i] == self.0[i - d])).unwrap_or(n)
    }
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if out.last() == Some(&l.inverse()) {
        out.pop();
    } else {
        out.push(l);
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Word {
        Word(v)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

/// Length of the longest common prefix of `u` and `v`.
pub fn longest_common_prefix(u: &[Letter], v: &[Letter]) -> usize {
    u.iter().zip(v).take_while(|(a, b)| a == b).count()
}

/// All freely reduced words of length at most `max_len` over `arity`
/// generators, in shortlex order.
pub fn reduced_words(arity: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer_start = 0;
    for _ in 0..max_len {
        let layer_end = out.len();
        for i in layer_start..layer_end {
            for l in Letter::all(arity) {
                if out[i].0.last() == Some(&l.inverse()) {
                    continue;
                }
                let mut w = out[i].clone();
                w.push(l);
                out.push(w);
            }
        }
        layer_start = layer_end;
    }
    out
}

/// A generator with its display name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub index: usize,
    pub name: String,
}

/// Ordered list of named generators; the index of a generator is its
/// position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alphabet {
    gens: Vec<Generator>,
}

pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    /// Builds an alphabet, rejecting malformed or duplicate names.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Alphabet, WordParseError> {
        let mut gens = Vec::with_capacity(names.len());
        for (index, n) in names.iter().enumerate() {
            let name = n.as_ref();
            if !is_valid_name(name) {
                return Err(WordParseError::BadName(name.to_string()));
            }
            if gens.iter().any(|g: &Generator| g.name == name) {
                return Err(WordParseError::DuplicateName(name.to_string()));
            }
            gens.push(Generator { index, name: name.to_string() });
        }
        Ok(Alphabet { gens })
    }

    /// `a, b, c, ...` for small ranks, `x1, x2, ...` beyond 26.
    pub fn standard(n: usize) -> Alphabet {
        let names: Vec<String> = if n <= 26 {
            (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
        } else {
            (1..=n).map(|i| format!("x{i}")).collect()
        };
        Alphabet::new(&names).expect("standard names are valid")
    }

    /// `prefix_1, ..., prefix_n`.
    pub fn indexed(prefix: &str, n: usize) -> Alphabet {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}_{i}")).collect();
        Alphabet::new(&names).expect("indexed names are valid")
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn names(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.name.clone()).collect()
    }

    pub fn name(&self, gen: usize) -> &str {
        &self.gens[gen].name
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    /// Parses whitespace-separated tokens `name` or `name^k` (k a nonzero
    /// integer). The token `1` stands for the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word, WordParseError> {
        let mut letters = Vec::new();
        let mut col = 0;
        for tok in text.split_whitespace() {
            col = text[col..].find(tok).map(|p| p + col).unwrap_or(col);
            let column = col + 1;
            col += tok.len();
            if tok == "1" {
                continue;
            }
            let (name, exp) = match tok.split_once('^') {
                None => (tok, 1i64),
                Some((name, e)) => {
                    let exp: i64 = e.parse().map_err(|_| WordParseError::BadExponent { token: tok.to_string(), column })?;
                    if exp == 0 {
                        return Err(WordParseError::BadExponent { token: tok.to_string(), column });
                    }
                    (name, exp)
                }
            };
            let gen = self.lookup(name).ok_or_else(|| WordParseError::UnknownGenerator { name: name.to_string(), column })?;
            letters.extend(Word::power_of_gen(gen, exp).0);
        }
        Ok(Word(letters))
    }

    /// Prints `w`, folding runs of one letter into `name^k`. The empty word
    /// prints as `1`.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        let ls = w.letters();
        while i < ls.len() {
            let mut j = i;
            while j < ls.len() && ls[j] == ls[i] {
                j += 1;
            }
            let run = (j - i) as i64 * ls[i].sign.as_i64();
            let name = self.name(ls[i].gen);
            parts.push(if run == 1 { name.to_string() } else { format!("{name}^{run}") });
            i = j;
        }
        parts.join(" ")
    }
}

/// Wraps a word with an alphabet for printing.
pub struct DisplayWord<'a>(pub &'a Alphabet, pub &'a Word);

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.format_word(self.1))
    }
}
