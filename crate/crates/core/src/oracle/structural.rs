//! Oracles whose normal forms come straight from the group's structure.

use crate::oracle::{CanonicalKey, GroupOracle};
use crate::word::{Alphabet, Letter, Word};

fn signed(l: Letter) -> i64 {
    l.sign.as_i64()
}

fn add_mod(x: u64, delta: i64, m: u64) -> u64 {
    (x as i64 + delta).rem_euclid(m as i64) as u64
}

/// Free group of rank `n`; the key is the reduced word.
#[derive(Debug)]
pub struct FreeOracle {
    alphabet: Alphabet,
    descriptor: String,
}

impl FreeOracle {
    pub fn new(rank: usize, descriptor: String) -> FreeOracle {
        FreeOracle { alphabet: Alphabet::standard(rank), descriptor }
    }
}

impl GroupOracle for FreeOracle {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn descriptor(&self) -> &str {
        &self.descriptor
    }

    fn normal_form(&self, w: &Word) -> CanonicalKey {
        CanonicalKey::Word(w.free_reduce())
    }
}

/// `Z/mZ` marked by `1`.
#[derive(Debug)]
pub struct CyclicOracle {
    modulus: u64,
    alphabet: Alphabet,
    descriptor: String,
}

impl CyclicOracle {
    pub fn new(modulus: u64, descriptor: String) -> CyclicOracle {
        CyclicOracle { modulus, alphabet: Alphabet::standard(1), descriptor }
    }
}

impl GroupOracle for CyclicOracle {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn descriptor(&self) -> &str {
        &self.descriptor
    }

    fn normal_form(&self, w: &Word) -> CanonicalKey {
        let r = w.letters().iter().fold(0, |acc, &l| add_mod(acc, signed(l), self.modulus));
        CanonicalKey::Residue(r)
    }
}

/// `Z^n` marked by the standard basis.
#[derive(Debug)]
pub struct FreeAbelianOracle {
    alphabet: Alphabet,
    descriptor: String,
}

impl FreeAbelianOracle {
    pub fn new(rank: usize, descriptor: String) -> FreeAbelianOracle {
        FreeAbelianOracle { alphabet: Alphabet::standard(rank), descriptor }
    }

    /// Same group with different generator names; the rank must match.
    pub fn with_alphabet(self, alphabet: Alphabet) -> FreeAbelianOracle {
        assert_eq!(alphabet.len(), self.alphabet.len());
        FreeAbelianOracle { alphabet, ..self }
    }
}

impl GroupOracle for FreeAbelianOracle {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn descriptor(&self) -> &str {
        &self.descriptor
    }

    fn normal_form(&self, w: &Word) -> CanonicalKey {
        CanonicalKey::Integers(w.exponent_sums(self.alphabet.len()))
    }
}

/// `A_p = (Z/pZ)^p` marked by `a_1, ..., a_p`.
#[derive(Debug)]
pub struct ElementaryAbelianOracle {
    p: u64,
    alphabet: Alphabet,
    descriptor: String,
}

impl ElementaryAbelianOracle {
    pub fn new(p: u64, descriptor: String) -> ElementaryAbelianOracle {
        ElementaryAbelianOracle { p, alphabet: Alphabet::indexed("a", p as usize), descriptor }
    }
}

impl GroupOracle for ElementaryAbelianOracle {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn descriptor(&self) -> &str {
        &self.descriptor
    }

    fn normal_form(&self, w: &Word) -> CanonicalKey {
        let mut v = vec![0; self.p as usize];
        for &l in w.letters() {
            v[l.gen] = add_mod(v[l.gen], signed(l), self.p);
        }
        CanonicalKey::Residues(v)
    }
}

/// Right-multiplies an alternating syllable sequence of `Z/p * Z/p` by
/// `gen^delta`, merging and cancelling at the junction.
fn push_syllable(syllables: &mut Vec<(usize, u64)>, gen: usize, delta: i64, p: u64) {
    match syllables.last_mut() {
        Some((g, e)) if *g == gen => {
            *e = add_mod(*e, delta, p);
            if *e == 0 {
                syllables.pop();
            }
        }
        _ => {
            let e = add_mod(0, delta, p);
            if e != 0 {
                syllables.push((gen, e));
            }
        }
    }
}

/// `B_p = Z/pZ * Z/pZ` marked by `c, d`.
#[derive(Debug)]
pub struct FreeProductOracle {
    p: u64,
    alphabet: Alphabet,
    descriptor: String,
}

impl FreeProductOracle {
    pub fn new(p: u64, descriptor: String) -> FreeProductOracle {
        let alphabet = Alphabet::new(&["c", "d"]).expect("valid names");
        FreeProductOracle { p, alphabet, descriptor }
    }
}

impl GroupOracle for FreeProductOracle {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn descriptor(&self) -> &str {
        &self.descriptor
    }

    fn normal_form(&self, w: &Word) -> CanonicalKey {
        let mut syl = Vec::new();
        for &l in w.letters() {
            push_syllable(&mut syl, l.gen, signed(l), self.p);
        }
        CanonicalKey::Syllables(syl)
    }
}

/// `H_p = A_p ⋊ B_p` marked by `a_1, ..., a_p, c, d`.
///
/// Elements are pairs `(v, w)` with `v ∈ (Z/p)^p` and `w` a `B_p` normal
/// form, multiplied as `(v₁,w₁)(v₂,w₂) = (v₁ + σ^{s(w₁)} v₂, w₁w₂)` where
/// `s` is the exponent sum mod `p` and `(σv)[i] = v[i+1 mod p]`. Both `c`
/// and `d` act by `σ`, so `c⁻¹ a_i c = a_{i+1}`.
#[derive(Debug)]
pub struct SemidirectOracle {
    p: u64,
    alphabet: Alphabet,
    descriptor: String,
}

impl SemidirectOracle {
    pub fn new(p: u64, descriptor: String) -> SemidirectOracle {
        let mut names = Alphabet::indexed("a", p as usize).names();
        names.push("c".to_string());
        names.push("d".to_string());
        let alphabet = Alphabet::new(&names).expect("valid names");
        SemidirectOracle { p, alphabet, descriptor }
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

impl GroupOracle for SemidirectOracle {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn descriptor(&self) -> &str {
        &self.descriptor
    }

    fn normal_form(&self, w: &Word) -> CanonicalKey {
        let p = self.p;
        let pu = p as usize;
        let mut v = vec![0; pu];
        let mut syl = Vec::new();
        // exponent sum of the B_p part so far, mod p
        let mut shift = 0u64;
        for &l in w.letters() {
            if l.gen < pu {
                // σ^s e_i = e_{i-s}
                let slot = (l.gen + pu - shift as usize % pu) % pu;
                v[slot] = add_mod(v[slot], signed(l), p);
            } else {
                push_syllable(&mut syl, l.gen - pu, signed(l), p);
                shift = add_mod(shift, signed(l), p);
            }
        }
        CanonicalKey::Pair(Box::new(CanonicalKey::Residues(v)), Box::new(CanonicalKey::Syllables(syl)))
    }
}
