use crate::fpgroup::{parse_word, Word};
use serde::{Deserialize, Serialize};

use super::ZvkError;

/// A word in the Artin generators `σ_1 … σ_{n-1}` of the braid group on
/// `n` strands. Letter `±i` is `σ_i^{±1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidWord {
    pub strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, ZvkError> {
        if let Some(&bad) = letters
            .iter()
            .find(|&&x| x == 0 || x.unsigned_abs() as usize >= strands)
        {
            return Err(ZvkError::BadBraidLetter {
                letter: bad,
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// Parses `s2^-6*s1`, `1` for the trivial braid.
    pub fn parse(strands: usize, s: &str) -> Result<Self, ZvkError> {
        let names: Vec<String> = (1..strands.max(2)).map(|i| format!("s{i}")).collect();
        let w = parse_word(s, &names).map_err(|e| ZvkError::Parse(e.to_string()))?;
        BraidWord::new(strands, w.letters().to_vec())
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn inv(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&x| -x).collect(),
        }
    }

    pub fn then(&self, other: &BraidWord) -> Self {
        assert_eq!(self.strands, other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// `τ · β · τ⁻¹`.
    pub fn conjugate_by(&self, tau: &BraidWord) -> Self {
        tau.then(self).then(&tau.inv())
    }

    /// Images of the free generators `x_1 … x_n`.
    pub fn images(&self) -> Vec<Word> {
        (0..self.strands)
            .map(|i| artin_act(self, &Word::gen(i)))
            .collect()
    }
}

/// Right Artin action on the free group `F_n = ⟨x_1,…,x_n⟩`:
/// `σ_i: x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i`, and `w·(b₁b₂) = (w·b₁)·b₂`.
pub fn artin_act(b: &BraidWord, w: &Word) -> Word {
    let n = b.strands;
    let mut cur = w.clone();
    let mut images: Vec<Word> = (0..n).map(Word::gen).collect();
    for &s in b.letters() {
        let i = s.unsigned_abs() as usize - 1;
        let (xi, xj) = (Word::gen(i), Word::gen(i + 1));
        for (k, img) in images.iter_mut().enumerate() {
            *img = Word::gen(k);
        }
        if s > 0 {
            images[i] = xi.mul(&xj).mul(&xi.inv());
            images[i + 1] = xi;
        } else {
            images[i] = xj.clone();
            images[i + 1] = xj.inv().mul(&xi).mul(&xj);
        }
        cur = cur.substitute(&images);
    }
    cur
}
