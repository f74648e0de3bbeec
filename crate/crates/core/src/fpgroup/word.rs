use serde::{Deserialize, Serialize};
use std::fmt;

/// A letter: `+(i+1)` is generator `i`, `-(i+1)` its inverse.
pub type Letter = i32;

#[inline]
pub fn gen_letter(i: usize) -> Letter {
    i as Letter + 1
}

#[inline]
pub fn letter_gen(x: Letter) -> usize {
    (x.unsigned_abs() - 1) as usize
}

/// An element of a free group, always kept freely reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from raw letters, reducing it.
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Word(Vec::new());
        for x in letters {
            assert!(x != 0, "letter 0 is not a generator");
            w.push(x);
        }
        w
    }

    pub fn gen(i: usize) -> Self {
        Word(vec![gen_letter(i)])
    }

    /// `g_i^k`.
    pub fn power_of(i: usize, k: i64) -> Self {
        let x = if k >= 0 {
            gen_letter(i)
        } else {
            -gen_letter(i)
        };
        Word(vec![x; k.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, x: Letter) {
        if self.0.last() == Some(&-x) {
            self.0.pop();
        } else {
            self.0.push(x);
        }
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &x in &other.0 {
            w.push(x);
        }
        w
    }

    pub fn inv(&self) -> Word {
        Word(self.0.iter().rev().map(|&x| -x).collect())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inv() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Word::identity(), |acc, _| acc.mul(&base))
    }

    /// `g · self · g⁻¹`.
    pub fn conj(&self, g: &Word) -> Word {
        g.mul(self).mul(&g.inv())
    }

    /// `[self, other] = self · other · self⁻¹ · other⁻¹`.
    pub fn commutator(&self, other: &Word) -> Word {
        self.mul(other).mul(&self.inv()).mul(&other.inv())
    }

    /// Cyclically reduced form: strip matching inverse letters from both ends.
    pub fn cyclic_reduce(&self) -> Word {
        let s = &self.0;
        let (mut i, mut j) = (0, s.len());
        while j > i + 1 && s[i] == -s[j - 1] {
            i += 1;
            j -= 1;
        }
        Word(s[i..j].to_vec())
    }

    /// Rotation `x_k … x_n x_1 … x_{k-1}` (freely reduced).
    pub fn rotate(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        Word::new(self.0[k..].iter().chain(&self.0[..k]).copied())
    }

    /// Exponent sum of each of `ngens` generators.
    pub fn exponent_sums(&self, ngens: usize) -> Vec<i128> {
        let mut v = vec![0i128; ngens];
        for &x in &self.0 {
            v[letter_gen(x)] += x.signum() as i128;
        }
        v
    }

    /// Image under the substitution `g_i ↦ images[i]`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Word::identity();
        for &x in &self.0 {
            let img = &images[letter_gen(x)];
            out = if x > 0 {
                out.mul(img)
            } else {
                out.mul(&img.inv())
            };
        }
        out
    }

    pub fn max_gen(&self) -> Option<usize> {
        self.0.iter().map(|&x| letter_gen(x)).max()
    }
}

/// Product of words, in order.
pub fn product<'a>(ws: impl IntoIterator<Item = &'a Word>) -> Word {
    ws.into_iter().fold(Word::identity(), |acc, w| acc.mul(w))
}

/// Free reduction of an arbitrary letter sequence.
pub fn free_reduce(letters: &[Letter]) -> Word {
    Word::new(letters.iter().copied())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..=self.max_gen().unwrap_or(0))
            .map(|i| format!("x{}", i + 1))
            .collect();
        f.write_str(&format_word(self, &names))
    }
}

/// Renders a word as `a^2*b^-1*a`; the identity is `1`.
pub fn format_word(w: &Word, names: &[String]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut parts = Vec::new();
    let s = w.letters();
    let mut i = 0;
    while i < s.len() {
        let x = s[i];
        let start = i;
        while i < s.len() && s[i] == x {
            i += 1;
        }
        let g = letter_gen(x);
        let k = (i - start) as i64 * x.signum() as i64;
        parts.push(if k == 1 {
            names[g].clone()
        } else {
            format!("{}^{}", names[g], k)
        });
    }
    parts.join("*")
}
