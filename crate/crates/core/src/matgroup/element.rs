use serde::Serialize;
use std::fmt;

/// A 4×4 monomial matrix whose nonzero entries are powers of `ω = e^{2πi/N}`.
///
/// Row `i` has the entry `ω^{exps[i]}` in column `perm[i]`, so as a map on
/// coordinates `(g·v)_i = ω^{exps[i]} · v_{perm[i]}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MonomialElement {
    pub perm: [u8; 4],
    pub exps: [u32; 4],
    pub n: u32,
}

impl MonomialElement {
    pub fn identity(n: u32) -> Self {
        MonomialElement {
            perm: [0, 1, 2, 3],
            exps: [0; 4],
            n,
        }
    }

    /// Reduces exponents mod `n`; panics if `perm` is not a permutation.
    pub fn new(perm: [u8; 4], exps: [i64; 4], n: u32) -> Self {
        let mut seen = [false; 4];
        for &p in &perm {
            assert!(p < 4 && !seen[p as usize], "not a permutation: {perm:?}");
            seen[p as usize] = true;
        }
        let exps = exps.map(|e| e.rem_euclid(n as i64) as u32);
        MonomialElement { perm, exps, n }
    }

    /// Diagonal element `ω^{e₀}, …, ω^{e₃}`.
    pub fn diagonal(exps: [i64; 4], n: u32) -> Self {
        Self::new([0, 1, 2, 3], exps, n)
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "moduli differ");
        let mut perm = [0u8; 4];
        let mut exps = [0u32; 4];
        for i in 0..4 {
            let j = self.perm[i] as usize;
            perm[i] = other.perm[j];
            exps[i] = (self.exps[i] + other.exps[j]) % self.n;
        }
        MonomialElement {
            perm,
            exps,
            n: self.n,
        }
    }

    pub fn inv(&self) -> Self {
        let mut perm = [0u8; 4];
        let mut exps = [0u32; 4];
        for i in 0..4 {
            let j = self.perm[i] as usize;
            perm[j] = i as u8;
            exps[j] = (self.n - self.exps[i]) % self.n;
        }
        MonomialElement {
            perm,
            exps,
            n: self.n,
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let mut base = if k < 0 { self.inv() } else { *self };
        let mut k = k.unsigned_abs();
        let mut acc = Self::identity(self.n);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn order(&self) -> u64 {
        let mut x = *self;
        let mut k = 1;
        while !x.is_identity() {
            x = x.mul(self);
            k += 1;
        }
        k
    }

    /// Cycles of the underlying permutation with the exponent sum along
    /// each; on a cycle of length `L` the `L`-th power acts as `ω^{sum}`.
    pub fn cycle_products(&self) -> Vec<(Vec<usize>, u32)> {
        let mut seen = [false; 4];
        let mut out = Vec::new();
        for start in 0..4 {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut sum = 0u64;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i);
                sum += self.exps[i] as u64;
                i = self.perm[i] as usize;
            }
            out.push((cyc, (sum % self.n as u64) as u32));
        }
        out
    }

    /// Eigenvalue 1 occurs iff some cycle has coefficient product 1.
    pub fn has_fixed_vector(&self) -> bool {
        self.cycle_products().iter().any(|(_, s)| *s == 0)
    }

    /// Determinant as a power of `ω` (sign of the permutation included).
    pub fn det_exponent(&self) -> u32 {
        let cycles = self.cycle_products();
        let odd = cycles.iter().filter(|(c, _)| c.len() % 2 == 0).count() % 2 == 1;
        let sum: u64 = self.exps.iter().map(|&e| e as u64).sum::<u64>()
            + if odd { self.n as u64 / 2 } else { 0 };
        assert!(!odd || self.n.is_multiple_of(2), "sign −1 needs even N");
        (sum % self.n as u64) as u32
    }

    /// Entries as `(re, im)` pairs, row-major.
    pub fn to_complex(&self) -> [[(f64, f64); 4]; 4] {
        let mut m = [[(0.0, 0.0); 4]; 4];
        for i in 0..4 {
            let t = std::f64::consts::TAU * self.exps[i] as f64 / self.n as f64;
            m[i][self.perm[i] as usize] = (t.cos(), t.sin());
        }
        m
    }
}

impl fmt::Display for MonomialElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 0..4 {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "ω^{}·v{}", self.exps[i], self.perm[i])?;
        }
        write!(f, ") mod {}", self.n)
    }
}
