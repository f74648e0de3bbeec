//! Exact sparse multivariate polynomials.
//!
//! Coefficients are rationals times an optional root of unity `ω^k`,
//! `k mod N`. With `N = 1` this is ordinary ℚ[x₁,…,xₙ]. Root-of-unity terms
//! are kept apart by exponent (the group ring ℚ[ℤ/N]); no cyclotomic
//! reduction is performed, so equalities found here also hold in ℚ(ω).

mod parse;

pub use parse::{parse_polynomial, ParseOptions};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("parse error in {input:?} at byte {pos}: {msg}")]
    Parse {
        input: String,
        pos: usize,
        msg: String,
    },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("the polynomial is zero")]
    ZeroPolynomial,
    #[error("expected {expected} images, got {got}")]
    Arity { expected: usize, got: usize },
}

/// Exponent vector plus root-of-unity exponent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Key {
    exps: Vec<u32>,
    root: u32,
}

fn total(e: &[u32]) -> u64 {
    e.iter().map(|&x| x as u64).sum()
}

/// Graded lexicographic order on exponent vectors.
pub fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    total(a).cmp(&total(b)).then_with(|| a.cmp(b))
}

#[derive(Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    vars: Vec<String>,
    modulus: u32,
    terms: BTreeMap<Key, BigRational>,
}

/// Substitution rule: variable `i` of the source goes to `images[i]`.
#[derive(Clone, Debug)]
pub struct PolyMap {
    pub images: Vec<SparsePolynomial>,
}

impl PolyMap {
    /// Parses one expression per source variable over `vars`.
    pub fn parse(exprs: &[&str], vars: &[&str]) -> Result<Self, PolyError> {
        let images = exprs
            .iter()
            .map(|e| SparsePolynomial::parse(e, vars))
            .collect::<Result<_, _>>()?;
        Ok(PolyMap { images })
    }
}

impl SparsePolynomial {
    pub fn zero(vars: &[&str]) -> Self {
        Self::zero_like(&vars.iter().map(|s| s.to_string()).collect::<Vec<_>>(), 1)
    }

    fn zero_like(vars: &[String], modulus: u32) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        SparsePolynomial {
            vars: vars.to_vec(),
            modulus,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: BigRational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], 0, c);
        p
    }

    pub fn var(vars: &[&str], i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = Self::zero(vars);
        p.add_term(e, 0, BigRational::one());
        p
    }

    /// Parses over ℚ with the given variables.
    pub fn parse(s: &str, vars: &[&str]) -> Result<Self, PolyError> {
        parse_polynomial(s, &ParseOptions::new(vars))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Order `N` of the root of unity used by coefficients (1 = plain ℚ).
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True if no coefficient carries a nontrivial root of unity.
    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|k| k.root == 0)
    }

    /// Terms as `(exponents, root exponent, coefficient)`, grlex descending.
    pub fn terms(&self) -> Vec<(Vec<u32>, u32, BigRational)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(k, c)| (k.exps.clone(), k.root, c.clone()))
            .collect();
        v.sort_by(|a, b| grlex(&b.0, &a.0).then(a.1.cmp(&b.1)));
        v
    }

    fn add_term(&mut self, exps: Vec<u32>, root: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let key = Key {
            exps,
            root: root % self.modulus,
        };
        let slot = self
            .terms
            .entry(key.clone())
            .or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Reinterprets coefficients modulo a multiple `n` of the current modulus.
    pub fn with_modulus(&self, n: u32) -> Self {
        assert!(
            n.is_multiple_of(self.modulus),
            "modulus {n} is not a multiple of {}",
            self.modulus
        );
        let f = n / self.modulus;
        let mut out = Self::zero_like(&self.vars, n);
        for (k, c) in &self.terms {
            out.add_term(k.exps.clone(), k.root * f, c.clone());
        }
        out
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        assert_eq!(
            self.vars, other.vars,
            "polynomials over different variables"
        );
        if self.modulus == other.modulus {
            return (self.clone(), other.clone());
        }
        let n = num_integer::lcm(self.modulus, other.modulus);
        (self.with_modulus(n), other.with_modulus(n))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.common(other);
        for (k, c) in b.terms {
            a.add_term(k.exps, k.root, c);
        }
        a
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.common(other);
        let mut out = Self::zero_like(&a.vars, a.modulus);
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                let e = ka.exps.iter().zip(&kb.exps).map(|(x, y)| x + y).collect();
                out.add_term(e, ka.root + kb.root, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    fn one_like(&self) -> Self {
        let mut p = Self::zero_like(&self.vars, self.modulus);
        p.add_term(vec![0; self.nvars()], 0, BigRational::one());
        p
    }

    /// Multiplies by `c·ω^root`.
    pub fn scale(&self, c: &BigRational, root: u32) -> Self {
        let mut out = Self::zero_like(&self.vars, self.modulus);
        for (k, v) in &self.terms {
            out.add_term(k.exps.clone(), k.root + root, v * c);
        }
        out
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|k| total(&k.exps)).max()
    }

    /// Smallest total degree of a term.
    pub fn min_degree(&self) -> Option<u64> {
        self.terms.keys().map(|k| total(&k.exps)).min()
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> Option<u64> {
        assert_eq!(weights.len(), self.nvars());
        self.terms.keys().map(|k| wdeg(&k.exps, weights)).max()
    }

    pub fn is_weighted_homogeneous(&self, weights: &[u64]) -> bool {
        let mut it = self.terms.keys().map(|k| wdeg(&k.exps, weights));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Sum of the terms of total degree `d`.
    pub fn homogeneous_part(&self, d: u64) -> Self {
        let mut out = Self::zero_like(&self.vars, self.modulus);
        for (k, c) in &self.terms {
            if total(&k.exps) == d {
                out.add_term(k.exps.clone(), k.root, c.clone());
            }
        }
        out
    }

    /// Composite `f(φ₁,…,φₙ)`, expanded.
    pub fn substitute(&self, map: &PolyMap) -> Result<Self, PolyError> {
        if map.images.len() != self.nvars() {
            return Err(PolyError::Arity {
                expected: self.nvars(),
                got: map.images.len(),
            });
        }
        let Some(first) = map.images.first() else {
            return Ok(self.clone());
        };
        let n = map
            .images
            .iter()
            .fold(self.modulus, |n, g| num_integer::lcm(n, g.modulus));
        let images: Vec<SparsePolynomial> = map.images.iter().map(|g| g.with_modulus(n)).collect();
        let mut out = Self::zero_like(&first.vars, n);
        // cache of powers per variable
        let mut powers: Vec<Vec<SparsePolynomial>> =
            images.iter().map(|g| vec![g.one_like()]).collect();
        for (k, c) in &self.terms {
            let mut t = out.one_like().scale(c, k.root * (n / self.modulus));
            for (i, &e) in k.exps.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Exact value at a rational point; `None` if a root of unity occurs.
    pub fn evaluate(&self, point: &[BigRational]) -> Option<BigRational> {
        assert_eq!(point.len(), self.nvars(), "point has wrong arity");
        let mut acc = BigRational::zero();
        for (k, c) in &self.terms {
            if k.root != 0 {
                return None;
            }
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&k.exps) {
                t *= num_traits::pow(x.clone(), e as usize);
            }
            acc += t;
        }
        Some(acc)
    }

    fn leading(&self) -> Option<(&Key, &BigRational)> {
        self.terms
            .iter()
            .max_by(|a, b| grlex(&a.0.exps, &b.0.exps).then(b.0.root.cmp(&a.0.root)))
    }

    /// `h` with `self = g·h`, by grlex division; `None` if `g` does not
    /// divide. Both polynomials must be rational.
    pub fn divide_exact(&self, g: &Self) -> Option<Self> {
        assert!(!g.is_zero(), "division by zero polynomial");
        if !self.is_rational() || !g.is_rational() {
            return None;
        }
        let (mut r, g) = self.common(g);
        let (gk, gc) = g.leading().map(|(k, c)| (k.clone(), c.clone()))?;
        let mut q = Self::zero_like(&r.vars, r.modulus);
        while let Some((rk, rc)) = r.leading().map(|(k, c)| (k.clone(), c.clone())) {
            if rk.exps.iter().zip(&gk.exps).any(|(a, b)| a < b) {
                return None;
            }
            let e: Vec<u32> = rk.exps.iter().zip(&gk.exps).map(|(a, b)| a - b).collect();
            let c = rc / &gc;
            let mut t = Self::zero_like(&r.vars, r.modulus);
            t.add_term(e, 0, c);
            r = r.sub(&t.mul(&g));
            q = q.add(&t);
        }
        Some(q)
    }

    /// If `self = c·ω^k·other`, returns `(c, k)`.
    pub fn is_scalar_multiple(&self, other: &Self) -> Option<(BigRational, u32)> {
        let (a, b) = self.common(other);
        if a.terms.len() != b.terms.len() || a.is_zero() {
            return None;
        }
        let (kb, cb) = b.leading()?;
        // candidate from any term of `a` with the same monomial as b's leading term
        for (ka, ca) in a.terms.iter().filter(|(k, _)| k.exps == kb.exps) {
            let c = ca / cb;
            let root = (ka.root + a.modulus - kb.root) % a.modulus;
            if b.scale(&c, root) == a {
                return Some((c, root));
            }
        }
        None
    }

    /// Lowest-degree homogeneous part after substituting `chart`.
    pub fn tangent_cone(&self, chart: &PolyMap) -> Result<Self, PolyError> {
        let local = self.substitute(chart)?;
        let d = local.min_degree().ok_or(PolyError::ZeroPolynomial)?;
        Ok(local.homogeneous_part(d))
    }
}

fn wdeg(e: &[u32], w: &[u64]) -> u64 {
    e.iter().zip(w).map(|(&x, &w)| x as u64 * w).sum()
}

/// `x ↦ tangent_cone(f, chart)` with the point at `chart` mapped to 0.
pub fn tangent_cone(f: &SparsePolynomial, chart: &PolyMap) -> Result<SparsePolynomial, PolyError> {
    f.tangent_cone(chart)
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exps, root, c)) in self.terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !a.is_one() {
                parts.push(a.to_string());
            }
            if root != 0 {
                parts.push(if root == 1 {
                    "ω".into()
                } else {
                    format!("ω^{root}")
                });
            }
            for (v, &e) in self.vars.iter().zip(&exps) {
                match e {
                    0 => {}
                    1 => parts.push(v.clone()),
                    _ => parts.push(format!("{v}^{e}")),
                }
            }
            if parts.is_empty() {
                parts.push("1".into());
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePolynomial({self})")
    }
}
