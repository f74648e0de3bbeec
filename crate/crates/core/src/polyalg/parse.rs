//! Polynomial literals: `y^2*z - x^2*(x+z)`, `3/2*x`, `zeta*y^4`.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := ['-'] base ['^' uint]
//! base   := number ['/' number] | ident | '(' expr ')'
//! ```

use super::{PolyError, SparsePolynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Variables, plus optional named roots of unity (`name ↦ ω^k`, `ω^N = 1`).
#[derive(Clone, Debug)]
pub struct ParseOptions {
    vars: Vec<String>,
    modulus: u32,
    roots: Vec<(String, u32)>,
}

impl ParseOptions {
    pub fn new(vars: &[&str]) -> Self {
        ParseOptions {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            modulus: 1,
            roots: Vec::new(),
        }
    }

    /// Declares `ω` of order `n` and constants such as `("zeta", m)` for `ω^m`.
    pub fn with_root(mut self, n: u32, names: &[(&str, u32)]) -> Self {
        self.modulus = n;
        self.roots = names.iter().map(|(s, k)| (s.to_string(), k % n)).collect();
        self
    }
}

pub fn parse_polynomial(s: &str, opts: &ParseOptions) -> Result<SparsePolynomial, PolyError> {
    let mut p = Parser {
        src: s,
        s: s.as_bytes(),
        pos: 0,
        opts,
    };
    let f = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(f)
}

struct Parser<'a> {
    src: &'a str,
    s: &'a [u8],
    pos: usize,
    opts: &'a ParseOptions,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse {
            input: self.src.to_string(),
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .s
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn zero(&self) -> SparsePolynomial {
        SparsePolynomial::zero_like(&self.opts.vars, self.opts.modulus)
    }

    fn constant(&self, c: BigRational, root: u32) -> SparsePolynomial {
        let mut f = self.zero();
        f.add_term(vec![0; self.opts.vars.len()], root, c);
        f
    }

    fn expr(&mut self) -> Result<SparsePolynomial, PolyError> {
        let mut acc = self.zero();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<SparsePolynomial, PolyError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SparsePolynomial, PolyError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        let b = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.uint()?;
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            return Ok(b.pow(e));
        }
        Ok(b)
    }

    fn uint(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.err("expected unsigned integer"))
    }

    fn base(&mut self) -> Result<SparsePolynomial, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let f = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(f)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                let d = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.uint()?;
                    if d == BigInt::from(0) {
                        return Err(self.err("zero denominator"));
                    }
                    d
                } else {
                    BigInt::one()
                };
                Ok(self.constant(BigRational::new(n, d), 0))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self
                    .s
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
                {
                    self.pos += 1;
                }
                let name = &self.src[start..self.pos];
                if let Some(i) = self.opts.vars.iter().position(|v| v == name) {
                    let mut e = vec![0; self.opts.vars.len()];
                    e[i] = 1;
                    let mut f = self.zero();
                    f.add_term(e, 0, BigRational::one());
                    return Ok(f);
                }
                match self.opts.roots.iter().find(|(n, _)| n == name) {
                    Some((_, k)) => Ok(self.constant(BigRational::one(), *k)),
                    None => Err(PolyError::UnknownVariable(name.to_string())),
                }
            }
            _ => Err(self.err("expected number, variable or '('")),
        }
    }
}
