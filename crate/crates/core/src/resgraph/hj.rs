use super::ResError;
use num_integer::Integer;
use serde::Serialize;

/// `n/q = a₁ − 1/(a₂ − 1/(… − 1/a_s))`, every `aᵢ ≥ 2`.
pub fn hj_expand(n: u64, q: u64) -> Result<Vec<u64>, ResError> {
    if q == 0 || q >= n || n.gcd(&q) != 1 {
        return Err(ResError::BadInput(format!(
            "need 0 < q < n coprime, got n={n}, q={q}"
        )));
    }
    let (mut n, mut q) = (n, q);
    let mut out = Vec::new();
    while q > 0 {
        let a = n.div_ceil(q);
        out.push(a);
        (n, q) = (q, a * q - n);
    }
    Ok(out)
}

/// Inverse of [`hj_expand`].
pub fn hj_value(seq: &[u64]) -> Result<(u64, u64), ResError> {
    if seq.is_empty() || seq.iter().any(|&a| a < 2) {
        return Err(ResError::BadInput(format!(
            "continued fraction {seq:?} needs entries ≥ 2"
        )));
    }
    let overflow = || ResError::BadInput(format!("continued fraction {seq:?} overflows"));
    let (mut n, mut q) = (seq[seq.len() - 1], 1u64);
    for &a in seq[..seq.len() - 1].iter().rev() {
        let next = a
            .checked_mul(n)
            .and_then(|x| x.checked_sub(q))
            .ok_or_else(overflow)?;
        (n, q) = (next, n);
    }
    Ok((n, q))
}

/// The quotient of `ℂ²` by `(x, y) ↦ (μx, μ^q y)`, `μ` a primitive `n`-th root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicType {
    pub n: u64,
    pub q: u64,
}

/// Rewrites the action `(μ^{w₁}x, μ^{w₂}y)` as `(μx, μ^q y)` by changing the root.
pub fn normalize_cyclic_type(n: u64, w: (i64, i64)) -> Result<CyclicType, ResError> {
    if n < 2 {
        return Err(ResError::BadInput(format!("order {n} < 2")));
    }
    let ni = n as i64;
    let (a, b) = (w.0.rem_euclid(ni), w.1.rem_euclid(ni));
    if a.gcd(&ni) != 1 || b.gcd(&ni) != 1 {
        return Err(ResError::NonFree { n, w });
    }
    let inv = a.extended_gcd(&ni).x.rem_euclid(ni);
    let q = ((b as i128 * inv as i128) % ni as i128) as u64;
    Ok(CyclicType { n, q })
}

impl CyclicType {
    pub fn resolution_chain(&self) -> Vec<u64> {
        hj_expand(self.n, self.q).expect("normalized type")
    }
}
