//! Sylow structure of `G`: with `N = 2m(m+1) = 2^{r+1}·p`, `p` odd,
//! `H = ⟨S^{2^{r+1}}⟩` is the odd part and `J` a Sylow 2-subgroup, cyclic
//! for odd `m` and generalized quaternion for even `m`.

use super::{
    closure, make_generators, modulus, subgroup, MatError, MonomialElement, Variant,
    DEFAULT_SIZE_BOUND,
};
use serde::Serialize;
use std::collections::HashSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SylowReport {
    pub r: u32,
    /// odd part of `N`
    pub p: u32,
    pub h_order: usize,
    pub h_normal: bool,
    /// `H` is exactly the set of odd-order elements
    pub h_is_odd_part: bool,
    pub j_order: usize,
    /// `"C16"` (cyclic) or `"Q3"` (generalized quaternion `Q_3`)
    #[serde(rename = "type")]
    pub kind: String,
    pub j_normal: bool,
    /// `"direct"` if both factors are normal, else `"semidirect"`
    pub split: String,
    /// `H ∩ J = 1` and `|H|·|J| = |G|`
    pub complement: bool,
}

fn is_normal(h: &HashSet<MonomialElement>, gens: &[MonomialElement]) -> bool {
    h.iter()
        .all(|x| gens.iter().all(|g| h.contains(&g.mul(x).mul(&g.inv()))))
}

/// Searches `j` (of order `2^k`) for `A, B` with `A^{2^{k-1}} = 1`,
/// `B² = A^{2^{k-2}}`, `BAB⁻¹ = A⁻¹`, `A` of order `2^{k-1}`, `B ∉ ⟨A⟩`.
pub fn find_quaternion_generators(
    j: &HashSet<MonomialElement>,
    k: u32,
) -> Option<(MonomialElement, MonomialElement)> {
    if k < 3 || j.len() != 1 << k {
        return None;
    }
    let half = 1u64 << (k - 1);
    let mut elems: Vec<_> = j.iter().copied().collect();
    elems.sort();
    for a in elems.iter().filter(|a| a.order() == half) {
        let cyc = subgroup(&[*a]);
        let a_quarter = a.pow(1 << (k - 2));
        for b in elems.iter().filter(|b| !cyc.contains(b)) {
            if b.mul(b) == a_quarter && b.mul(a).mul(&b.inv()) == a.inv() {
                return Some((*a, *b));
            }
        }
    }
    None
}

pub fn sylow_structure(m: u32) -> Result<SylowReport, MatError> {
    let (s, t) = make_generators(m, Variant::G)?;
    let g = closure(&[s, t], DEFAULT_SIZE_BOUND)?;
    let n = modulus(m);
    let r = n.trailing_zeros() - 1;
    let p = n >> (r + 1);
    let gens = [s, t];

    let h = subgroup(&[s.pow(1i64 << (r + 1))]);
    let odd: HashSet<_> = g
        .elements
        .iter()
        .filter(|x| x.order() % 2 == 1)
        .copied()
        .collect();

    let (j, kind) = if m % 2 == 1 {
        // m + 1 = 2^r (2u − 1)
        let u = ((m + 1) >> r).div_ceil(2);
        let j = subgroup(&[s.pow(u as i64).mul(&t)]);
        let cyclic = j.iter().any(|x| x.order() as usize == j.len());
        (
            j.clone(),
            if cyclic {
                format!("C{}", j.len())
            } else {
                "noncyclic".into()
            },
        )
    } else {
        // m = 2^r q
        let q = m >> m.trailing_zeros();
        let j = subgroup(&[
            s.pow((q * (m + 1)) as i64),
            s.pow(((m + 2) / 2) as i64).mul(&t),
        ]);
        let k = j.len().trailing_zeros();
        let kind = match find_quaternion_generators(&j, k) {
            Some(_) => format!("Q{k}"),
            None => "unrecognized".into(),
        };
        (j, kind)
    };
    let j_normal = is_normal(&j, &gens);
    let h_normal = is_normal(&h, &gens);
    let complement = h.intersection(&j).count() == 1 && h.len() * j.len() == g.order();
    let split = if complement && h_normal && j_normal {
        "direct"
    } else {
        "semidirect"
    };
    Ok(SylowReport {
        r,
        p,
        h_order: h.len(),
        h_normal,
        h_is_odd_part: h == odd,
        j_order: j.len(),
        kind,
        j_normal,
        split: split.into(),
        complement,
    })
}
