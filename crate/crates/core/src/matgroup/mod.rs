//! The monomial groups `G = ⟨S, T⟩ ⊂ SL(4, ℂ)` (and the variant `G′`),
//! enumerated exactly as permutations with root-of-unity exponents.

mod element;
mod sylow;

pub use element::MonomialElement;
pub use sylow::{sylow_structure, SylowReport};

use crate::fpgroup::GroupOracle;
use crate::polyalg::{PolyMap, SparsePolynomial};
use crate::smith::cokernel_invariants;
use num_traits::One;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use thiserror::Error;

pub const DEFAULT_SIZE_BOUND: usize = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatError {
    #[error("group has more than {0} elements")]
    SizeBound(usize),
    #[error("m must be at least 2 (got {0})")]
    BadM(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Variant {
    /// `T(a,b,c,d) = (ζb, a, d, ζ⁻¹c)`
    G,
    /// `T′(a,b,c,d) = (b, −a, d, −c)`
    GPrime,
}

/// `N = 2m(m+1)`.
pub fn modulus(m: u32) -> u32 {
    2 * m * (m + 1)
}

/// `(S, T)` for the given `m ≥ 2`.
pub fn make_generators(
    m: u32,
    variant: Variant,
) -> Result<(MonomialElement, MonomialElement), MatError> {
    if m < 2 {
        return Err(MatError::BadM(m));
    }
    let n = modulus(m);
    let (mi, k) = (m as i64, 2 * m as i64 + 1);
    let s = MonomialElement::diagonal([1, -k, k, -1], n);
    let t = match variant {
        Variant::G => MonomialElement::new([1, 0, 3, 2], [mi, 0, 0, -mi], n),
        Variant::GPrime => {
            MonomialElement::new([1, 0, 3, 2], [0, n as i64 / 2, 0, n as i64 / 2], n)
        }
    };
    Ok((s, t))
}

/// All elements reachable from the generators, with a shortest word for
/// each and the right Cayley graph.
#[derive(Clone, Debug)]
pub struct EnumeratedGroup {
    pub generators: Vec<MonomialElement>,
    pub elements: Vec<MonomialElement>,
    /// `words[i]` lists generator indices whose product is `elements[i]`.
    pub words: Vec<Vec<usize>>,
    /// `edges[i][j]` = index of `elements[i] · generators[j]`.
    pub edges: Vec<Vec<usize>>,
    index: HashMap<MonomialElement, usize>,
}

impl EnumeratedGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn position(&self, g: &MonomialElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &MonomialElement) -> bool {
        self.index.contains_key(g)
    }

    /// Shortest word of element `i`, e.g. `S^2*T`.
    pub fn word_string(&self, i: usize, names: &[&str]) -> String {
        let w = &self.words[i];
        if w.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut j = 0;
        while j < w.len() {
            let mut k = j;
            while k < w.len() && w[k] == w[j] {
                k += 1;
            }
            let name = names.get(w[j]).copied().unwrap_or("?");
            parts.push(if k - j == 1 {
                name.to_string()
            } else {
                format!("{name}^{}", k - j)
            });
            j = k;
        }
        parts.join("*")
    }
}

/// Breadth-first closure under right multiplication by the generators.
pub fn closure(gens: &[MonomialElement], bound: usize) -> Result<EnumeratedGroup, MatError> {
    let n = gens.first().map_or(1, |g| g.n);
    assert!(
        gens.iter().all(|g| g.n == n),
        "generators must share the modulus"
    );
    let id = MonomialElement::identity(n);
    let mut elements = vec![id];
    let mut words = vec![Vec::new()];
    let mut index = HashMap::from([(id, 0)]);
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let mut row = Vec::with_capacity(gens.len());
        for (j, g) in gens.iter().enumerate() {
            let h = elements[i].mul(g);
            let k = match index.get(&h) {
                Some(&k) => k,
                None => {
                    if elements.len() >= bound {
                        return Err(MatError::SizeBound(bound));
                    }
                    let k = elements.len();
                    elements.push(h);
                    let mut w = words[i].clone();
                    w.push(j);
                    words.push(w);
                    index.insert(h, k);
                    queue.push_back(k);
                    k
                }
            };
            row.push(k);
        }
        if edges.len() <= i {
            edges.resize(i + 1, Vec::new());
        }
        edges[i] = row;
    }
    Ok(EnumeratedGroup {
        generators: gens.to_vec(),
        elements,
        words,
        edges,
        index,
    })
}

/// Subgroup generated by `gens` as a set.
pub fn subgroup(gens: &[MonomialElement]) -> HashSet<MonomialElement> {
    closure(gens, DEFAULT_SIZE_BOUND)
        .map(|g| g.elements.into_iter().collect())
        .unwrap_or_default()
}

/// Smallest normal subgroup of `g` containing `seeds`.
pub fn normal_closure(g: &EnumeratedGroup, seeds: &[MonomialElement]) -> HashSet<MonomialElement> {
    let mut gens: Vec<MonomialElement> = seeds.to_vec();
    loop {
        let h = subgroup(&gens);
        let mut grew = false;
        for x in &h.clone() {
            for s in &g.generators {
                let c = s.mul(x).mul(&s.inv());
                if !h.contains(&c) {
                    gens.push(c);
                    grew = true;
                }
            }
        }
        if !grew {
            return h;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupInvariants {
    pub order: usize,
    pub center_order: usize,
    /// Some element generating the center, if it is cyclic.
    pub center_generator: Option<MonomialElement>,
    pub abelian_invariants: Vec<i128>,
    /// element order → count
    pub order_histogram: BTreeMap<u64, usize>,
}

pub fn center(g: &EnumeratedGroup) -> Vec<MonomialElement> {
    g.elements
        .iter()
        .filter(|x| g.generators.iter().all(|s| x.mul(s) == s.mul(x)))
        .copied()
        .collect()
}

/// Invariant factors of `G/[G,G]`, from the commutator subgroup: the
/// exponent vectors `e` with `∏ gᵢ^{eᵢ} ∈ [G,G]` form the relation lattice.
pub fn abelianization(g: &EnumeratedGroup) -> Vec<i128> {
    let gens = &g.generators;
    let mut comms = Vec::new();
    for a in gens {
        for b in gens {
            comms.push(a.mul(b).mul(&a.inv()).mul(&b.inv()));
        }
    }
    let d = normal_closure(g, &comms);
    let k = gens.len();
    // order of each generator modulo D
    let ords: Vec<u64> = gens
        .iter()
        .map(|x| {
            let mut y = *x;
            let mut o = 1;
            while !d.contains(&y) {
                y = y.mul(x);
                o += 1;
            }
            o
        })
        .collect();
    let mut rows: Vec<Vec<i128>> = Vec::new();
    for (i, &o) in ords.iter().enumerate() {
        let mut r = vec![0; k];
        r[i] = o as i128;
        rows.push(r);
    }
    // mixed relations: every exponent vector in the box
    let mut e = vec![0u64; k];
    'outer: loop {
        let mut i = 0;
        loop {
            if i == k {
                break 'outer;
            }
            e[i] += 1;
            if e[i] < ords[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
        let x = e
            .iter()
            .zip(gens)
            .fold(MonomialElement::identity(gens[0].n), |acc, (&p, s)| {
                acc.mul(&s.pow(p as i64))
            });
        if d.contains(&x) {
            rows.push(e.iter().map(|&p| p as i128).collect());
        }
    }
    cokernel_invariants(&rows, k)
}

pub fn group_invariants(g: &EnumeratedGroup) -> GroupInvariants {
    let z = center(g);
    let zset: HashSet<_> = z.iter().copied().collect();
    let center_generator = z.iter().find(|x| x.order() as usize == z.len()).copied();
    debug_assert!(center_generator.is_none_or(|c| subgroup(&[c]) == zset));
    let mut order_histogram = BTreeMap::new();
    for x in &g.elements {
        *order_histogram.entry(x.order()).or_insert(0) += 1;
    }
    GroupInvariants {
        order: g.order(),
        center_order: z.len(),
        center_generator,
        abelian_invariants: abelianization(g),
        order_histogram,
    }
}

/// Outcome of the fixed-point test; the witness is a non-identity element
/// with eigenvalue 1 of smallest order (first found among equals).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Freeness {
    pub free: bool,
    pub witness: Option<MonomialElement>,
    pub witness_index: Option<usize>,
}

pub fn fixed_point_free(g: &EnumeratedGroup) -> Freeness {
    let witness_index = g
        .elements
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_identity() && x.has_fixed_vector())
        .min_by_key(|(i, x)| (x.order(), *i))
        .map(|(i, _)| i);
    Freeness {
        free: witness_index.is_none(),
        witness: witness_index.map(|i| g.elements[i]),
        witness_index,
    }
}

/// Contragredient action on coordinate functions: `xᵢ ↦ ω^{−eᵢ} x_{perm(i)}`.
/// `f` must be in four variables; its root modulus must divide `N`.
pub fn polynomial_action(e: &MonomialElement, f: &SparsePolynomial) -> SparsePolynomial {
    assert_eq!(f.nvars(), 4, "expected a polynomial in x, y, z, w");
    let n = e.n;
    let vars: Vec<&str> = f.vars().iter().map(String::as_str).collect();
    let images = (0..4)
        .map(|i| {
            SparsePolynomial::var(&vars, e.perm[i] as usize)
                .with_modulus(n)
                .scale(&num_rational::BigRational::one(), (n - e.exps[i]) % n)
        })
        .collect();
    f.with_modulus(n)
        .substitute(&PolyMap { images })
        .expect("arity checked")
}

/// Group arithmetic for [`crate::fpgroup::verify_homomorphism`].
#[derive(Clone, Copy, Debug)]
pub struct MonomialOracle {
    pub n: u32,
}

impl GroupOracle for MonomialOracle {
    type Elem = MonomialElement;

    fn identity(&self) -> MonomialElement {
        MonomialElement::identity(self.n)
    }

    fn mul(&self, a: &MonomialElement, b: &MonomialElement) -> MonomialElement {
        a.mul(b)
    }

    fn inv(&self, a: &MonomialElement) -> MonomialElement {
        a.inv()
    }
}

/// Summary used by the CLI and the demo page.
#[derive(Clone, Debug, Serialize)]
pub struct MatgroupReport {
    pub m: u32,
    pub variant: Variant,
    pub order: usize,
    pub center: usize,
    pub ab: Vec<i128>,
    pub fpf: bool,
    pub witness: Option<String>,
    pub witness_order: Option<u64>,
    pub sylow: Option<SylowReport>,
}

pub fn report(m: u32, variant: Variant) -> Result<MatgroupReport, MatError> {
    let (s, t) = make_generators(m, variant)?;
    let g = closure(&[s, t], DEFAULT_SIZE_BOUND)?;
    let inv = group_invariants(&g);
    let fr = fixed_point_free(&g);
    let tname = if variant == Variant::G { "T" } else { "T'" };
    Ok(MatgroupReport {
        m,
        variant,
        order: inv.order,
        center: inv.center_order,
        ab: inv.abelian_invariants,
        fpf: fr.free,
        witness: fr.witness_index.map(|i| g.word_string(i, &["S", tname])),
        witness_order: fr.witness.map(|w| w.order()),
        sylow: (variant == Variant::G)
            .then(|| sylow_structure(m))
            .transpose()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_shapes() {
        let (s, t) = make_generators(2, Variant::G).unwrap();
        assert_eq!(s.exps, [1, 7, 5, 11]);
        assert_eq!(t.exps, [2, 0, 0, 10]);
        assert_eq!(s.det_exponent(), 0);
        assert_eq!(t.det_exponent(), 0);
        assert!(make_generators(1, Variant::G).is_err());
    }

    #[test]
    fn small_closure() {
        let (s, _) = make_generators(2, Variant::G).unwrap();
        let g = closure(&[s], 100).unwrap();
        assert_eq!(g.order(), 12);
        assert!(matches!(closure(&[s], 5), Err(MatError::SizeBound(5))));
    }

    #[test]
    fn inverse_and_power() {
        let (s, t) = make_generators(3, Variant::G).unwrap();
        let x = s.mul(&t).mul(&s);
        assert!(x.mul(&x.inv()).is_identity());
        assert_eq!(x.pow(-2), x.inv().mul(&x.inv()));
        assert_eq!(s.order(), 24);
    }
}
