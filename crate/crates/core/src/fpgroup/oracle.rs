use super::coset::CosetTable;
use super::presentation::Presentation;
use super::word::{letter_gen, Word};

/// Black-box group arithmetic with decidable equality.
pub trait GroupOracle {
    type Elem: Clone + PartialEq;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

/// Evaluates `w` with generator `i` sent to `images[i]`.
pub fn eval_word<O: GroupOracle>(oracle: &O, images: &[O::Elem], w: &Word) -> O::Elem {
    w.letters().iter().fold(oracle.identity(), |acc, &x| {
        let g = &images[letter_gen(x)];
        if x > 0 {
            oracle.mul(&acc, g)
        } else {
            oracle.mul(&acc, &oracle.inv(g))
        }
    })
}

/// True iff `gen_i ↦ images[i]` sends every relator of `src` to the identity.
pub fn verify_homomorphism<O: GroupOracle>(
    src: &Presentation,
    images: &[O::Elem],
    oracle: &O,
) -> bool {
    assert_eq!(images.len(), src.ngens(), "one image per generator");
    let e = oracle.identity();
    src.relators()
        .iter()
        .all(|r| eval_word(oracle, images, r) == e)
}

/// Permutation representation on the cosets of a complete table.
///
/// Over the trivial subgroup this is the regular representation, hence
/// faithful: equal permutations are equal group elements.
#[derive(Clone, Debug)]
pub struct PermRep {
    gens: Vec<Vec<u32>>,
    degree: usize,
}

impl PermRep {
    /// `None` if the table is incomplete.
    pub fn from_table(t: &CosetTable) -> Option<Self> {
        if !t.complete {
            return None;
        }
        let ngens = t.rows.first().map_or(0, |r| r.len() / 2);
        let gens = (0..ngens)
            .map(|g| t.rows.iter().map(|row| row[2 * g] as u32).collect())
            .collect();
        Some(PermRep {
            gens,
            degree: t.rows.len(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generator(&self, i: usize) -> Vec<u32> {
        self.gens[i].clone()
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.gens
    }

    /// Element represented by a word in the table's generators.
    pub fn eval(&self, w: &Word) -> Vec<u32> {
        eval_word(self, &self.gens, w)
    }
}

impl GroupOracle for PermRep {
    type Elem = Vec<u32>;

    fn identity(&self) -> Vec<u32> {
        (0..self.degree as u32).collect()
    }

    // right action: first `a`, then `b`
    fn mul(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        a.iter().map(|&i| b[i as usize]).collect()
    }

    fn inv(&self, a: &Vec<u32>) -> Vec<u32> {
        let mut r = vec![0; a.len()];
        for (i, &j) in a.iter().enumerate() {
            r[j as usize] = i as u32;
        }
        r
    }
}
