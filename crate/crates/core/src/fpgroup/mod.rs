//! Finitely presented groups: words, presentations, coset enumeration,
//! abelianization, Tietze eliminations and relator-derivation certificates.

mod certificate;
mod chain;
mod coset;
mod oracle;
mod presentation;
mod tietze;
mod word;

pub use certificate::{
    check_relator_certificate, CertFactor, CertificateDoc, FactorDoc, RelatorCertificate,
};
pub use chain::{
    apply_chain, apply_step, check_equivalence, ChainError, EquivalenceCertificate, TietzeStep,
};
pub use coset::{coset_enumerate, group_order, CosetTable, Order};
pub use oracle::{eval_word, verify_homomorphism, GroupOracle, PermRep};
pub use presentation::{parse_word, Presentation, PresentationDoc};
pub use tietze::{tietze_eliminate, tietze_eliminate_with_value};
pub use word::{format_word, free_reduce, gen_letter, letter_gen, product, Letter, Word};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FpError {
    #[error("parse error in {input:?} at byte {pos}: {msg}")]
    Parse {
        input: String,
        pos: usize,
        msg: String,
    },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator index {index} out of range for {ngens} generators")]
    LetterOutOfRange { index: usize, ngens: usize },
    #[error("relator {relator} does not define generator {gen} (needs exactly one occurrence with exponent ±1)")]
    NotEliminable { gen: usize, relator: usize },
    #[error("invalid JSON: {0}")]
    Json(String),
}

/// Abelian invariants `d1 | d2 | … ` of `p`, with `0` for each free factor.
pub fn abelian_invariants(p: &Presentation) -> Vec<i128> {
    crate::smith::cokernel_invariants(&p.relation_matrix(), p.ngens())
}

/// `p` with the words in `kill` adjoined as relators.
pub fn quotient_by_normal_closure(
    p: &Presentation,
    kill: &[Word],
) -> Result<Presentation, FpError> {
    p.with_relators(kill.iter().cloned())
}

/// `⟨a, ℓ | a^{2(q−1)q}, ℓ²a^{−3(q−1)}, ℓaℓ⁻¹a^{2q−1}⟩` with `q = p + 3`.
pub fn b23_presentation(p: u32) -> Presentation {
    let q = p as i64 + 3;
    let a = Word::gen(0);
    let l = Word::gen(1);
    let rels = vec![
        a.pow(2 * (q - 1) * q),
        l.pow(2).mul(&a.pow(-3 * (q - 1))),
        a.conj(&l).mul(&a.pow(2 * q - 1)),
    ];
    Presentation::new(vec!["a".into(), "l".into()], rels).expect("valid by construction")
}
