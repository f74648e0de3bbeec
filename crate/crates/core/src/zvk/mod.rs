//! Zariski–van Kampen presentations: the Artin action, real line
//! arrangements (wiring diagrams) and explicit braid-monodromy data.

mod braid;
mod monodromy;
mod wiring;

pub use braid::{artin_act, BraidWord};
pub use monodromy::{braid_monodromy_presentation, BraidMonodromyData, MonodromyEvent};
pub use wiring::{wiring_presentation, LineArrangement};

use crate::fpgroup::{parse_word, Presentation, Word};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZvkError {
    #[error("braid letter {letter} invalid on {strands} strands")]
    BadBraidLetter { letter: i32, strands: usize },
    #[error("degenerate arrangement: {0}")]
    DegenerateArrangement(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Label → meridian word in the generators of some presentation.
pub type MeridianMap = BTreeMap<String, Word>;

/// Relators expressing `[w_0, w_1, …, w_{k-1}] = 1`, i.e. the product
/// `w_0 w_1 ⋯ w_{k-1}` equals each of its cyclic (block) rotations.
/// For `k = 2` this is the commutator.
pub fn cyclic_relators(words: &[Word]) -> Vec<Word> {
    let k = words.len();
    let prod = crate::fpgroup::product(words);
    (1..k)
        .map(|j| {
            let rot = crate::fpgroup::product(words[j..].iter().chain(&words[..j]));
            prod.mul(&rot.inv())
        })
        .filter(|r| !r.is_empty())
        .collect()
}

/// Extends `mm` with new meridians given as formulas over the generator
/// names of `p` and the labels already present (earlier definitions may be
/// used by later ones).
pub fn derived_meridians(
    p: &Presentation,
    mm: &MeridianMap,
    defs: &[(String, String)],
) -> Result<MeridianMap, ZvkError> {
    let mut out = mm.clone();
    for (label, formula) in defs {
        let w = eval_formula(p, &out, formula)?;
        out.insert(label.clone(), w);
    }
    Ok(out)
}

/// Evaluates a word formula whose atoms are generator names or meridian labels.
pub fn eval_formula(p: &Presentation, mm: &MeridianMap, formula: &str) -> Result<Word, ZvkError> {
    let mut names: Vec<String> = p.names().to_vec();
    let labels: Vec<&String> = mm.keys().filter(|l| p.gen_index(l).is_none()).collect();
    names.extend(labels.iter().map(|l| l.to_string()));
    let raw = parse_word(formula, &names).map_err(|e| match e {
        crate::fpgroup::FpError::UnknownGenerator(s) => ZvkError::UnknownLabel(s),
        e => ZvkError::Parse(e.to_string()),
    })?;
    let mut images: Vec<Word> = (0..p.ngens()).map(Word::gen).collect();
    images.extend(labels.iter().map(|l| mm[*l].clone()));
    Ok(raw.substitute(&images))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_case() {
        let r = cyclic_relators(&[Word::gen(1), Word::gen(0)]);
        assert_eq!(r, vec![Word::new([2, 1, -2, -1])]);
    }

    #[test]
    fn triple_relation_has_two_relators() {
        let r = cyclic_relators(&[Word::gen(2), Word::gen(1), Word::gen(0)]);
        assert_eq!(r.len(), 2);
        // cba = bac and cba = acb
        assert_eq!(r[0], Word::new([3, 2, 1, -3, -1, -2]));
    }

    #[test]
    fn derived_formulas() {
        let p = Presentation::parse(&["a1", "a2", "l2", "l3", "a3"], &[]).unwrap();
        let mut mm = MeridianMap::new();
        mm.insert("e23".into(), p.word("l3*a3*l2").unwrap());
        let defs = vec![
            ("q1".to_string(), "e23*a3".to_string()),
            ("e3_0".to_string(), "a1^0*a2".to_string()),
            ("e3_1".to_string(), "a1*a2".to_string()),
        ];
        let out = derived_meridians(&p, &mm, &defs).unwrap();
        assert_eq!(p.format(&out["q1"]), "l3*a3*l2*a3");
        assert_eq!(p.format(&out["e3_0"]), "a2");
        assert_eq!(p.format(&out["e3_1"]), "a1*a2");
        let bad = vec![("x".to_string(), "nope*a1".to_string())];
        assert!(matches!(
            derived_meridians(&p, &mm, &bad),
            Err(ZvkError::UnknownLabel(_))
        ));
    }
}
