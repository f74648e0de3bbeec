//! End-to-end constructions over the bundled fixtures: the 7-line
//! arrangement quotient, and the conic + cubic braid-monodromy group.
//!
//! Fixture strings may contain integer templates such as `a1^{p+1}` or
//! `a^{1-2q}`; [`expand_template`] substitutes the named parameters.

use crate::fpgroup::{
    b23_presentation, check_equivalence, check_relator_certificate, quotient_by_normal_closure,
    CertificateDoc, ChainError, EquivalenceCertificate, FpError, Presentation, PresentationDoc,
    RelatorCertificate, Word,
};
use crate::zvk::{
    braid_monodromy_presentation, derived_meridians, eval_formula, wiring_presentation,
    BraidMonodromyData, LineArrangement, MeridianMap, ZvkError,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

pub use crate::template::{expand_template, TemplateError};

pub const SEVEN_LINES: &str = include_str!("../data/seven_lines.json");
pub const B23_PIPELINE: &str = include_str!("../data/b23_pipeline.json");
pub const C23_MONODROMY: &str = include_str!("../data/c23_monodromy.json");
pub const C23_TIETZE: &str = include_str!("../data/c23_tietze.json");

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Zvk(#[from] ZvkError),
    #[error(transparent)]
    Fp(#[from] FpError),
    #[error("fixture: {0}")]
    Fixture(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Template(#[from] TemplateError),
}

#[derive(Deserialize)]
struct Tower {
    prefix: String,
    formula: String,
}

#[derive(Deserialize)]
struct B23Doc {
    derived: Vec<(String, String)>,
    tower: Tower,
    kill: Vec<String>,
    to_b23: BTreeMap<String, String>,
    from_b23: BTreeMap<String, String>,
}

/// Everything produced by the 7-line computation for one value of `p`.
#[derive(Clone, Debug)]
pub struct B23Pipeline {
    pub p: u32,
    /// `π₁(ℙ² ∖ L)` from the wiring diagram.
    pub arrangement_group: Presentation,
    pub meridians: MeridianMap,
    /// The words whose normal closure is killed, by label.
    pub killed: Vec<(String, Word)>,
    /// The quotient `G1`.
    pub g1: Presentation,
    /// Images of the `G1` generators in `b23_presentation(p)`.
    pub to_b23: Vec<Word>,
    /// Images of `a, ℓ` in `G1`.
    pub from_b23: Vec<Word>,
}

pub fn seven_lines() -> LineArrangement {
    LineArrangement::from_json(SEVEN_LINES).expect("bundled arrangement parses")
}

pub fn b23_pipeline(p: u32) -> Result<B23Pipeline, PipelineError> {
    b23_pipeline_from(&seven_lines(), B23_PIPELINE, p)
}

pub fn b23_pipeline_from(
    arr: &LineArrangement,
    doc: &str,
    p: u32,
) -> Result<B23Pipeline, PipelineError> {
    let doc: B23Doc =
        serde_json::from_str(doc).map_err(|e| PipelineError::Fixture(e.to_string()))?;
    let (g, mm) = wiring_presentation(arr)?;
    let pi = p as i64;
    let vars = [("p", pi), ("q", pi + 3)];
    let mut defs = doc.derived.clone();
    for j in 0..=pi + 1 {
        let f = expand_template(&doc.tower.formula, &[("j", j)])?;
        defs.push((format!("{}{}", doc.tower.prefix, j), f));
    }
    let mm = derived_meridians(&g, &mm, &defs)?;
    let mut killed = Vec::new();
    for k in &doc.kill {
        let label = expand_template(k, &vars)?;
        let w = eval_formula(&g, &mm, &label)?;
        killed.push((label, w));
    }
    let kill_words: Vec<Word> = killed.iter().map(|(_, w)| w.clone()).collect();
    let g1 = quotient_by_normal_closure(&g, &kill_words)?;

    let b = b23_presentation(p);
    let to_b23 = g1
        .names()
        .iter()
        .map(|n| {
            let f = doc
                .to_b23
                .get(n)
                .ok_or_else(|| PipelineError::Fixture(format!("no image for {n}")))?;
            Ok(b.word(&expand_template(f, &vars)?)?)
        })
        .collect::<Result<Vec<_>, PipelineError>>()?;
    let from_b23 = b
        .names()
        .iter()
        .map(|n| {
            let f = doc
                .from_b23
                .get(n)
                .ok_or_else(|| PipelineError::Fixture(format!("no image for {n}")))?;
            Ok(g1.word(&expand_template(f, &vars)?)?)
        })
        .collect::<Result<Vec<_>, PipelineError>>()?;
    Ok(B23Pipeline {
        p,
        arrangement_group: g,
        meridians: mm,
        killed,
        g1,
        to_b23,
        from_b23,
    })
}

#[derive(Deserialize)]
struct C23Doc {
    kill: Vec<String>,
    target: crate::fpgroup::PresentationDoc,
}

/// The conic + cubic computation.
#[derive(Clone, Debug)]
pub struct C23Pipeline {
    /// Complement of `C₂ ∪ C₃ ∪ F₀` (four generators).
    pub monodromy_group: Presentation,
    /// After killing the meridian of `T₀`.
    pub group: Presentation,
    /// The expected three-generator presentation.
    pub target: Presentation,
}

pub fn c23_pipeline() -> Result<C23Pipeline, PipelineError> {
    c23_pipeline_from(C23_MONODROMY)
}

pub fn c23_pipeline_from(doc: &str) -> Result<C23Pipeline, PipelineError> {
    let data = BraidMonodromyData::from_json(doc)?;
    let extra: C23Doc =
        serde_json::from_str(doc).map_err(|e| PipelineError::Fixture(e.to_string()))?;
    let (g, _) = braid_monodromy_presentation(&data)?;
    let kill = extra
        .kill
        .iter()
        .map(|k| g.word(k))
        .collect::<Result<Vec<_>, _>>()?;
    let group = quotient_by_normal_closure(&g, &kill)?;
    let target = Presentation::from_doc(&extra.target)?;
    Ok(C23Pipeline {
        monodromy_group: g,
        group,
        target,
    })
}

/// Relators derived one after another: each certificate is checked against
/// `base` plus the previously derived targets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaChain {
    pub base: PresentationDoc,
    pub derivations: Vec<CertificateDoc>,
}

impl LemmaChain {
    /// Returns the derived words on success.
    pub fn check(&self) -> Result<Vec<Word>, PipelineError> {
        let mut p = Presentation::from_doc(&self.base)?;
        let mut out = Vec::new();
        for (i, d) in self.derivations.iter().enumerate() {
            let (w, c) = RelatorCertificate::from_doc(&p, d)?;
            if !check_relator_certificate(&p, &w, &c) {
                return Err(PipelineError::Fixture(format!(
                    "derivation {i} ({}) fails",
                    d.target
                )));
            }
            p = p.with_relators([w.clone()])?;
            out.push(w);
        }
        Ok(out)
    }
}

/// Certificates shipped with the conic + cubic computation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct C23Certificates {
    /// Tietze chains from the killed monodromy group and from the target.
    pub equivalence: EquivalenceCertificate,
    /// `[q, c*q*c] = 1` and `[q, c] = 1` in the target.
    pub lemmas: LemmaChain,
}

pub fn c23_certificates() -> Result<C23Certificates, PipelineError> {
    c23_certificates_from(C23_TIETZE)
}

pub fn c23_certificates_from(doc: &str) -> Result<C23Certificates, PipelineError> {
    serde_json::from_str(doc).map_err(|e| PipelineError::Fixture(e.to_string()))
}

impl C23Pipeline {
    /// Checks the equivalence chain; returns the common end presentation.
    pub fn verify(&self, certs: &C23Certificates) -> Result<Presentation, PipelineError> {
        Ok(check_equivalence(
            &self.group,
            &self.target,
            &certs.equivalence,
        )?)
    }
}
