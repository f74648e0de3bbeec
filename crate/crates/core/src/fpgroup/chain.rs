//! Tietze-equivalence certificates.
//!
//! A chain is a list of elementary moves applied to a presentation:
//! eliminating a generator through a defining relator (always valid), and
//! adding or removing a relator, each justified by a relator certificate
//! against the presentation it must follow from. Two presentations are
//! certified equivalent when their chains end at the same presentation
//! (same number of generators, same set of relator words).

use super::certificate::{CertificateDoc, FactorDoc, RelatorCertificate};
use super::presentation::Presentation;
use super::tietze::tietze_eliminate;
use super::word::Word;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum TietzeStep {
    /// Remove generator `gen` using relator number `relator`.
    Eliminate { gen: String, relator: usize },
    /// Append `relator`; `cert` derives it from the current relators.
    AddRelator {
        relator: String,
        cert: Vec<FactorDoc>,
    },
    /// Drop relator `index`; `cert` derives it from the remaining ones.
    RemoveRelator { index: usize, cert: Vec<FactorDoc> },
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct EquivalenceCertificate {
    pub source: Vec<TietzeStep>,
    pub target: Vec<TietzeStep>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("step {step}: {msg}")]
    Step { step: usize, msg: String },
    #[error("chains end at different presentations")]
    Mismatch,
}

fn step_err(step: usize, msg: impl Into<String>) -> ChainError {
    ChainError::Step {
        step,
        msg: msg.into(),
    }
}

fn cert_doc(target: String, cert: &[FactorDoc]) -> CertificateDoc {
    CertificateDoc {
        target,
        factors: cert.to_vec(),
    }
}

/// Applies one move, checking its justification.
pub fn apply_step(
    p: &Presentation,
    step: &TietzeStep,
    i: usize,
) -> Result<Presentation, ChainError> {
    match step {
        TietzeStep::Eliminate { gen, relator } => {
            let g = p
                .gen_index(gen)
                .ok_or_else(|| step_err(i, format!("unknown generator {gen}")))?;
            tietze_eliminate(p, g, *relator).map_err(|e| step_err(i, e.to_string()))
        }
        TietzeStep::AddRelator { relator, cert } => {
            let (w, c) = RelatorCertificate::from_doc(p, &cert_doc(relator.clone(), cert))
                .map_err(|e| step_err(i, e.to_string()))?;
            if !super::check_relator_certificate(p, &w, &c) {
                return Err(step_err(
                    i,
                    format!("certificate for added relator {relator} fails"),
                ));
            }
            p.with_relators([w]).map_err(|e| step_err(i, e.to_string()))
        }
        TietzeStep::RemoveRelator { index, cert } => {
            let r = p
                .relators()
                .get(*index)
                .ok_or_else(|| step_err(i, "no such relator"))?
                .clone();
            let mut rest: Vec<Word> = p.relators().to_vec();
            rest.remove(*index);
            let q = Presentation::new(p.names().to_vec(), rest)
                .map_err(|e| step_err(i, e.to_string()))?;
            let (w, c) = RelatorCertificate::from_doc(&q, &cert_doc(q.format(&r), cert))
                .map_err(|e| step_err(i, e.to_string()))?;
            if !super::check_relator_certificate(&q, &w, &c) {
                return Err(step_err(
                    i,
                    format!("certificate for removed relator {index} fails"),
                ));
            }
            Ok(q)
        }
    }
}

pub fn apply_chain(p: &Presentation, steps: &[TietzeStep]) -> Result<Presentation, ChainError> {
    steps
        .iter()
        .enumerate()
        .try_fold(p.clone(), |acc, (i, s)| apply_step(&acc, s, i))
}

/// Checks both chains and compares their end points; returns the common presentation.
pub fn check_equivalence(
    a: &Presentation,
    b: &Presentation,
    cert: &EquivalenceCertificate,
) -> Result<Presentation, ChainError> {
    let x = apply_chain(a, &cert.source)?;
    let y = apply_chain(b, &cert.target)?;
    let mut rx = x.relators().to_vec();
    let mut ry = y.relators().to_vec();
    rx.sort();
    ry.sort();
    rx.dedup();
    ry.dedup();
    if x.ngens() != y.ngens() || rx != ry {
        return Err(ChainError::Mismatch);
    }
    Ok(x)
}
