use super::presentation::Presentation;
use super::word::{product, Word};
use super::FpError;
use serde::{Deserialize, Serialize};

/// One factor `c · r^{±1} · c⁻¹` of a derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertFactor {
    pub relator: usize,
    pub sign: i8,
    pub conj: Word,
}

/// A product of conjugated relators. If it freely reduces to a word `t`,
/// then `t = 1` holds in the group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelatorCertificate {
    pub factors: Vec<CertFactor>,
}

/// Text form used in fixture files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub target: String,
    pub factors: Vec<FactorDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub relator: usize,
    pub sign: i8,
    pub conj: String,
}

impl RelatorCertificate {
    /// The freely reduced product the certificate evaluates to, or `None`
    /// if it cites a relator that does not exist.
    pub fn evaluate(&self, p: &Presentation) -> Option<Word> {
        let mut parts = Vec::with_capacity(self.factors.len());
        for f in &self.factors {
            let r = p.relators().get(f.relator)?;
            let r = if f.sign < 0 { r.inv() } else { r.clone() };
            parts.push(r.conj(&f.conj));
        }
        Some(product(&parts))
    }

    pub fn from_doc(p: &Presentation, doc: &CertificateDoc) -> Result<(Word, Self), FpError> {
        let target = p.word(&doc.target)?;
        let factors = doc
            .factors
            .iter()
            .map(|f| {
                Ok(CertFactor {
                    relator: f.relator,
                    sign: f.sign.signum(),
                    conj: p.word(&f.conj)?,
                })
            })
            .collect::<Result<_, FpError>>()?;
        Ok((target, RelatorCertificate { factors }))
    }

    pub fn to_doc(&self, p: &Presentation, target: &Word) -> CertificateDoc {
        CertificateDoc {
            target: p.format(target),
            factors: self
                .factors
                .iter()
                .map(|f| FactorDoc {
                    relator: f.relator,
                    sign: f.sign,
                    conj: p.format(&f.conj),
                })
                .collect(),
        }
    }
}

/// True iff the certificate's product freely reduces to `target`.
pub fn check_relator_certificate(
    p: &Presentation,
    target: &Word,
    cert: &RelatorCertificate,
) -> bool {
    cert.factors.iter().all(|f| f.sign == 1 || f.sign == -1)
        && cert.evaluate(p).as_ref() == Some(target)
}
