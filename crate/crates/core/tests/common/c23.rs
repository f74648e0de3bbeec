//! Builds the C₂,₃ equivalence chain and the abelianity lemmas with the
//! search tools in [`super::prover`].

#![allow(dead_code)]

use super::prover::{bfs_two_factors, conjugate_factor, prove};
use qhd_core::fpgroup::{
    apply_step, CertificateDoc, EquivalenceCertificate, Presentation, RelatorCertificate,
    TietzeStep, Word,
};
use qhd_core::pipeline::{C23Certificates, C23Pipeline, LemmaChain};

fn push(p: &mut Presentation, steps: &mut Vec<TietzeStep>, step: TietzeStep) {
    *p = apply_step(p, &step, steps.len()).expect("generated step must check");
    steps.push(step);
}

fn add(p: &mut Presentation, steps: &mut Vec<TietzeStep>, text: &str, cert: RelatorCertificate) {
    let w = p.word(text).unwrap();
    let doc = cert.to_doc(p, &w);
    push(
        p,
        steps,
        TietzeStep::AddRelator {
            relator: p.format(&w),
            cert: doc.factors,
        },
    );
}

fn remove(
    p: &mut Presentation,
    steps: &mut Vec<TietzeStep>,
    index: usize,
    cert: RelatorCertificate,
) {
    let mut rest = p.relators().to_vec();
    let r = rest.remove(index);
    let q = Presentation::new(p.names().to_vec(), rest).unwrap();
    let doc = cert.to_doc(&q, &r);
    push(
        p,
        steps,
        TietzeStep::RemoveRelator {
            index,
            cert: doc.factors,
        },
    );
}

fn without(p: &Presentation, index: usize) -> (Presentation, Word) {
    let mut rest = p.relators().to_vec();
    let r = rest.remove(index);
    (Presentation::new(p.names().to_vec(), rest).unwrap(), r)
}

pub fn generate(c: &C23Pipeline) -> C23Certificates {
    let mut source = Vec::new();
    let mut p = c.group.clone();
    // q2 = q1 from the tangency relation, then f from the killed meridian
    let r = p
        .relators()
        .iter()
        .position(|r| p.format(r) == "q2*q1^-1")
        .unwrap();
    push(
        &mut p,
        &mut source,
        TietzeStep::Eliminate {
            gen: "q2".into(),
            relator: r,
        },
    );
    let k = p.relators().len() - 1;
    push(
        &mut p,
        &mut source,
        TietzeStep::Eliminate {
            gen: "f".into(),
            relator: k,
        },
    );
    let original = p.relators().len();

    for t in ["[q1,(q1*c)^3]", "[q1,c*q1*c]"] {
        let w = p.word(t).unwrap();
        let cert = prove(&p, &w).expect("lemma");
        add(&mut p, &mut source, t, cert);
    }
    let w = p.word("[q1,c]").unwrap();
    let cert = bfs_two_factors(&p, &w, 6).expect("commutator");
    add(&mut p, &mut source, "[q1,c]", cert);

    // everything except the last original relator (the one shared with the
    // target) now follows from the commutator
    for i in (0..original - 1).rev() {
        let (q, r) = without(&p, i);
        let cert = prove(&q, &r).expect("redundant relator");
        remove(&mut p, &mut source, i, cert);
    }
    // drop [q1,c], then [q1,c*q1*c]
    for _ in 0..2 {
        let i = p.relators().len() - 1;
        let (q, r) = without(&p, i);
        let cert = bfs_two_factors(&q, &r, 6).expect("helper relator");
        remove(&mut p, &mut source, i, cert);
    }

    let f = c.target.relators().len() - 1;
    let target = vec![TietzeStep::Eliminate {
        gen: "f".into(),
        relator: f,
    }];
    let equivalence = EquivalenceCertificate { source, target };

    C23Certificates {
        equivalence,
        lemmas: lemmas(c),
    }
}

/// `[q, c] = 1` in the target group, via `[q, cqc] = 1`.
fn lemmas(c: &C23Pipeline) -> LemmaChain {
    let f = c.target.relators().len() - 1;
    let mut p = apply_step(
        &c.target,
        &TietzeStep::Eliminate {
            gen: "f".into(),
            relator: f,
        },
        0,
    )
    .unwrap();
    let base = p.to_doc();
    let mut derivations: Vec<CertificateDoc> = Vec::new();
    for t in ["[q,c*q*c]", "[q,c]"] {
        let w = p.word(t).unwrap();
        let cert = conjugate_factor(&p, &w)
            .map(|f| RelatorCertificate { factors: vec![f] })
            .or_else(|| bfs_two_factors(&p, &w, 6))
            .expect("lemma");
        derivations.push(cert.to_doc(&p, &w));
        p = p.with_relators([w]).unwrap();
    }
    LemmaChain { base, derivations }
}
