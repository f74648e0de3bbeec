//! Plumbing graphs and blow-up models of the plane.
//!
//! * Hirzebruch–Jung continued fractions and normalized cyclic quotient types.
//! * Plumbing graphs, their intersection matrices and discriminant groups.
//! * The three resolution-graph families, the `n²/(nq−1)` chains and the
//!   Seifert star with an unknown central weight.
//! * Divisor-class ledgers over iterated blow-ups of `ℙ²`: dual graphs of
//!   chosen components and first homology of their complement.
//!
//! Complement homology uses `H₁(Z ∖ D) ≅ coker(ℤ^D → H₂(Z))`, valid for a
//! simply connected rational surface `Z` and an SNC divisor `D`.

mod blowup;
mod family;
mod graph;
mod hj;
mod script;

pub use blowup::{blowup, complement_h1, dual_graph, BlowupModel, BlowupRecord};
pub use family::{family_graph, seifert_arms, solve_central_weight, Family};
pub use graph::{discriminant_group, Discriminant, PlumbingGraph, Vertex};
pub use hj::{hj_expand, hj_value, normalize_cyclic_type, CyclicType};
pub use script::{
    family_model, run_script, BlowupScript, ModelFamily, ScriptedModel, B23_BLOWUPS, C23_BLOWUPS,
    C33_BLOWUPS,
};

use crate::template::TemplateError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResError {
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("weights {w:?} do not act freely on ℤ/{n}")]
    NonFree { n: u64, w: (i64, i64) },
    #[error("intersection matrix is singular")]
    SingularMatrix,
    #[error("unknown curve `{0}`")]
    UnknownCurve(String),
    #[error("{a} · {b} = {product}: not a simple normal crossing")]
    NotSnc { a: String, b: String, product: i64 },
    #[error("blow-up script: {0}")]
    Script(String),
    #[error(transparent)]
    Template(#[from] TemplateError),
}
