//! Exact computations for fundamental groups of rational homology disk
//! smoothings: finitely presented groups, Zariski–van Kampen presentations,
//! monomial matrix groups, sparse polynomials and plumbing graphs.

pub mod fpgroup;
pub mod matgroup;
pub mod pipeline;
pub mod polyalg;
pub mod resgraph;
pub mod smith;
pub mod template;
pub mod verify;
pub mod zvk;
