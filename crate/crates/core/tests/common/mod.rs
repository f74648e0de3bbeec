pub mod c23;
pub mod drawings;
pub mod prover;
