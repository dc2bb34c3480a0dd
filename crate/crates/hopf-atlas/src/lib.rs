//! Exact computations with finite-dimensional Hopf algebras over cyclotomic
//! fields: construction and verification of the small families, invariants,
//! isomorphism witnesses, the coalgebra-profile prover and a status table.

pub mod atlas;
pub mod cli;
pub mod format;
pub mod hopf;
pub mod invariants;
pub mod iso;
pub mod kb;
pub mod linalg;
pub mod prover;
pub mod scalars;
pub mod suite;
