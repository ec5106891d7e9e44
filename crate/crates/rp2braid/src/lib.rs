//! Surface braid group computations for the projective plane, with a claim
//! registry that re-derives the key indices, abelian invariants, quotient
//! identifications, and homomorphism checks.

pub mod actions;
pub mod braid;
pub mod claims;
pub mod gamma2;
pub mod gensk;
pub mod identities;
pub mod models;
pub mod registry;
pub mod modtwo;
pub mod report;
pub mod series;
