//! Exact computation of BPS spaces, refined DT invariants and the
//! cohomological integrality isomorphism for weakly symmetric
//! representations of reductive groups, from lattice-level data.

pub mod arrangement;
pub mod cli;
pub mod error;
pub mod integrality;
pub mod lattice;
pub mod linalg;
pub mod polyalg;
pub mod weyl;

pub use error::{Error, Result};
