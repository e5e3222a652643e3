//! Exact construction of discrete-time quantum-walk operators on graphs,
//! Ihara and weighted zeta functions, and the determinant identities that tie
//! their characteristic polynomials to vertex-level matrices.

pub mod algebra;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod spectra;
pub mod walk;
pub mod zeta;

pub use error::{Error, Result};
