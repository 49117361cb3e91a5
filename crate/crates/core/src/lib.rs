//! Finite quasigroups, their semisymmetrizations, and exhaustive checks of the
//! categorical laws relating homotopies to homomorphisms.

pub mod catcheck;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod morphisms;
pub mod qcore;
pub mod semisym;

pub use error::{Budget, Error, ErrorKind, Result};
pub use qcore::{ParastropheKind, Quasigroup};
