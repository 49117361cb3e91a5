//! Finite quasigroups, their parastrophes and the axiom predicates.

pub mod qgt;
mod quasigroup;
mod table;
mod twisted;

pub use quasigroup::{Magma, ParastropheKind, Quasigroup, SemisymmetryReport};
pub use table::{validate_latin, OpTable};
pub use twisted::{Biquasigroup, TwistedQuasigroup};
