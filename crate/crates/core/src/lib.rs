//! Weighted lattice-point enumeration of dilated lattice polytopes and the
//! q-analogue of Ehrhart theory, in exact arithmetic.

pub mod algebra;
pub mod error;
pub mod polytope;
pub mod triangulation;
pub mod ehrhart;
pub mod poset;
pub mod corpus;
pub mod io;
pub mod verify;
