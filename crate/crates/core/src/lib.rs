//! Construction and exact analysis of the non-solvable graph of a finite group.
//!
//! For a finite group `G`, let `Sol(G)` be its solvable radical. The
//! non-solvable graph has vertex set `G \ Sol(G)`, with two distinct
//! elements adjacent exactly when the subgroup they generate is not
//! solvable. This crate enumerates permutation groups, computes
//! solvabilizers and the radical, builds the graph, and provides exact
//! solvers (clique, independence, domination, vertex connectivity,
//! hamiltonicity, genus lower bounds) together with re-validated
//! witnesses for every structural claim it checks.
//!
//! The crate is `no_std` (it only needs `alloc`); file formats, the
//! group catalog and the command-line front end live in the companion
//! `nsgraph-tools` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bits;
pub mod clique;
pub mod connectivity;
pub mod domination;
pub mod graph;
pub mod group;
pub mod hamilton;
pub mod invariants;
pub mod iso;
pub mod perm;
pub mod ratio;
pub mod search;
pub mod solvability;

pub use bits::BitSet;
pub use graph::{Graph, NsGraph};
pub use group::{ElemId, GroupSpec, GroupTable};
pub use perm::Permutation;
pub use ratio::Rational;
pub use solvability::SolvabilizerTable;
