//! Exact computations on Engel-commutator graphs of finite groups.
//!
//! Groups are stored as multiplication tables ([`group`]). [`engel`] builds
//! the Engel table, the left Engel set and the co-Engel graphs; [`analysis`]
//! recognises complete multipartite shapes, clique numbers and planarity;
//! [`spectra`] gives exact characteristic polynomials and energies;
//! [`genus`] covers genus, crosscap and Zagreb indices. [`cli`] backs the
//! `engel-lab` binary.

pub mod bitset;
pub mod group;
pub mod engel;
pub mod graph;
pub mod analysis;
pub mod spectra;
pub mod genus;
pub mod cli;
