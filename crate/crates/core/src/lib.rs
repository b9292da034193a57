//! Permutation tableaux and their statistics.
//!
//! A permutation tableau is a 0/1 filling of a Young diagram inside a
//! `k × (n−k)` box in which every column contains a 1 and no 0 has both a
//! 1 above it and a 1 to its left.  These objects are in bijection with
//! permutations of `S_n` having `k` weak excedances, and the bijection
//! translates cell counts into alignment and crossing statistics; a
//! second bijection on permutations carries those further into vincular
//! pattern counts.  The crate implements both bijections, the full
//! statistic suite on each side, exact polynomial enumeration of tableaux
//! by content (including Carlitz's q-Eulerian polynomials and a family of
//! q-Eulerian analogs with rational and continued-fraction generating
//! functions), and an exhaustive verification harness for the underlying
//! identities at small n.

pub mod biword;
pub mod bijections;
pub mod enumeration;
pub mod error;
pub mod partition;
pub mod perm;
pub mod polyalg;
pub mod statistics;
pub mod tableau;
pub mod verify;

pub use biword::Biword;
pub use error::PermtabError;
pub use partition::Partition;
pub use perm::Permutation;
pub use tableau::{PathLabeling, PathStep, PermutationTableau};
