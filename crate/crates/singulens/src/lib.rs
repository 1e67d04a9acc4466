//! Exact local invariants of polynomial germs and ideals.
//!
//! `singulens` computes order, Łojasiewicz exponents, Hilbert–Samuel
//! multiplicity, integral-closure data and Newton non-degeneracy for ideals
//! of polynomial germs — at the origin of affine space or at the distinguished
//! point of an affine toric variety given by a semigroup of exponents.  All
//! geometry (Newton polyhedra, their faces, volumes and scalings) is carried
//! out in exact rational arithmetic; floating point appears only in one
//! clearly-marked heuristic (numerical root sampling for non-degeneracy of
//! general face systems) and every result records whether it was obtained
//! exactly or heuristically.
//!
//! The crate also issues machine-checkable certificates: given one germ or a
//! pair of germs, it evaluates the hypotheses of classical invariance and
//! comparison theorems and reports either a conclusion with the verified
//! hypothesis list or the precise hypothesis that failed.

pub mod arith;
pub mod certificate;
pub mod corpus;
pub mod error;
pub mod germ;
pub mod ideal;
pub mod invariants;
pub mod lattice;
pub mod polyhedron;
pub mod semigroup;
pub mod torus;

pub use error::{Error, Result};
