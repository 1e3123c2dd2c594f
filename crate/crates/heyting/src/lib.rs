//! A workbench for finite Heyting algebras.
//!
//! The crate represents finite Heyting algebras as fully tabulated bounded
//! distributive lattices and builds the classical structure theory on top:
//!
//! - [`kernel`]: construction from cover data, coalesced ordinal sums,
//!   products, isomorphism testing;
//! - [`catalog`]: the named algebras used throughout (the one-generated
//!   family `Z1..Z10`, the prohibited algebras `P1..P5` and their
//!   homomorphic preimages `P1*..P5*`), plus an exhaustive corpus of all
//!   finite Heyting algebras with a small join-irreducible poset;
//! - [`structure`]: element classification, nodes, strong order, filters,
//!   ideals, generated subalgebras, subdirect irreducibility, nodeless
//!   decompositions;
//! - [`morphisms`]: embeddings, principal-filter quotients, generated
//!   varieties, and total-non-projectivity certificates;
//! - [`logic`]: propositional formulas, validity, characteristic formulas,
//!   and the decision procedure for hereditary structural completeness;
//! - [`wqo`]: projective shapes, block signatures, the domination order and
//!   its sound embedding fast path.

pub mod catalog;
pub mod kernel;
pub mod logic;
pub mod morphisms;
mod search;
pub mod structure;
pub mod wqo;

pub use kernel::{AlgebraMap, ElementId, HeytingAlgebra, LatticeError, MapKind};
