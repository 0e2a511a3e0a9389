//! twistcheck: verifiable computations with Dehn-twist relations in mapping
//! class groups of compact oriented surfaces, and the Lefschetz-fibration
//! data they encode.
//!
//! The crate is organized bottom-up:
//!
//! * [`word`] — reduced words in free groups;
//! * [`surface`] — the polygon model of Σ_{g,r};
//! * [`geometry`] — cyclic order at infinity; crossing/linking tests;
//! * [`curve`] — curve classes, intersection numbers, simpleness;
//! * [`mapclass`] — mapping classes and the Dehn-twist construction;
//! * [`homology`] — H₁ action and the transvection cross-check;
//! * [`closed`] — word and conjugacy problems on closed surfaces;
//! * [`catalog`] — named curve configurations loaded from data files;
//! * [`calculus`] — twist words, relation statements, proof scripts;
//! * [`hg`] — generated derivations of the H_g relations;
//! * [`relator`] — positive relators, capping, Hurwitz moves;
//! * [`invariants`] — fibration invariants and Kirby handle data.

pub mod calculus;
pub mod catalog;
pub mod closed;
pub mod curve;
pub mod error;
pub mod geometry;
pub mod hg;
pub mod homology;
pub mod invariants;
pub mod mapclass;
pub mod relations;
pub mod relator;
pub mod report;
pub mod surface;
pub mod word;
