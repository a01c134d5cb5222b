//! Recognition of theta-ring (equivalently CIO) graphs through three
//! mutually cross-validating routes:
//!
//! * a brute-force search over chorded-theta subgraphs and their transversal
//!   triangles ([`theta`]),
//! * a constructive polynomial recognizer producing clique-sum decomposition
//!   certificates with complete-graph and cycle leaves ([`decompose`]),
//! * toric-ideal verification for edge orientations: cycle binomials, ideal
//!   height `q - n + r`, and minimal binomial generator counts computed from
//!   fiber graphs of acyclic orientations ([`toric`]).
//!
//! The [`cli`] module wires everything into batch commands; [`enumerate`]
//! provides isomorph-free catalogs of small graphs for the self-test and
//! acceptance suites.

pub mod cli;
pub mod decompose;
pub mod enumerate;
pub mod graph;
pub mod io;
pub mod theta;
pub mod toric;
