//! Exact tools for s-rainbow matchings in properly colored k-uniform
//! hypergraphs.
//!
//! A family `H_1, …, H_s` of hypergraphs on a shared vertex set has an
//! *s-rainbow matching* when one edge can be taken from each member so that
//! the chosen edges are pairwise vertex-disjoint and pairwise differently
//! colored. If every member is properly colored, `n >= 3k²s`, and every
//! member has more than `C(n, k) - C(n - s + 1, k)` edges, such a matching
//! exists. This crate provides:
//!
//! - the data model ([`ColoredHypergraph`], [`HypergraphFamily`]) with degree,
//!   deletion and link operations, plus text and JSON formats;
//! - generators for the extremal and counterexample configurations
//!   ([`constructions`]);
//! - exact solvers and a brute-force oracle ([`solver`]);
//! - a constructive engine that follows the inductive existence argument
//!   and produces a witness step by step ([`proof`]);
//! - a reproducible batch harness ([`harness`]).
//!
//! ```
//! use rainbow_match::{constructions, solver};
//!
//! let family = constructions::complement_pair(3).unwrap();
//! assert_eq!(family.member(0).edge_count(), 20);
//! assert!(!solver::find_rainbow_matching(&family).unwrap().found);
//! ```

pub mod binomial;
pub mod constructions;
pub mod error;
pub mod format;
pub mod harness;
pub mod hypergraph;
pub mod matching;
pub mod proof;
pub mod solver;

pub use binomial::{binomial, threshold, ArithmeticError};
pub use error::{FormatError, HypergraphError, InputError};
pub use hypergraph::{
    validate, Color, ColoredEdge, ColoredHypergraph, HypergraphFamily, ValidationReport, Vertex,
    VertexMap, Violation,
};
pub use matching::{check_rainbow_matching, MatchingViolation, RainbowMatching};

/// The guide's code samples, compiled and run as doctests.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/data-model.md")]
    mod data_model {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/solving.md")]
    mod solving {}
    #[doc = include_str!("../../../book/src/proof-engine.md")]
    mod proof_engine {}
    #[doc = include_str!("../../../book/src/harness.md")]
    mod harness {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
