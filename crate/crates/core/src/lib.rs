//! Degree-based topological indices of trees.
//!
//! The crate computes irregularity-flavoured indices (Albertson, sigma in both
//! its edge and moment forms, Criado, Sombor, and the two Zagreb indices) on
//! trees, enumerates non-isomorphic trees either by order or by degree
//! sequence, searches for extremal realizations, and audits a registry of
//! inequalities between those indices over exhaustively enumerated corpora.
//!
//! Everything downstream of [`tree::Tree`] is deterministic: enumeration
//! streams are sorted by canonical code, searches break ties canonically, and
//! audit reports are byte-stable regardless of worker parallelism.

pub mod audit;
pub mod canon;
pub mod construct;
pub mod degrees;
pub mod enumerate;
pub mod error;
pub mod fmt;
pub mod indices;
pub mod pruefer;
pub mod search;
pub mod tree;

pub use canon::CanonicalCode;
pub use degrees::DegreeSequence;
pub use error::{Error, Result};
pub use indices::{DerivedParams, IndexKind, IndexValue, Rational};
pub use pruefer::PrueferSeq;
pub use tree::Tree;
