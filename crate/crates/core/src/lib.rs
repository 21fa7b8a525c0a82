//! Increasing paths in hypergraphs: duals, β-paths and β-cycles, peeling
//! for the finite-threshold properties, skeleton graphs of generator sets,
//! and exact search for increasing loose paths.

pub mod beta;
pub mod error;
pub mod generators;
pub mod hypergraph;
pub mod json;
pub mod labeling;
pub mod oracle;
pub mod pathsearch;
pub mod properties;
pub mod skeleton;

pub use beta::{BetaSequence, CanonicalCycle, Item, SequenceKind, Through};
pub use error::{Error, Result};
pub use generators::FamilySpec;
pub use hypergraph::{dual, double_dual_correspondence, validate, Dual, Hypergraph};
pub use labeling::{Labeling, Target};
pub use pathsearch::{LoosePath, Mode};
pub use skeleton::{GeneratorSet, RootRule, SkeletonGraph};
