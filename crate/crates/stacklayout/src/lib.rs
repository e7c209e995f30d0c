//! Stack layouts (book embeddings) of directed acyclic graphs.
//!
//! A `k`-stack layout of a DAG is a topological ordering of its vertices
//! together with a partition of its edges into `k` stacks, where no two
//! edges on the same stack cross (have alternating endpoints along the
//! ordering). This crate provides:
//!
//! - [`graph`]: simple directed graphs, topological-ordering enumeration,
//!   block-cut trees, outerplanarity testing, and augmentation to maximal
//!   outerplanar.
//! - [`twotree`]: 2-tree construction sequences, stacking-type
//!   classification, construction trees, and monotonicity profiles.
//! - [`layout`]: the layout data model, crossing/nesting analysis, twist and
//!   rainbow numbers of an ordering, stack assignment, layout verification,
//!   and the twist-to-stacks bound calculator.
//! - [`hpartition`]: directed H-partitions of outerplanar DAGs, quotient
//!   graphs, cut cover numbers, and the partition property verifier.
//! - [`engine`]: the layout-composition algorithms, from 1-stack transitive
//!   parts up to the end-to-end constant-stack pipeline for outerplanar
//!   DAGs.
//! - [`adversary`]: generators for lower-bound families and the
//!   rainbow-with-children trichotomy classifier.
//! - [`oracle`]: exact twist and stack numbers at desk scale.
//! - [`random`]: seeded random instance generators.
//! - [`io`]: file formats (graph JSON, edge lists, layout and partition
//!   JSON), DOT export, and SVG arc diagrams.

pub mod adversary;
pub mod engine;
pub mod graph;
pub mod hpartition;
pub mod io;
pub mod layout;
pub mod oracle;
pub mod random;
pub mod twotree;

pub use graph::{DirectedGraph, Edge, Vertex};
