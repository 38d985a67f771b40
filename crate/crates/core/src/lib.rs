//! Clique hypergraphs and their duals: conformality and Sperner tests,
//! minimal clique-transversal enumeration, the clique-dual transformation,
//! recognition of clique-dually-conformal (CDC) graphs, and the
//! conformalize/dualize dynamical system.
//!
//! Everything operates on graphs and hypergraphs with at most 64 vertices,
//! with vertex sets packed into machine words. All operations are pure
//! functions on immutable values and safe to run concurrently.

pub mod dynamics;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod hypergraph;
pub mod invariants;
pub mod iso;
pub mod recognizers;
pub mod set;

pub use error::{Error, Result};
pub use graph::{DualMode, Graph, SplitPartition};
pub use hypergraph::{substitute_hypergraph, Hypergraph, SubstitutionMap};
pub use recognizers::{
    is_cdc, is_cdc_with_limit, recognize_split_cdc, recognize_triangle_free_cdc, CdcVerdict,
    RecognitionMethod,
};
pub use set::VertexSet;

/// Cap on intermediate and final transversal counts during dualization.
pub const DEFAULT_DUAL_LIMIT: usize = 1_000_000;
/// Cap on enumerated maximal cliques.
pub const DEFAULT_CLIQUE_LIMIT: usize = 1 << 20;
/// Vertex cap for isomorphism testing.
pub const DEFAULT_ISO_CAP: usize = 12;
/// Cap on distinct states visited by a trajectory walk.
pub const DEFAULT_MAX_STATES: usize = 64;
