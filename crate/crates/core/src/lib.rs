//! Proximity measures for rooted binary phylogenetic networks.
//!
//! Given a network, this crate decides membership in the tree-child, orchard,
//! and tree-based classes and computes how many leaf additions separate the
//! network from each class: the omnian count for tree-child, the W-fence
//! count of the zig-zag decomposition for tree-based, and an exact
//! branch-and-bound search (over non-temporal vertex labellings) for the
//! NP-hard orchard distance. It also exports the equivalent mixed-integer
//! program in LP format, extracts and re-verifies certificates, and generates
//! benchmark instances: random birth-hybridization networks, vertex-cover
//! reduction networks, and the family on which the sharp upper bound
//! `r(N) - 1` is attained.

pub mod classes;
pub mod fixtures;
pub mod formats;
pub mod gen;
pub mod iso;
pub mod labelling;
pub mod network;
pub mod solver;

pub use network::{
    clean_up, raw_from_arcs, validate, ArcId, ArcKind, EditError, PhyloNetwork, RawGraph,
    ValidateError, VertexId, VertexKind,
};
