//! Class membership tests and the polynomial proximity measures: omnian
//! counting for tree-child, the zig-zag decomposition for tree-based, cherry
//! picking for orchard, and cherry covers with their auxiliary graph.

mod cover;
mod picking;
mod zigzag;

pub use cover::{
    aux_graph_is_acyclic, build_cherry_cover, default_middle_choice, enumerate_middle_choices,
    CherryCover, CoverError, MiddleChoice, Shape,
};
pub use picking::{is_orchard, reduce_once, NoReduciblePair, ReducedPair, ReductionKind};
pub use zigzag::{l_tb, tb_additions, zigzag_decompose, TrailKind, ZigZagDecomposition, ZigZagTrail};

use crate::network::{ArcId, PhyloNetwork, VertexId};

/// Internal vertices all of whose children are reticulations, ascending by id.
/// A network is tree-child exactly when there are none.
pub fn omnians(net: &PhyloNetwork) -> Vec<VertexId> {
    net.vertices()
        .filter(|&v| net.is_internal(v) && net.children(v).all(|c| net.is_reticulation(c)))
        .collect()
}

/// Leaf additions needed to reach the tree-child class: the omnian count.
pub fn l_tc(net: &PhyloNetwork) -> usize {
    omnians(net).len()
}

pub fn is_tree_child(net: &PhyloNetwork) -> bool {
    omnians(net).is_empty()
}

/// One outgoing arc per omnian; adding a leaf to each of them yields a
/// tree-child network.
pub fn tc_additions(net: &PhyloNetwork) -> Vec<ArcId> {
    omnians(net)
        .into_iter()
        .map(|v| net.out_arcs(v)[0])
        .collect()
}

pub fn is_tree_based(net: &PhyloNetwork) -> bool {
    l_tb(net) == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::network::VertexId;

    #[test]
    fn trees_have_no_omnians() {
        assert_eq!(l_tc(&fixtures::caterpillar_tree()), 0);
        assert!(is_tree_child(&fixtures::caterpillar_tree()));
    }

    #[test]
    fn n_blob_has_two_omnians() {
        // Vertices: rho=0, t0=1, b=2, u=3, v=4, w=5, r=6, a=7. Children of
        // v are {w, r}, the only child of w is r: both all-reticulation.
        let net = fixtures::n_blob();
        assert_eq!(omnians(&net), vec![VertexId(4), VertexId(5)]);
        assert_eq!(l_tc(&net), 2);
    }

    #[test]
    fn reticulated_cherry_is_tree_child() {
        assert_eq!(l_tc(&fixtures::reticulated_cherry()), 0);
    }

    #[test]
    fn tc_additions_make_tree_child_and_orchard() {
        let net = fixtures::n_blob();
        let additions = tc_additions(&net);
        assert_eq!(additions.len(), 2);
        let mut grown = net;
        for (i, arc) in additions.into_iter().enumerate() {
            grown = grown.add_leaf(arc, &format!("t{i}")).unwrap();
        }
        assert!(is_tree_child(&grown));
        assert!(is_orchard(&grown).0);
    }
}
