//! The sharp upper bound `r(N) - 1`: fix one highest reticulation and give
//! every other reticulation a leaf on one of its incoming arcs; the result
//! is orchard because every non-highest reticulation gains a leaf sibling.

use crate::network::{ArcId, PhyloNetwork, VertexId};

/// A reticulation without reticulation ancestors, smallest id first.
/// `None` when the network is a tree.
pub fn highest_reticulation(net: &PhyloNetwork) -> Option<VertexId> {
    let mut has_ret_ancestor = vec![false; net.vertex_count()];
    for &v in net.topological_order() {
        for p in net.parents(v) {
            if has_ret_ancestor[p.index()] || net.is_reticulation(p) {
                has_ret_ancestor[v.index()] = true;
            }
        }
    }
    net.reticulations().find(|&r| !has_ret_ancestor[r.index()])
}

/// One incoming arc per non-highest reticulation; adding a leaf to each of
/// them makes the network orchard. Length `max(0, r(N) - 1)`.
pub fn upper_bound_additions(net: &PhyloNetwork) -> Vec<ArcId> {
    let Some(highest) = highest_reticulation(net) else {
        return Vec::new();
    };
    net.reticulations()
        .filter(|&r| r != highest)
        .map(|r| net.in_arcs(r)[0])
        .collect()
}
