//! The unique zig-zag decomposition: a partition of all non-root arcs into
//! maximal trails. Each arc has at most one tail-neighbour (the other out-arc
//! of a tree-vertex tail) and at most one head-neighbour (the other in-arc of
//! a reticulation head), so the trail components are paths and cycles and the
//! whole decomposition falls out in linear time.

use std::collections::BTreeSet;

use crate::network::{ArcId, PhyloNetwork, VertexKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrailKind {
    /// Closed trail, even length at least 4.
    Crown,
    /// Open, both terminal tails tree vertices; even length.
    MFence,
    /// Open, exactly one terminal tail a reticulation; odd length. Oriented
    /// so that the first arc's tail is the reticulation.
    NFence,
    /// Open, both terminal tails reticulations; even length. The obstruction
    /// to being tree-based.
    WFence,
}

#[derive(Debug, Clone)]
pub struct ZigZagTrail {
    pub arcs: Vec<ArcId>,
    pub kind: TrailKind,
}

#[derive(Debug, Clone)]
pub struct ZigZagDecomposition {
    pub trails: Vec<ZigZagTrail>,
}

impl ZigZagDecomposition {
    pub fn w_fences(&self) -> impl Iterator<Item = &ZigZagTrail> {
        self.trails.iter().filter(|t| t.kind == TrailKind::WFence)
    }

    pub fn n_fences(&self) -> impl Iterator<Item = &ZigZagTrail> {
        self.trails.iter().filter(|t| t.kind == TrailKind::NFence)
    }

    /// Id-independent view of the partition for comparing decompositions of
    /// the same network presented with permuted arc lists: a set of trails,
    /// each a set of (tail, head) pairs.
    pub fn partition_key(&self, net: &PhyloNetwork) -> BTreeSet<BTreeSet<(u32, u32)>> {
        self.trails
            .iter()
            .map(|t| {
                t.arcs
                    .iter()
                    .map(|&a| {
                        let (u, v) = net.arc(a);
                        (u.0, v.0)
                    })
                    .collect()
            })
            .collect()
    }
}

fn tail_neighbour(net: &PhyloNetwork, a: ArcId) -> Option<ArcId> {
    let t = net.tail(a);
    if net.kind(t) == VertexKind::Tree {
        net.out_arcs(t).iter().copied().find(|&b| b != a)
    } else {
        None
    }
}

fn head_neighbour(net: &PhyloNetwork, a: ArcId) -> Option<ArcId> {
    let h = net.head(a);
    if net.kind(h) == VertexKind::Reticulation {
        net.in_arcs(h).iter().copied().find(|&b| b != a)
    } else {
        None
    }
}

/// Computes the unique zig-zag decomposition of the non-root arcs.
pub fn zigzag_decompose(net: &PhyloNetwork) -> ZigZagDecomposition {
    let root_arc = net.root_arc();
    let mut visited = vec![false; net.arc_count()];
    visited[root_arc.index()] = true;
    let mut trails = Vec::new();

    let neighbours = |a: ArcId| {
        let mut v = Vec::with_capacity(2);
        if let Some(b) = tail_neighbour(net, a) {
            v.push(b);
        }
        if let Some(b) = head_neighbour(net, a) {
            v.push(b);
        }
        v
    };

    // Paths first, started from their smallest-id endpoint arc.
    for start in net.arc_ids() {
        if visited[start.index()] || neighbours(start).len() == 2 {
            continue;
        }
        let mut arcs = vec![start];
        visited[start.index()] = true;
        let mut prev = start;
        let mut cur = neighbours(start).into_iter().next();
        while let Some(a) = cur {
            arcs.push(a);
            visited[a.index()] = true;
            let next = neighbours(a).into_iter().find(|&b| b != prev);
            prev = a;
            cur = next;
        }
        trails.push(classify_path(net, arcs));
    }

    // Remaining arcs lie on cycles: crowns.
    for start in net.arc_ids() {
        if visited[start.index()] {
            continue;
        }
        let mut arcs = vec![start];
        visited[start.index()] = true;
        let mut prev = start;
        let mut cur = tail_neighbour(net, start).unwrap_or_else(|| {
            head_neighbour(net, start).expect("cycle arc has two neighbours")
        });
        while cur != start {
            arcs.push(cur);
            visited[cur.index()] = true;
            let next = neighbours(cur)
                .into_iter()
                .find(|&b| b != prev)
                .expect("cycle arc has two neighbours");
            prev = cur;
            cur = next;
        }
        debug_assert!(arcs.len() >= 4 && arcs.len() % 2 == 0);
        trails.push(ZigZagTrail {
            arcs,
            kind: TrailKind::Crown,
        });
    }

    ZigZagDecomposition { trails }
}

fn classify_path(net: &PhyloNetwork, mut arcs: Vec<ArcId>) -> ZigZagTrail {
    let first_ret = net.is_reticulation(net.tail(arcs[0]));
    let last_ret = net.is_reticulation(net.tail(*arcs.last().unwrap()));
    let kind = match (first_ret, last_ret) {
        (false, false) => TrailKind::MFence,
        (true, true) if arcs.len() > 1 => TrailKind::WFence,
        _ => {
            // Exactly one reticulation end (or a single arc, whose tail must
            // be a reticulation or it would not be maximal).
            if !first_ret {
                arcs.reverse();
            }
            TrailKind::NFence
        }
    };
    match kind {
        TrailKind::MFence | TrailKind::WFence => debug_assert!(arcs.len() % 2 == 0),
        TrailKind::NFence => debug_assert!(arcs.len() % 2 == 1),
        TrailKind::Crown => {}
    }
    ZigZagTrail { arcs, kind }
}

/// Leaf additions needed to reach the tree-based class: the W-fence count.
pub fn l_tb(net: &PhyloNetwork) -> usize {
    zigzag_decompose(net).w_fences().count()
}

/// One arc per W-fence; adding a leaf to each splits every W-fence into two
/// N-fences and makes the network tree-based.
pub fn tb_additions(net: &PhyloNetwork) -> Vec<ArcId> {
    zigzag_decompose(net)
        .w_fences()
        .map(|t| *t.arcs.iter().min().unwrap())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::network::ArcId;

    #[test]
    fn n_blob_decomposition_matches_hand_derivation() {
        // Arcs: 0 (rho,t0), 1 (t0,b), 2 (t0,u), 3 (u,v), 4 (u,w), 5 (v,w),
        // 6 (v,r), 7 (w,r), 8 (r,a).
        let net = fixtures::n_blob();
        let d = zigzag_decompose(&net);
        assert_eq!(d.trails.len(), 3);

        let m: Vec<_> = d
            .trails
            .iter()
            .filter(|t| t.kind == TrailKind::MFence)
            .collect();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].arcs, vec![ArcId(1), ArcId(2)]);

        let n: Vec<_> = d.n_fences().collect();
        assert_eq!(n.len(), 2);
        // The length-5 fence is oriented from the reticulation tail w.
        let long = n.iter().find(|t| t.arcs.len() == 5).unwrap();
        assert_eq!(
            long.arcs,
            vec![ArcId(7), ArcId(6), ArcId(5), ArcId(4), ArcId(3)]
        );
        let short = n.iter().find(|t| t.arcs.len() == 1).unwrap();
        assert_eq!(short.arcs, vec![ArcId(8)]);

        assert_eq!(l_tb(&net), 0);
    }

    #[test]
    fn tree_decomposes_into_length_two_m_fences() {
        let net = fixtures::caterpillar_tree();
        let d = zigzag_decompose(&net);
        assert!(d
            .trails
            .iter()
            .all(|t| t.kind == TrailKind::MFence && t.arcs.len() == 2));
        assert_eq!(l_tb(&net), 0);
    }

    #[test]
    fn w_fence_detection_and_additions() {
        // Two reticulations feeding a third: the pair of in-arcs of r has
        // reticulation tails on both sides, the shortest possible W-fence.
        use crate::network::{raw_from_arcs, validate};
        let net = validate(&raw_from_arcs([
            ("rho", "s"),
            ("s", "u1"),
            ("s", "u2"),
            ("u1", "q1"),
            ("u1", "q2"),
            ("u2", "q3"),
            ("u2", "q4"),
            ("q1", "g1"),
            ("q2", "g1"),
            ("q3", "g2"),
            ("q4", "g2"),
            ("q1", "y1"),
            ("q2", "y2"),
            ("q3", "y3"),
            ("q4", "y4"),
            ("g1", "r"),
            ("g2", "r"),
            ("r", "x"),
        ]))
        .unwrap();
        let d = zigzag_decompose(&net);
        assert_eq!(d.w_fences().count(), 1);
        assert_eq!(l_tb(&net), 1);

        let additions = tb_additions(&net);
        assert_eq!(additions.len(), 1);
        let grown = net.add_leaf(additions[0], "z").unwrap();
        assert_eq!(l_tb(&grown), 0);
        // The W-fence splits into two N-fences.
        let d2 = zigzag_decompose(&grown);
        assert_eq!(d2.n_fences().count(), d.n_fences().count() + 2);
    }

    #[test]
    fn crowns_are_detected() {
        // A crown: two reticulations fed by two tree vertices in a cycle of
        // four arcs, hanging below a funnel.
        use crate::network::{raw_from_arcs, validate};
        let net = validate(&raw_from_arcs([
            ("rho", "s"),
            ("s", "t1"),
            ("s", "t2"),
            ("t1", "p1"),
            ("t2", "p2"),
            ("t1", "h0"),
            ("t2", "h0"),
            ("h0", "s2"),
            ("s2", "x1"),
            ("s2", "x2"),
            ("p1", "h1"),
            ("p1", "h2"),
            ("p2", "h1"),
            ("p2", "h2"),
            ("h1", "x"),
            ("h2", "y"),
        ]))
        .unwrap();
        let d = zigzag_decompose(&net);
        assert!(d.trails.iter().any(|t| t.kind == TrailKind::Crown));
    }
}
