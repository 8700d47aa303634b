//! Cherry covers: partitions of the non-root arcs into cherry shapes and
//! reticulated cherry shapes, plus the auxiliary digraph over shapes. Used
//! for verification and for the hardness-gadget tests; the orchard decision
//! itself goes through cherry picking.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::classes::zigzag::{zigzag_decompose, TrailKind};
use crate::network::{ArcId, PhyloNetwork, VertexId, VertexKind};

/// A shape of a cherry cover, identified by its arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    /// Two arcs sharing a tree-vertex tail.
    Cherry { arcs: [ArcId; 2] },
    /// `{p_x x, p_y p_x, p_y y}` with `p_x` a reticulation: the out-arc of
    /// the reticulation, the chosen middle arc, and the middle's sibling.
    ReticulatedCherry {
        out: ArcId,
        middle: ArcId,
        sibling: ArcId,
    },
}

impl Shape {
    pub fn arcs(&self) -> Vec<ArcId> {
        match self {
            Shape::Cherry { arcs } => arcs.to_vec(),
            Shape::ReticulatedCherry {
                out,
                middle,
                sibling,
            } => vec![*out, *middle, *sibling],
        }
    }

    /// The heads of the shape's outer arcs.
    fn endpoints(&self, net: &PhyloNetwork) -> Vec<VertexId> {
        match self {
            Shape::Cherry { arcs } => vec![net.head(arcs[0]), net.head(arcs[1])],
            Shape::ReticulatedCherry { out, sibling, .. } => {
                vec![net.head(*out), net.head(*sibling)]
            }
        }
    }

    fn internal_vertices(&self, net: &PhyloNetwork) -> Vec<VertexId> {
        match self {
            Shape::Cherry { arcs } => vec![net.tail(arcs[0])],
            Shape::ReticulatedCherry { out, middle, .. } => {
                vec![net.head(*middle), net.tail(*middle), net.tail(*out)]
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CherryCover {
    pub shapes: Vec<Shape>,
}

/// One chosen incoming (middle) arc per reticulation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MiddleChoice(pub BTreeMap<VertexId, ArcId>);

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CoverError {
    #[error("network has a W-fence and therefore no cherry cover")]
    NotTreeBased,
    #[error("tree vertex {0} has both outgoing arcs selected as middles")]
    InfeasibleChoice(VertexId),
    #[error("arc {0} cannot be a middle: its tail is not a tree vertex")]
    MiddleNotFromTreeVertex(ArcId),
    #[error("choice must select exactly one incoming arc of reticulation {0}")]
    BadChoiceShape(VertexId),
}

/// Builds the cover induced by a middle choice: each reticulation yields a
/// reticulated cherry shape (its out-arc, the chosen middle, the middle's
/// tail sibling), and the out-arc pairs of the untouched tree vertices form
/// cherry shapes. Every non-root arc must end up covered exactly once.
pub fn build_cherry_cover(
    net: &PhyloNetwork,
    choice: &MiddleChoice,
) -> Result<CherryCover, CoverError> {
    let decomposition = zigzag_decompose(net);
    if decomposition.trails.iter().any(|t| t.kind == TrailKind::WFence) {
        return Err(CoverError::NotTreeBased);
    }

    let mut shapes = Vec::new();
    let mut middle_tails: BTreeMap<VertexId, ArcId> = BTreeMap::new();
    for r in net.reticulations() {
        let &middle = choice
            .0
            .get(&r)
            .ok_or(CoverError::BadChoiceShape(r))?;
        if !net.in_arcs(r).contains(&middle) {
            return Err(CoverError::BadChoiceShape(r));
        }
        let p_y = net.tail(middle);
        if net.kind(p_y) != VertexKind::Tree {
            return Err(CoverError::MiddleNotFromTreeVertex(middle));
        }
        if middle_tails.insert(p_y, middle).is_some() {
            return Err(CoverError::InfeasibleChoice(p_y));
        }
        let sibling = net
            .out_arcs(p_y)
            .iter()
            .copied()
            .find(|&a| a != middle)
            .unwrap();
        shapes.push(Shape::ReticulatedCherry {
            out: net.out_arcs(r)[0],
            middle,
            sibling,
        });
    }
    for (&r, _) in choice.0.iter() {
        if !net.is_reticulation(r) {
            return Err(CoverError::BadChoiceShape(r));
        }
    }

    // Remaining tree vertices contribute cherry shapes.
    for v in net.vertices() {
        if net.kind(v) == VertexKind::Tree && !middle_tails.contains_key(&v) {
            let out = net.out_arcs(v);
            shapes.push(Shape::Cherry {
                arcs: [out[0], out[1]],
            });
        }
    }

    // Exact-once coverage audit over all non-root arcs.
    let mut covered = vec![0u32; net.arc_count()];
    for s in &shapes {
        for a in s.arcs() {
            covered[a.index()] += 1;
        }
    }
    for a in net.arc_ids() {
        let expect = u32::from(a != net.root_arc());
        if covered[a.index()] != expect {
            return Err(CoverError::InfeasibleChoice(net.tail(a)));
        }
    }

    Ok(CherryCover { shapes })
}

impl CherryCover {
    /// Adjacency of the auxiliary digraph: shape `B` points at shape `C`
    /// when an endpoint of `B` is an internal vertex of `C`.
    pub fn aux_graph(&self, net: &PhyloNetwork) -> Vec<Vec<usize>> {
        let mut owner: BTreeMap<VertexId, usize> = BTreeMap::new();
        for (i, s) in self.shapes.iter().enumerate() {
            for v in s.internal_vertices(net) {
                owner.insert(v, i);
            }
        }
        let mut adj = vec![Vec::new(); self.shapes.len()];
        for (i, s) in self.shapes.iter().enumerate() {
            for e in s.endpoints(net) {
                if let Some(&j) = owner.get(&e) {
                    if !adj[i].contains(&j) {
                        adj[i].push(j);
                    }
                }
            }
        }
        adj
    }

    pub fn contains_reticulated_shape(&self, out: ArcId, middle: ArcId, sibling: ArcId) -> bool {
        self.shapes.iter().any(|s| {
            matches!(s, Shape::ReticulatedCherry { out: o, middle: m, sibling: b }
                if *o == out && *m == middle && *b == sibling)
        })
    }
}

/// Cycle check on the auxiliary digraph of a cover.
pub fn aux_graph_is_acyclic(net: &PhyloNetwork, cover: &CherryCover) -> bool {
    let adj = cover.aux_graph(net);
    let n = adj.len();
    let mut indeg = vec![0usize; n];
    for edges in &adj {
        for &j in edges {
            indeg[j] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut seen = 0;
    while let Some(i) = stack.pop() {
        seen += 1;
        for &j in &adj[i] {
            indeg[j] -= 1;
            if indeg[j] == 0 {
                stack.push(j);
            }
        }
    }
    seen == n
}

/// The per-trail middle options of a reticulation: its two in-arcs filtered
/// down to tree-vertex tails.
fn middle_options(net: &PhyloNetwork, r: VertexId) -> Vec<ArcId> {
    net.in_arcs(r)
        .iter()
        .copied()
        .filter(|&a| net.kind(net.tail(a)) == VertexKind::Tree)
        .collect()
}

/// Backtracks over one trail's reticulations. `emit` receives every feasible
/// assignment for the trail; returns early when `emit` returns false.
fn trail_choices(
    net: &PhyloNetwork,
    retics: &[VertexId],
    pos: usize,
    used: &mut Vec<ArcId>,
    current: &mut Vec<(VertexId, ArcId)>,
    emit: &mut dyn FnMut(&[(VertexId, ArcId)]) -> bool,
) -> bool {
    if pos == retics.len() {
        return emit(current);
    }
    let r = retics[pos];
    for m in middle_options(net, r) {
        let p_y = net.tail(m);
        let sibling = net
            .out_arcs(p_y)
            .iter()
            .copied()
            .find(|&a| a != m)
            .unwrap();
        if used.contains(&m) || used.contains(&sibling) {
            continue;
        }
        used.push(m);
        used.push(sibling);
        current.push((r, m));
        let keep_going = trail_choices(net, retics, pos + 1, used, current, emit);
        current.pop();
        used.pop();
        used.pop();
        if !keep_going {
            return false;
        }
    }
    true
}

/// Reticulations grouped by the trail containing their in-arc pair, in trail
/// order. Middle conflicts never cross trails, so choices are independent
/// per group.
fn retics_by_trail(net: &PhyloNetwork) -> Vec<Vec<VertexId>> {
    let decomposition = zigzag_decompose(net);
    decomposition
        .trails
        .iter()
        .map(|t| {
            let mut retics = Vec::new();
            for pair in t.arcs.windows(2) {
                if net.head(pair[0]) == net.head(pair[1]) {
                    retics.push(net.head(pair[0]));
                }
            }
            // A crown's wrap-around pair.
            if t.kind == TrailKind::Crown {
                let first = t.arcs[0];
                let last = *t.arcs.last().unwrap();
                if net.head(first) == net.head(last) {
                    retics.push(net.head(first));
                }
            }
            retics
        })
        .collect()
}

/// A feasible middle choice derived from the zig-zag decomposition: N-fences
/// admit exactly one alternation; M-fences and crowns take the first feasible
/// one in arc-id order.
pub fn default_middle_choice(net: &PhyloNetwork) -> Result<MiddleChoice, CoverError> {
    if zigzag_decompose(net)
        .trails
        .iter()
        .any(|t| t.kind == TrailKind::WFence)
    {
        return Err(CoverError::NotTreeBased);
    }
    let mut choice = MiddleChoice::default();
    for group in retics_by_trail(net) {
        let mut found = false;
        trail_choices(
            net,
            &group,
            0,
            &mut Vec::new(),
            &mut Vec::new(),
            &mut |assignment| {
                for &(r, m) in assignment {
                    choice.0.insert(r, m);
                }
                found = true;
                false
            },
        );
        if !found && !group.is_empty() {
            return Err(CoverError::NotTreeBased);
        }
    }
    Ok(choice)
}

/// Enumerates every feasible middle choice (hence every buildable cover),
/// up to `cap` results. Intended for tests on small networks.
pub fn enumerate_middle_choices(net: &PhyloNetwork, cap: usize) -> Vec<MiddleChoice> {
    let groups = retics_by_trail(net);
    let mut per_group: Vec<Vec<Vec<(VertexId, ArcId)>>> = Vec::new();
    for group in &groups {
        let mut options = Vec::new();
        trail_choices(
            net,
            group,
            0,
            &mut Vec::new(),
            &mut Vec::new(),
            &mut |assignment| {
                options.push(assignment.to_vec());
                true
            },
        );
        if options.is_empty() && !group.is_empty() {
            return Vec::new();
        }
        if !group.is_empty() {
            per_group.push(options);
        }
    }

    let mut results = vec![MiddleChoice::default()];
    for options in per_group {
        let mut next = Vec::new();
        for base in &results {
            for option in &options {
                if next.len() >= cap {
                    return next;
                }
                let mut choice = base.clone();
                for &(r, m) in option {
                    choice.0.insert(r, m);
                }
                next.push(choice);
            }
        }
        results = next;
    }
    results
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    // N_blob ids: rho=0, t0=1, b=2, u=3, v=4, w=5, r=6, a=7; arcs
    // 0 (rho,t0), 1 (t0,b), 2 (t0,u), 3 (u,v), 4 (u,w), 5 (v,w), 6 (v,r),
    // 7 (w,r), 8 (r,a).
    fn blob_choice() -> MiddleChoice {
        let mut c = MiddleChoice::default();
        c.0.insert(VertexId(5), ArcId(4)); // w takes (u, w)
        c.0.insert(VertexId(6), ArcId(6)); // r takes (v, r)
        c
    }

    #[test]
    fn n_blob_cover_has_three_shapes_and_cyclic_aux_graph() {
        let net = fixtures::n_blob();
        let cover = build_cherry_cover(&net, &blob_choice()).unwrap();
        assert_eq!(cover.shapes.len(), 3);
        assert!(!aux_graph_is_acyclic(&net, &cover));
    }

    #[test]
    fn n_blob_infeasible_choice_is_reported() {
        let net = fixtures::n_blob();
        // Both of v's out-arcs as middles: (v,w) for w and (v,r) for r.
        let mut c = MiddleChoice::default();
        c.0.insert(VertexId(5), ArcId(5));
        c.0.insert(VertexId(6), ArcId(6));
        assert_eq!(
            build_cherry_cover(&net, &c),
            Err(CoverError::InfeasibleChoice(VertexId(4)))
        );
    }

    #[test]
    fn middle_from_reticulation_is_rejected() {
        let net = fixtures::n_blob();
        let mut c = MiddleChoice::default();
        c.0.insert(VertexId(5), ArcId(4));
        c.0.insert(VertexId(6), ArcId(7)); // (w, r) has a reticulation tail
        assert_eq!(
            build_cherry_cover(&net, &c),
            Err(CoverError::MiddleNotFromTreeVertex(ArcId(7)))
        );
    }

    #[test]
    fn n_blob_admits_exactly_one_cover() {
        let net = fixtures::n_blob();
        let choices = enumerate_middle_choices(&net, 64);
        assert_eq!(choices.len(), 1);
        assert_eq!(choices[0], blob_choice());
        assert_eq!(default_middle_choice(&net).unwrap(), blob_choice());
    }

    #[test]
    fn grown_blob_has_an_acyclic_cover() {
        // Adding a leaf on (w, r) makes the network orchard; the cover that
        // picks (q, r) as r's middle has an acyclic auxiliary graph, the
        // other alternation stays cyclic.
        let net = fixtures::n_blob().add_leaf(ArcId(7), "z").unwrap();
        let choices = enumerate_middle_choices(&net, 64);
        assert_eq!(choices.len(), 3);
        let verdicts: Vec<bool> = choices
            .iter()
            .map(|c| aux_graph_is_acyclic(&net, &build_cherry_cover(&net, c).unwrap()))
            .collect();
        assert_eq!(verdicts.iter().filter(|&&b| b).count(), 1);
    }

    #[test]
    fn tree_cover_is_all_cherries_and_acyclic() {
        let net = fixtures::caterpillar_tree();
        let cover = build_cherry_cover(&net, &default_middle_choice(&net).unwrap()).unwrap();
        assert!(cover
            .shapes
            .iter()
            .all(|s| matches!(s, Shape::Cherry { .. })));
        assert!(aux_graph_is_acyclic(&net, &cover));
    }

    #[test]
    fn non_tree_based_networks_have_no_cover() {
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
        assert_eq!(
            default_middle_choice(&net),
            Err(CoverError::NotTreeBased)
        );
        assert_eq!(
            build_cherry_cover(&net, &MiddleChoice::default()),
            Err(CoverError::NotTreeBased)
        );
    }
}
