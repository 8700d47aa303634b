//! Cherry picking: the orchard decision procedure. A network is orchard when
//! repeatedly reducing cherries and reticulated cherries ends at a single
//! leaf; the order of reductions does not affect the outcome.

use thiserror::Error;

use crate::network::{PhyloNetwork, VertexKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionKind {
    Cherry,
    ReticulatedCherry,
}

/// A reduced pair `(x, y)`: for a cherry, the leaf `x` was deleted; for a
/// reticulated cherry, the arc from `y`'s parent to `x`'s parent was deleted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedPair {
    pub x: String,
    pub y: String,
    pub kind: ReductionKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("no cherry or reticulated cherry to reduce")]
pub struct NoReduciblePair;

/// Reduces one cherry or reticulated cherry, choosing the lexicographically
/// smallest reducible `(x, y)` label pair for determinism.
pub fn reduce_once(net: &PhyloNetwork) -> Result<(PhyloNetwork, ReducedPair), NoReduciblePair> {
    let mut best: Option<ReducedPair> = None;
    let mut consider = |cand: ReducedPair| {
        if best
            .as_ref()
            .map(|b| (cand.x.as_str(), cand.y.as_str()) < (b.x.as_str(), b.y.as_str()))
            .unwrap_or(true)
        {
            best = Some(cand);
        }
    };

    for x in net.leaves() {
        let lx = net.label(x).unwrap().to_string();
        let p = net.parents(x).next().unwrap();
        match net.kind(p) {
            VertexKind::Tree => {
                for y in net.children(p) {
                    if y != x && net.is_leaf(y) {
                        consider(ReducedPair {
                            x: lx.clone(),
                            y: net.label(y).unwrap().to_string(),
                            kind: ReductionKind::Cherry,
                        });
                    }
                }
            }
            VertexKind::Reticulation => {
                for q in net.parents(p) {
                    if net.kind(q) == VertexKind::Tree {
                        for y in net.children(q) {
                            if y != p && net.is_leaf(y) {
                                consider(ReducedPair {
                                    x: lx.clone(),
                                    y: net.label(y).unwrap().to_string(),
                                    kind: ReductionKind::ReticulatedCherry,
                                });
                            }
                        }
                    }
                }
            }
            _ => {}
        }
    }

    let pair = best.ok_or(NoReduciblePair)?;
    let reduced = match pair.kind {
        ReductionKind::Cherry => net.delete_leaf(&pair.x),
        ReductionKind::ReticulatedCherry => {
            let x = net.leaf_by_label(&pair.x).unwrap();
            let y = net.leaf_by_label(&pair.y).unwrap();
            let px = net.parents(x).next().unwrap();
            let py = net.parents(y).next().unwrap();
            let arc = net.find_arc(py, px).unwrap();
            net.delete_reticulation_arc(arc)
        }
    }
    .expect("reducing a cherry keeps the graph a network");
    Ok((reduced, pair))
}

/// Runs cherry picking to a fixpoint. Returns whether a single-leaf network
/// remains together with the sequence of reduced pairs.
pub fn is_orchard(net: &PhyloNetwork) -> (bool, Vec<ReducedPair>) {
    let mut cur = net.clone();
    let mut seq = Vec::new();
    loop {
        if cur.vertex_count() == 2 {
            return (true, seq);
        }
        match reduce_once(&cur) {
            Ok((next, pair)) => {
                cur = next;
                seq.push(pair);
            }
            Err(NoReduciblePair) => return (false, seq),
        }
    }
}
