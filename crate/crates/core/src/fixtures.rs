//! Small hand-built networks used across test suites and benchmarks.

use crate::network::{raw_from_arcs, validate, PhyloNetwork};

/// The two-leaf, two-reticulation "funnel" network: root child `t0` carries
/// leaf `b` and the blob `u -> {v, w}`, `v -> {w, r}`, `w -> r`, `r -> a`
/// with `w` and `r` reticulations. Non-orchard; one leaf addition fixes it.
pub fn n_blob() -> PhyloNetwork {
    validate(&raw_from_arcs([
        ("rho", "t0"),
        ("t0", "b"),
        ("t0", "u"),
        ("u", "v"),
        ("u", "w"),
        ("v", "w"),
        ("v", "r"),
        ("w", "r"),
        ("r", "a"),
    ]))
    .expect("n_blob is a valid network")
}

/// Six-vertex network with a single reticulated cherry on leaves `x`, `y`.
pub fn reticulated_cherry() -> PhyloNetwork {
    validate(&raw_from_arcs([
        ("rho", "g"),
        ("g", "p"),
        ("g", "r"),
        ("p", "r"),
        ("p", "y"),
        ("r", "x"),
    ]))
    .expect("reticulated cherry is a valid network")
}

/// The smallest legal network: a root above one leaf.
pub fn single_leaf(label: &str) -> PhyloNetwork {
    validate(&raw_from_arcs([("rho", label)])).expect("single-leaf network is valid")
}

/// The cherry network on two leaves.
pub fn cherry(x: &str, y: &str) -> PhyloNetwork {
    validate(&raw_from_arcs([("rho", "p"), ("p", x), ("p", y)]))
        .expect("cherry network is valid")
}

/// A four-leaf orchard network containing both a cherry `(a, b)` and a
/// reticulated cherry `(c, d)`.
pub fn orchard_four_leaves() -> PhyloNetwork {
    validate(&raw_from_arcs([
        ("rho", "t1"),
        ("t1", "t2"),
        ("t1", "t3"),
        ("t2", "a"),
        ("t2", "b"),
        ("t3", "q"),
        ("t3", "rc"),
        ("q", "d"),
        ("q", "rc"),
        ("rc", "c"),
    ]))
    .expect("four-leaf orchard network is valid")
}

/// A small tree on three leaves.
pub fn caterpillar_tree() -> PhyloNetwork {
    validate(&raw_from_arcs([
        ("rho", "t1"),
        ("t1", "t2"),
        ("t1", "c"),
        ("t2", "a"),
        ("t2", "b"),
    ]))
    .expect("caterpillar tree is valid")
}
