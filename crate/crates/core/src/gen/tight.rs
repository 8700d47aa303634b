//! The two-leaf family on which the upper bound `r(N) - 1` is attained.
//!
//! For `k >= 2` the construction chains k funnel blocks: a path of tree
//! vertices `c_1 .. c_k` and a path of reticulations `R_1 .. R_k` ending in
//! leaf `a`, with `c_i` feeding `R_i`, the last tree vertex closing the
//! funnel back onto `R_1`, and leaf `b` beside the entry. The top
//! reticulation can only be reduced once everything below it is gone, and
//! each reticulation below needs a leaf of its own on an incoming arc, so
//! exactly `k - 1` additions are required.

use crate::network::{raw_from_arcs, validate, PhyloNetwork};

/// Builds the k-reticulation member of the family; `k = 2` is the canonical
/// two-blob funnel network.
pub fn tight_family(k: usize) -> PhyloNetwork {
    assert!(k >= 1, "the family starts at one reticulation");
    if k == 1 {
        // Smallest member: a single reticulated cherry on two leaves.
        return validate(&raw_from_arcs([
            ("rho", "t0"),
            ("t0", "c1"),
            ("t0", "h1"),
            ("c1", "h1"),
            ("c1", "b"),
            ("h1", "a"),
        ]))
        .expect("one-reticulation member is valid");
    }

    let c = |i: usize| format!("c{i}");
    let h = |i: usize| format!("h{i}");
    let mut arcs: Vec<(String, String)> = vec![
        ("rho".into(), "t0".into()),
        ("t0".into(), "b".into()),
        ("t0".into(), c(1)),
    ];
    for i in 1..k {
        arcs.push((c(i), c(i + 1)));
        arcs.push((c(i), h(i)));
    }
    arcs.push((c(k), h(1)));
    arcs.push((c(k), h(k)));
    for i in 1..k {
        arcs.push((h(i), h(i + 1)));
    }
    arcs.push((h(k), "a".into()));

    let arc_refs: Vec<(&str, &str)> = arcs.iter().map(|(t, u)| (t.as_str(), u.as_str())).collect();
    validate(&raw_from_arcs(arc_refs)).expect("family member is valid")
}
