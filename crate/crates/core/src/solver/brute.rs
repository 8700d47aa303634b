//! Independent brute-force oracle for the orchard distance: leaf additions
//! can be restricted to reticulation arcs, and at most `r(N) - 1` of them
//! are ever needed, so the smallest working subset of reticulation arcs is
//! found by plain enumeration in increasing size.

use thiserror::Error;

use crate::classes::is_orchard;
use crate::network::{ArcId, PhyloNetwork};

#[derive(Debug, Clone, Copy, Error, PartialEq, Eq)]
#[error("network has {found} reticulations, oracle guard allows {guard}")]
pub struct GuardExceeded {
    pub found: usize,
    pub guard: usize,
}

#[derive(Debug, Clone)]
pub struct BruteForceResult {
    pub l_or: usize,
    /// A smallest set of reticulation arcs whose leaf additions make the
    /// network orchard; empty when it already is.
    pub additions: Vec<ArcId>,
}

pub const DEFAULT_GUARD: usize = 10;

/// Exhaustive minimum over subsets of reticulation arcs, each arc receiving
/// one fresh leaf. `k_max` caps the subset size on top of the `r(N) - 1`
/// bound; the reticulation-count guard keeps runtimes sane. Returns `None`
/// only when `k_max` cuts the search off below `r(N) - 1`.
pub fn brute_force_oracle(
    net: &PhyloNetwork,
    k_max: usize,
    guard: usize,
) -> Result<Option<BruteForceResult>, GuardExceeded> {
    let r = net.reticulation_count();
    if r > guard {
        return Err(GuardExceeded { found: r, guard });
    }
    let arcs: Vec<ArcId> = net.reticulation_arcs().collect();
    let cap = k_max.min(r.saturating_sub(1));

    for k in 0..=cap {
        let mut subset = Vec::with_capacity(k);
        if let Some(found) = search_subsets(net, &arcs, 0, k, &mut subset) {
            return Ok(Some(BruteForceResult {
                l_or: k,
                additions: found,
            }));
        }
    }
    debug_assert!(cap < r.saturating_sub(1), "one arc per non-highest reticulation always works");
    Ok(None)
}

fn search_subsets(
    net: &PhyloNetwork,
    arcs: &[ArcId],
    start: usize,
    remaining: usize,
    subset: &mut Vec<ArcId>,
) -> Option<Vec<ArcId>> {
    if remaining == 0 {
        let mut grown = net.clone();
        for (i, &arc) in subset.iter().enumerate() {
            grown = grown
                .add_leaf(arc, &format!("__oracle{i}"))
                .expect("adding a fresh leaf to an existing arc succeeds");
        }
        return is_orchard(&grown).0.then(|| subset.clone());
    }
    for i in start..=arcs.len().saturating_sub(remaining) {
        subset.push(arcs[i]);
        if let Some(found) = search_subsets(net, arcs, i + 1, remaining - 1, subset) {
            return Some(found);
        }
        subset.pop();
    }
    None
}
