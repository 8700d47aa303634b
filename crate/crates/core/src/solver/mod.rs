//! Exact computation of the orchard leaf-addition distance through its
//! labelling reformulation: the distance equals the minimum number of inrets
//! over all non-temporal labellings, so a branch and bound over horizontal
//! assignments finds it together with a certificate labelling and a concrete
//! list of leaf additions.

mod bound;
mod brute;
mod milp;
mod search;

pub use bound::{highest_reticulation, upper_bound_additions};
pub use brute::{brute_force_oracle, BruteForceResult, GuardExceeded, DEFAULT_GUARD};
pub use milp::{build_milp, MilpConstraint, MilpModel, MilpVar, Sense, VarKind};

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::classes::{is_orchard, ReducedPair};
use crate::labelling::{
    assignment_feasible, labelling_from_assignment, HorizontalAssignment, NonTemporalLabelling,
    RetChoice,
};
use crate::network::{ArcId, PhyloNetwork, VertexId};
use search::Search;

#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Wall-clock budget; the incumbent is returned with `optimal = false`
    /// when it runs out.
    pub timeout: Option<Duration>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            timeout: Some(Duration::from_secs(3600)),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SolveStats {
    pub nodes: u64,
    pub wall: Duration,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    /// Minimum number of leaf additions to reach the orchard class (exact
    /// when `optimal` holds, an upper bound otherwise).
    pub l_or: usize,
    pub assignment: HorizontalAssignment,
    pub labelling: NonTemporalLabelling,
    /// One incoming arc per inret with a fresh taxon for it.
    pub additions: Vec<(ArcId, String)>,
    pub optimal: bool,
    pub stats: SolveStats,
}

/// Branch-and-bound solve. Deterministic for fixed input ids: reticulations
/// are processed in topological order, branches try the lower-id in-arc,
/// then the other, then inret.
pub fn solve_bnb(net: &PhyloNetwork, options: &SolveOptions) -> SolveResult {
    let start = Instant::now();
    let topo_retics: Vec<VertexId> = net
        .topological_order()
        .iter()
        .copied()
        .filter(|&v| net.is_reticulation(v))
        .collect();

    if topo_retics.is_empty() {
        let assignment = HorizontalAssignment::default();
        let labelling = labelling_from_assignment(net, &assignment)
            .expect("the empty assignment of a tree is feasible");
        return SolveResult {
            l_or: 0,
            assignment,
            labelling,
            additions: Vec::new(),
            optimal: true,
            stats: SolveStats {
                nodes: 0,
                wall: start.elapsed(),
            },
        };
    }

    let (initial, initial_count) = initial_incumbent(net, &topo_retics);
    let outcome = Search::new(net, &topo_retics, initial, initial_count, options.timeout).run();

    let assignment = HorizontalAssignment {
        choices: topo_retics
            .iter()
            .copied()
            .zip(outcome.best.iter().copied())
            .collect(),
    };
    debug_assert!(assignment_feasible(net, &assignment));
    let labelling = labelling_from_assignment(net, &assignment)
        .expect("the search only keeps feasible assignments");
    let additions = plan_additions(net, &assignment);
    SolveResult {
        l_or: outcome.best_count,
        assignment,
        labelling,
        additions,
        optimal: !outcome.timed_out,
        stats: SolveStats {
            nodes: outcome.nodes,
            wall: start.elapsed(),
        },
    }
}

/// Seed incumbent mirroring the upper bound: the highest reticulation takes
/// a horizontal in-arc (whichever of its two is admissible; at most one is
/// not), every other reticulation starts as an inret.
fn initial_incumbent(net: &PhyloNetwork, topo_retics: &[VertexId]) -> (Vec<RetChoice>, usize) {
    let highest = highest_reticulation(net).expect("caller checked r > 0");
    let mut choices: BTreeMap<VertexId, RetChoice> = topo_retics
        .iter()
        .map(|&r| (r, RetChoice::Inret))
        .collect();
    choices.insert(highest, RetChoice::FirstInArc);
    let mut assignment = HorizontalAssignment { choices };
    if !assignment_feasible(net, &assignment) {
        assignment
            .choices
            .insert(highest, RetChoice::SecondInArc);
        debug_assert!(assignment_feasible(net, &assignment));
    }
    let count = assignment.inret_count(net);
    let vec = topo_retics
        .iter()
        .map(|r| assignment.choices[r])
        .collect();
    (vec, count)
}

/// One leaf addition per inret, on its lower-id incoming arc, with fresh
/// taxa that avoid the existing labels.
fn plan_additions(net: &PhyloNetwork, assignment: &HorizontalAssignment) -> Vec<(ArcId, String)> {
    let mut used: Vec<String> = net
        .leaves()
        .map(|l| net.label(l).unwrap().to_string())
        .collect();
    let mut next = 1usize;
    let mut fresh = || loop {
        let candidate = format!("z{next}");
        next += 1;
        if !used.contains(&candidate) {
            used.push(candidate.clone());
            return candidate;
        }
    };
    assignment
        .inrets(net)
        .into_iter()
        .map(|r| (net.in_arcs(r)[0], fresh()))
        .collect()
}

#[derive(Debug, Clone, Error)]
#[error("certificate additions did not produce an orchard network")]
pub struct CertificateFailure;

/// Applies the result's leaf additions and independently re-verifies the
/// outcome by cherry picking. Returns the grown network with its reduction
/// sequence as proof.
pub fn extract_additions(
    net: &PhyloNetwork,
    result: &SolveResult,
) -> Result<(PhyloNetwork, Vec<ReducedPair>), CertificateFailure> {
    let mut grown = net.clone();
    for (arc, label) in &result.additions {
        grown = grown.add_leaf(*arc, label).map_err(|_| CertificateFailure)?;
    }
    let (orchard, sequence) = is_orchard(&grown);
    if !orchard {
        return Err(CertificateFailure);
    }
    Ok((grown, sequence))
}
