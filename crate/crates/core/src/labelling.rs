//! Non-temporal vertex labellings and horizontal-arc assignments.
//!
//! A labelling `t` is non-temporal when labels weakly increase along every
//! arc with equality allowed only into reticulations, every internal vertex
//! has a strictly larger child, and each reticulation has at most one
//! incoming arc with an equal label. Arcs with equal endpoint labels are
//! horizontal; a reticulation with only vertical in-arcs is an inret. The
//! orchard distance equals the minimum inret count over all labellings.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::network::{ArcId, PhyloNetwork, VertexId};

/// Integer vertex labels. Only order and equality matter, so integer levels
/// lose no generality against real-valued labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonTemporalLabelling {
    pub labels: BTreeMap<VertexId, i64>,
}

impl NonTemporalLabelling {
    pub fn label(&self, v: VertexId) -> Option<i64> {
        self.labels.get(&v).copied()
    }

    /// Arcs whose endpoints carry equal labels.
    pub fn horizontal_arcs(&self, net: &PhyloNetwork) -> Vec<ArcId> {
        net.arc_ids()
            .filter(|&a| {
                let (u, v) = net.arc(a);
                self.labels.get(&u) == self.labels.get(&v)
            })
            .collect()
    }
}

/// Outcome of checking a labelling against the non-temporal conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabellingCheck {
    pub nontemporal: bool,
    /// Every reticulation has exactly one incoming horizontal arc.
    pub hgt_consistent: bool,
    /// Reticulations with only vertical incoming arcs.
    pub inrets: Vec<VertexId>,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LabellingError {
    #[error("labelling does not cover vertex {0}")]
    PartialLabelling(VertexId),
}

/// Checks the three non-temporal conditions, HGT consistency, and reports
/// the inret set.
pub fn validate_labelling(
    net: &PhyloNetwork,
    t: &NonTemporalLabelling,
) -> Result<LabellingCheck, LabellingError> {
    for v in net.vertices() {
        if !t.labels.contains_key(&v) {
            return Err(LabellingError::PartialLabelling(v));
        }
    }
    let label = |v: VertexId| t.labels[&v];

    let mut nontemporal = true;
    // Weak increase along arcs; equality only into reticulations.
    for a in net.arc_ids() {
        let (u, v) = net.arc(a);
        if label(u) > label(v) || (label(u) == label(v) && !net.is_reticulation(v)) {
            nontemporal = false;
        }
    }
    // Every internal vertex has a strictly larger child.
    for v in net.vertices() {
        if net.is_internal(v) && !net.children(v).any(|c| label(c) > label(v)) {
            nontemporal = false;
        }
    }
    // At most one equal incoming arc per reticulation.
    let mut inrets = Vec::new();
    let mut hgt_consistent = true;
    for r in net.reticulations() {
        let equal_in = net.parents(r).filter(|&p| label(p) == label(r)).count();
        if equal_in > 1 {
            nontemporal = false;
        }
        match equal_in {
            0 => inrets.push(r),
            1 => {}
            _ => hgt_consistent = false,
        }
    }
    if !inrets.is_empty() {
        hgt_consistent = false;
    }
    Ok(LabellingCheck {
        nontemporal,
        hgt_consistent: nontemporal && hgt_consistent,
        inrets,
    })
}

/// The decision for one reticulation: which incoming arc is horizontal, or
/// none (the reticulation is an inret). In-arcs are ordered by arc id.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RetChoice {
    FirstInArc,
    SecondInArc,
    Inret,
}

/// A horizontal-arc assignment: one choice per reticulation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HorizontalAssignment {
    pub choices: BTreeMap<VertexId, RetChoice>,
}

impl HorizontalAssignment {
    pub fn all_inret(net: &PhyloNetwork) -> Self {
        HorizontalAssignment {
            choices: net.reticulations().map(|r| (r, RetChoice::Inret)).collect(),
        }
    }

    /// The chosen horizontal in-arc of `r`, if any.
    pub fn horizontal_in_arc(&self, net: &PhyloNetwork, r: VertexId) -> Option<ArcId> {
        match self.choices.get(&r)? {
            RetChoice::FirstInArc => Some(net.in_arcs(r)[0]),
            RetChoice::SecondInArc => Some(net.in_arcs(r)[1]),
            RetChoice::Inret => None,
        }
    }

    pub fn horizontal_arcs(&self, net: &PhyloNetwork) -> Vec<ArcId> {
        net.reticulations()
            .filter_map(|r| self.horizontal_in_arc(net, r))
            .collect()
    }

    pub fn inrets(&self, net: &PhyloNetwork) -> Vec<VertexId> {
        net.reticulations()
            .filter(|&r| self.horizontal_in_arc(net, r).is_none())
            .collect()
    }

    pub fn inret_count(&self, net: &PhyloNetwork) -> usize {
        self.inrets(net).len()
    }

    /// Extracts the assignment the labelling induces: per reticulation its
    /// equal-labelled in-arc, or inret.
    pub fn from_labelling(net: &PhyloNetwork, t: &NonTemporalLabelling) -> Self {
        let mut choices = BTreeMap::new();
        for r in net.reticulations() {
            let ins = net.in_arcs(r);
            let equal = |a: ArcId| t.labels[&net.tail(a)] == t.labels[&r];
            let choice = if equal(ins[0]) {
                RetChoice::FirstInArc
            } else if equal(ins[1]) {
                RetChoice::SecondInArc
            } else {
                RetChoice::Inret
            };
            choices.insert(r, choice);
        }
        HorizontalAssignment { choices }
    }
}

/// Union of the contracted components induced by the horizontal arcs.
fn components(net: &PhyloNetwork, assign: &HorizontalAssignment) -> Vec<usize> {
    let n = net.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, v: usize) -> usize {
        if parent[v] != v {
            let root = find(parent, parent[v]);
            parent[v] = root;
        }
        parent[v]
    }
    for a in assign.horizontal_arcs(net) {
        let (u, v) = net.arc(a);
        let (ru, rv) = (find(&mut parent, u.index()), find(&mut parent, v.index()));
        if ru != rv {
            parent[ru] = rv;
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

/// Whether an assignment admits a non-temporal labelling: every internal
/// vertex keeps a non-horizontal out-arc, and the quotient digraph obtained
/// by contracting the horizontal arcs (all remaining arcs strict) is acyclic
/// with no self-loops.
pub fn assignment_feasible(net: &PhyloNetwork, assign: &HorizontalAssignment) -> bool {
    let horizontal: Vec<bool> = {
        let mut h = vec![false; net.arc_count()];
        for a in assign.horizontal_arcs(net) {
            h[a.index()] = true;
        }
        h
    };
    for v in net.vertices() {
        if net.is_internal(v)
            && net
                .out_arcs(v)
                .iter()
                .all(|&a| horizontal[a.index()])
        {
            return false;
        }
    }

    let comp = components(net, assign);
    // Self-loop: a vertical arc inside a contracted component.
    for a in net.arc_ids() {
        if !horizontal[a.index()] {
            let (u, v) = net.arc(a);
            if comp[u.index()] == comp[v.index()] {
                return false;
            }
        }
    }
    quotient_levels(net, &comp, &horizontal).is_some()
}

/// Longest-path levels of the quotient DAG; `None` when it has a cycle.
fn quotient_levels(
    net: &PhyloNetwork,
    comp: &[usize],
    horizontal: &[bool],
) -> Option<Vec<i64>> {
    let n = net.vertex_count();
    let mut indeg = vec![0usize; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for a in net.arc_ids() {
        if !horizontal[a.index()] {
            let (u, v) = net.arc(a);
            let (cu, cv) = (comp[u.index()], comp[v.index()]);
            if cu != cv {
                edges.push((cu, cv));
                indeg[cv] += 1;
            }
        }
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &edges {
        adj[u].push(v);
    }
    let comps: Vec<usize> = (0..n).filter(|&v| comp[v] == v).collect();
    let mut level = vec![0i64; n];
    let mut stack: Vec<usize> = comps.iter().copied().filter(|&c| indeg[c] == 0).collect();
    let mut seen = 0;
    while let Some(c) = stack.pop() {
        seen += 1;
        for &d in &adj[c] {
            level[d] = level[d].max(level[c] + 1);
            indeg[d] -= 1;
            if indeg[d] == 0 {
                stack.push(d);
            }
        }
    }
    (seen == comps.len()).then_some(level)
}

#[derive(Debug, Clone, Copy, Error, PartialEq, Eq)]
#[error("assignment admits no non-temporal labelling")]
pub struct InfeasibleAssignment;

/// Realizes a feasible assignment as a labelling: each vertex gets the
/// longest-path level of its component in the quotient DAG. The labelling's
/// horizontal arcs are exactly the assigned ones and its inret set equals
/// the assignment's.
pub fn labelling_from_assignment(
    net: &PhyloNetwork,
    assign: &HorizontalAssignment,
) -> Result<NonTemporalLabelling, InfeasibleAssignment> {
    if !assignment_feasible(net, assign) {
        return Err(InfeasibleAssignment);
    }
    let mut horizontal = vec![false; net.arc_count()];
    for a in assign.horizontal_arcs(net) {
        horizontal[a.index()] = true;
    }
    let comp = components(net, assign);
    let level = quotient_levels(net, &comp, &horizontal).ok_or(InfeasibleAssignment)?;
    let labels = net
        .vertices()
        .map(|v| (v, level[comp[v.index()]]))
        .collect();
    Ok(NonTemporalLabelling { labels })
}
