//! The network data model: rooted binary phylogenetic networks as immutable,
//! validated DAGs, plus the structural edit operations (cleanup, leaf
//! addition and deletion, reticulation-arc deletion) everything else builds on.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Opaque vertex identifier, assigned densely at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

/// Stable arc identifier, the index into the arc list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for ArcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl ArcId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Structural role of a vertex, determined by its in/out degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    /// Indegree 0, outdegree 1.
    Root,
    /// Indegree 1, outdegree 2.
    Tree,
    /// Indegree 2, outdegree 1.
    Reticulation,
    /// Indegree 1, outdegree 0, labelled.
    Leaf,
}

/// Classification of an arc by its endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcKind {
    /// The tail is the root.
    RootArc,
    /// The head is not a reticulation (and the tail is not the root).
    TreeArc,
    /// The head is a reticulation.
    ReticulationArc,
}

/// Violations reported by [`validate`], in the order they are checked.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ValidateError {
    #[error("graph has no indegree-0 vertex")]
    NoRoot,
    #[error("graph has more than one indegree-0 vertex")]
    MultipleRoots,
    #[error("vertex {vertex} has illegal degrees (in {indeg}, out {outdeg})")]
    BadDegree {
        vertex: String,
        indeg: usize,
        outdeg: usize,
    },
    #[error("duplicate leaf label {label:?}")]
    DuplicateLabel { label: String },
    #[error("leaf vertex without a label")]
    UnlabelledLeaf,
    #[error("parallel arcs {tail} -> {head}")]
    ParallelArcs { tail: String, head: String },
    #[error("graph contains a directed cycle")]
    NotADag,
}

/// Errors from the edit operations on validated networks.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EditError {
    #[error("unknown arc id {0}")]
    UnknownArc(ArcId),
    #[error("label {0:?} is already in use")]
    LabelClash(String),
    #[error("{0:?} is not a leaf of the network")]
    NotALeaf(String),
    #[error("arc {0} is not a reticulation arc")]
    NotAReticulationArc(ArcId),
    #[error("edit left an invalid graph: {0}")]
    Invalid(#[from] ValidateError),
}

/// A raw labelled digraph under construction. May contain parallel arcs,
/// suppressible vertices, even cycles; [`validate`] decides whether it is a
/// network. Vertex names of outdegree-0 vertices double as taxon labels.
#[derive(Debug, Clone, Default)]
pub struct RawGraph {
    names: Vec<String>,
    arcs: Vec<(usize, usize)>,
    by_name: HashMap<String, usize>,
}

impl RawGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a fresh vertex, even if the name is already present.
    pub fn add_vertex(&mut self, name: impl Into<String>) -> usize {
        let name = name.into();
        let idx = self.names.len();
        self.by_name.entry(name.clone()).or_insert(idx);
        self.names.push(name);
        idx
    }

    /// Returns the vertex with this name, creating it if needed. First
    /// occurrence wins when names repeat via [`RawGraph::add_vertex`].
    pub fn intern(&mut self, name: &str) -> usize {
        match self.by_name.get(name) {
            Some(&idx) => idx,
            None => self.add_vertex(name),
        }
    }

    pub fn add_arc(&mut self, tail: usize, head: usize) {
        self.arcs.push((tail, head));
    }

    /// Convenience for tests and fixtures: arcs given by vertex name.
    pub fn add_named_arc(&mut self, tail: &str, head: &str) {
        let t = self.intern(tail);
        let h = self.intern(head);
        self.add_arc(t, h);
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    fn display_name(&self, idx: usize) -> String {
        if self.names[idx].is_empty() {
            format!("v{idx}")
        } else {
            self.names[idx].clone()
        }
    }
}

/// Builds a raw graph from named arcs, for fixtures and tests.
pub fn raw_from_arcs<'a>(arcs: impl IntoIterator<Item = (&'a str, &'a str)>) -> RawGraph {
    let mut g = RawGraph::new();
    for (t, h) in arcs {
        g.add_named_arc(t, h);
    }
    g
}

/// An immutable, validated binary phylogenetic network.
///
/// Construction goes through [`validate`]; every edit returns a new value and
/// leaves the original untouched, so networks can be shared freely across
/// threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhyloNetwork {
    arcs: Vec<(VertexId, VertexId)>,
    out_arcs: Vec<Vec<ArcId>>,
    in_arcs: Vec<Vec<ArcId>>,
    kinds: Vec<VertexKind>,
    labels: Vec<Option<String>>,
    root: VertexId,
    topo: Vec<VertexId>,
}

/// Checks every network invariant on a raw digraph and returns the validated
/// network, or the first violated invariant.
pub fn validate(raw: &RawGraph) -> Result<PhyloNetwork, ValidateError> {
    let n = raw.vertex_count();
    let mut indeg = vec![0usize; n];
    let mut outdeg = vec![0usize; n];
    for &(t, h) in &raw.arcs {
        outdeg[t] += 1;
        indeg[h] += 1;
    }

    let roots: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    match roots.len() {
        0 => return Err(ValidateError::NoRoot),
        1 => {}
        _ => return Err(ValidateError::MultipleRoots),
    }
    let root = roots[0];

    let mut seen = HashMap::new();
    for &(t, h) in &raw.arcs {
        if seen.insert((t, h), ()).is_some() {
            return Err(ValidateError::ParallelArcs {
                tail: raw.display_name(t),
                head: raw.display_name(h),
            });
        }
    }

    // Acyclicity before degrees: a cyclic graph is reported as such even
    // when it also has degree violations.
    let mut out_arcs = vec![Vec::new(); n];
    let mut in_arcs = vec![Vec::new(); n];
    for (i, &(t, h)) in raw.arcs.iter().enumerate() {
        out_arcs[t].push(ArcId(i as u32));
        in_arcs[h].push(ArcId(i as u32));
    }
    let arcs: Vec<(VertexId, VertexId)> = raw
        .arcs
        .iter()
        .map(|&(t, h)| (VertexId(t as u32), VertexId(h as u32)))
        .collect();
    let topo = topological_order(n, &arcs, &in_arcs).ok_or(ValidateError::NotADag)?;

    let mut kinds = vec![VertexKind::Root; n];
    for v in 0..n {
        kinds[v] = match (indeg[v], outdeg[v]) {
            (0, 1) => VertexKind::Root,
            (1, 2) => VertexKind::Tree,
            (2, 1) => VertexKind::Reticulation,
            (1, 0) => VertexKind::Leaf,
            (i, o) => {
                return Err(ValidateError::BadDegree {
                    vertex: raw.display_name(v),
                    indeg: i,
                    outdeg: o,
                })
            }
        };
    }

    let mut labels: Vec<Option<String>> = vec![None; n];
    let mut used = HashMap::new();
    for v in 0..n {
        if kinds[v] == VertexKind::Leaf {
            let label = raw.names[v].clone();
            if label.is_empty() {
                return Err(ValidateError::UnlabelledLeaf);
            }
            if used.insert(label.clone(), ()).is_some() {
                return Err(ValidateError::DuplicateLabel { label });
            }
            labels[v] = Some(label);
        }
    }

    Ok(PhyloNetwork {
        arcs,
        out_arcs,
        in_arcs,
        kinds,
        labels,
        root: VertexId(root as u32),
        topo,
    })
}

/// Smallest-id-first topological order; `None` if the digraph has a cycle.
fn topological_order(
    n: usize,
    arcs: &[(VertexId, VertexId)],
    in_arcs: &[Vec<ArcId>],
) -> Option<Vec<VertexId>> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    let mut remaining: Vec<usize> = in_arcs.iter().map(Vec::len).collect();
    let mut heap: BinaryHeap<Reverse<u32>> = (0..n)
        .filter(|&v| remaining[v] == 0)
        .map(|v| Reverse(v as u32))
        .collect();
    let mut out_adj = vec![Vec::new(); n];
    for &(t, h) in arcs {
        out_adj[t.index()].push(h);
    }
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(v)) = heap.pop() {
        order.push(VertexId(v));
        for &h in &out_adj[v as usize] {
            remaining[h.index()] -= 1;
            if remaining[h.index()] == 0 {
                heap.push(Reverse(h.0));
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Applies the cleanup rewriting until fixpoint: suppress indegree-1
/// outdegree-1 vertices and replace parallel arcs by single arcs. The result
/// is independent of the order reductions are applied in.
pub fn clean_up(raw: &RawGraph) -> RawGraph {
    let n = raw.vertex_count();
    let mut alive = vec![true; n];
    // Arcs as a mutable list; None marks deleted.
    let mut arcs: Vec<Option<(usize, usize)>> = raw.arcs.iter().copied().map(Some).collect();

    loop {
        // Merge parallel arcs (keep the earliest of each group).
        let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
        let mut changed = false;
        for slot in arcs.iter_mut() {
            if let Some(a) = *slot {
                if seen.insert(a, ()).is_some() {
                    *slot = None;
                    changed = true;
                }
            }
        }

        // Suppress one indegree-1 outdegree-1 vertex, if any.
        let mut indeg = vec![0usize; n];
        let mut outdeg = vec![0usize; n];
        for a in arcs.iter().flatten() {
            outdeg[a.0] += 1;
            indeg[a.1] += 1;
        }
        let target = (0..n).find(|&v| {
            alive[v]
                && indeg[v] == 1
                && outdeg[v] == 1
                // Self-looped vertices are left for validation to reject.
                && !arcs.iter().flatten().any(|&(t, h)| t == v && h == v)
        });
        if let Some(v) = target {
            let parent = arcs
                .iter()
                .flatten()
                .find(|&&(_, h)| h == v)
                .map(|&(t, _)| t)
                .unwrap();
            let child = arcs
                .iter()
                .flatten()
                .find(|&&(t, _)| t == v)
                .map(|&(_, h)| h)
                .unwrap();
            for slot in arcs.iter_mut() {
                if matches!(*slot, Some((t, h)) if t == v || h == v) {
                    *slot = None;
                }
            }
            arcs.push(Some((parent, child)));
            alive[v] = false;
            changed = true;
        }

        if !changed {
            break;
        }
    }

    // Rebuild with dead vertices dropped.
    let mut out = RawGraph::new();
    let mut map = vec![usize::MAX; n];
    for v in 0..n {
        if alive[v] {
            map[v] = out.add_vertex(raw.names[v].clone());
        }
    }
    for a in arcs.iter().flatten() {
        out.add_arc(map[a.0], map[a.1]);
    }
    out
}

impl PhyloNetwork {
    pub fn vertex_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.kinds.len()).map(|v| VertexId(v as u32))
    }

    pub fn arc_ids(&self) -> impl Iterator<Item = ArcId> + '_ {
        (0..self.arcs.len()).map(|a| ArcId(a as u32))
    }

    pub fn arc(&self, a: ArcId) -> (VertexId, VertexId) {
        self.arcs[a.index()]
    }

    pub fn tail(&self, a: ArcId) -> VertexId {
        self.arcs[a.index()].0
    }

    pub fn head(&self, a: ArcId) -> VertexId {
        self.arcs[a.index()].1
    }

    pub fn kind(&self, v: VertexId) -> VertexKind {
        self.kinds[v.index()]
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.kinds[v.index()] == VertexKind::Leaf
    }

    pub fn is_reticulation(&self, v: VertexId) -> bool {
        self.kinds[v.index()] == VertexKind::Reticulation
    }

    /// Tree vertices and reticulations; excludes the root and the leaves.
    pub fn is_internal(&self, v: VertexId) -> bool {
        matches!(
            self.kinds[v.index()],
            VertexKind::Tree | VertexKind::Reticulation
        )
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    /// The unique arc leaving the root.
    pub fn root_arc(&self) -> ArcId {
        self.out_arcs[self.root.index()][0]
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels[v.index()].as_deref()
    }

    pub fn leaf_by_label(&self, label: &str) -> Option<VertexId> {
        self.vertices()
            .find(|&v| self.labels[v.index()].as_deref() == Some(label))
    }

    pub fn leaves(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(|&v| self.is_leaf(v))
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves().count()
    }

    pub fn reticulations(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(|&v| self.is_reticulation(v))
    }

    pub fn reticulation_count(&self) -> usize {
        self.reticulations().count()
    }

    pub fn out_arcs(&self, v: VertexId) -> &[ArcId] {
        &self.out_arcs[v.index()]
    }

    pub fn in_arcs(&self, v: VertexId) -> &[ArcId] {
        &self.in_arcs[v.index()]
    }

    pub fn children(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.out_arcs[v.index()].iter().map(|&a| self.head(a))
    }

    pub fn parents(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.in_arcs[v.index()].iter().map(|&a| self.tail(a))
    }

    pub fn arc_kind(&self, a: ArcId) -> ArcKind {
        let (t, h) = self.arc(a);
        if self.is_reticulation(h) {
            ArcKind::ReticulationArc
        } else if t == self.root {
            ArcKind::RootArc
        } else {
            ArcKind::TreeArc
        }
    }

    pub fn is_reticulation_arc(&self, a: ArcId) -> bool {
        self.is_reticulation(self.head(a))
    }

    /// Arcs whose head is a reticulation, ascending by id.
    pub fn reticulation_arcs(&self) -> impl Iterator<Item = ArcId> + '_ {
        self.arc_ids().filter(|&a| self.is_reticulation_arc(a))
    }

    pub fn find_arc(&self, tail: VertexId, head: VertexId) -> Option<ArcId> {
        self.out_arcs[tail.index()]
            .iter()
            .copied()
            .find(|&a| self.head(a) == head)
    }

    /// Smallest-id-first topological order, fixed at construction.
    pub fn topological_order(&self) -> &[VertexId] {
        &self.topo
    }

    /// Converts back to a raw graph. Leaves keep their labels as names;
    /// other vertices get positional names.
    pub fn to_raw(&self) -> RawGraph {
        let mut raw = RawGraph::new();
        for v in self.vertices() {
            match &self.labels[v.index()] {
                Some(l) => raw.add_vertex(l.clone()),
                None => raw.add_vertex(format!("_{}", v.0)),
            };
        }
        for &(t, h) in &self.arcs {
            raw.add_arc(t.index(), h.index());
        }
        raw
    }

    /// Returns `N + (e, x)`: subdivides the arc `e = uv` by a fresh vertex
    /// `w` and hangs a new leaf labelled `label` from `w`. Vertex and arc
    /// ids of the original network are preserved; `e`'s slot becomes `uw`.
    pub fn add_leaf(&self, arc: ArcId, label: &str) -> Result<PhyloNetwork, EditError> {
        if arc.index() >= self.arcs.len() {
            return Err(EditError::UnknownArc(arc));
        }
        if self.leaf_by_label(label).is_some() {
            return Err(EditError::LabelClash(label.to_string()));
        }
        let n = self.vertex_count() as u32;
        let (u, v) = self.arc(arc);
        let w = VertexId(n);
        let x = VertexId(n + 1);
        let mut arcs = self.arcs.clone();
        arcs[arc.index()] = (u, w);
        arcs.push((w, v));
        arcs.push((w, x));
        let mut labels = self.labels.clone();
        labels.push(None);
        labels.push(Some(label.to_string()));
        PhyloNetwork::from_parts(arcs, labels).map_err(EditError::Invalid)
    }

    /// Deletes the leaf with this label and cleans up.
    pub fn delete_leaf(&self, label: &str) -> Result<PhyloNetwork, EditError> {
        let leaf = self
            .leaf_by_label(label)
            .ok_or_else(|| EditError::NotALeaf(label.to_string()))?;
        let raw = self.to_raw();
        let mut pruned = RawGraph::new();
        let mut map = vec![usize::MAX; raw.vertex_count()];
        for v in 0..raw.vertex_count() {
            if v != leaf.index() {
                map[v] = pruned.add_vertex(raw.name(v).to_string());
            }
        }
        for &(t, h) in raw.arcs() {
            if t != leaf.index() && h != leaf.index() {
                pruned.add_arc(map[t], map[h]);
            }
        }
        validate(&clean_up(&pruned)).map_err(EditError::Invalid)
    }

    /// Deletes a reticulation arc and cleans up; per the degree rules the
    /// result is a network again.
    pub fn delete_reticulation_arc(&self, arc: ArcId) -> Result<PhyloNetwork, EditError> {
        if arc.index() >= self.arcs.len() {
            return Err(EditError::UnknownArc(arc));
        }
        if !self.is_reticulation_arc(arc) {
            return Err(EditError::NotAReticulationArc(arc));
        }
        let raw = self.to_raw();
        let mut pruned = RawGraph::new();
        for v in 0..raw.vertex_count() {
            pruned.add_vertex(raw.name(v).to_string());
        }
        for (i, &(t, h)) in raw.arcs().iter().enumerate() {
            if i != arc.index() {
                pruned.add_arc(t, h);
            }
        }
        validate(&clean_up(&pruned)).map_err(EditError::Invalid)
    }

    /// Internal constructor from id-based parts; used by edits whose inputs
    /// are already validated networks.
    fn from_parts(
        arcs: Vec<(VertexId, VertexId)>,
        labels: Vec<Option<String>>,
    ) -> Result<PhyloNetwork, ValidateError> {
        let mut raw = RawGraph::new();
        for (i, l) in labels.iter().enumerate() {
            match l {
                Some(l) => raw.add_vertex(l.clone()),
                None => raw.add_vertex(format!("_{i}")),
            };
        }
        for &(t, h) in &arcs {
            raw.add_arc(t.index(), h.index());
        }
        validate(&raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::iso::is_isomorphic;

    #[test]
    fn validates_reticulated_cherry() {
        let net = fixtures::reticulated_cherry();
        assert_eq!(net.vertex_count(), 6);
        assert_eq!(net.reticulation_count(), 1);
        assert_eq!(net.leaf_count(), 2);
        assert_eq!(
            net.arc_count(),
            net.vertex_count() - 1 + net.reticulation_count()
        );
    }

    #[test]
    fn validates_single_leaf() {
        let net = fixtures::single_leaf("x");
        assert_eq!(net.vertex_count(), 2);
        assert_eq!(net.leaf_count(), 1);
    }

    #[test]
    fn rejects_two_cycle() {
        let raw = raw_from_arcs([("rho", "u"), ("u", "v"), ("v", "u"), ("u", "x"), ("v", "y")]);
        assert_eq!(validate(&raw), Err(ValidateError::NotADag));
    }

    #[test]
    fn rejects_bad_degrees_and_parallel_arcs() {
        let mut raw = RawGraph::new();
        let r = raw.add_vertex("rho");
        let u = raw.add_vertex("u");
        let x = raw.add_vertex("x");
        raw.add_arc(r, u);
        raw.add_arc(u, x);
        // u is suppressible (indegree 1, outdegree 1).
        assert!(matches!(
            validate(&raw),
            Err(ValidateError::BadDegree { .. })
        ));

        let mut raw = RawGraph::new();
        let r = raw.add_vertex("rho");
        let u = raw.add_vertex("u");
        raw.add_arc(r, u);
        raw.add_arc(r, u);
        assert!(matches!(
            validate(&raw),
            Err(ValidateError::MultipleRoots) | Err(ValidateError::ParallelArcs { .. })
        ));
    }

    #[test]
    fn rejects_duplicate_labels() {
        let mut raw = RawGraph::new();
        let r = raw.add_vertex("rho");
        let p = raw.add_vertex("p");
        let x1 = raw.add_vertex("x");
        let x2 = raw.add_vertex("x");
        raw.add_arc(r, p);
        raw.add_arc(p, x1);
        raw.add_arc(p, x2);
        assert_eq!(
            validate(&raw),
            Err(ValidateError::DuplicateLabel { label: "x".into() })
        );
    }

    #[test]
    fn clean_up_suppresses_path_vertex() {
        let mut raw = RawGraph::new();
        let u = raw.add_vertex("u");
        let v = raw.add_vertex("v");
        let w = raw.add_vertex("w");
        raw.add_arc(u, v);
        raw.add_arc(v, w);
        let cleaned = clean_up(&raw);
        assert_eq!(cleaned.vertex_count(), 2);
        assert_eq!(cleaned.arcs(), &[(0, 1)]);
    }

    #[test]
    fn clean_up_merges_parallel_arcs() {
        let mut raw = RawGraph::new();
        let u = raw.add_vertex("u");
        let v = raw.add_vertex("v");
        raw.add_arc(u, v);
        raw.add_arc(u, v);
        let cleaned = clean_up(&raw);
        assert_eq!(cleaned.arc_count(), 1);
    }

    #[test]
    fn clean_up_is_fixpoint_on_clean_networks() {
        let net = fixtures::n_blob();
        let cleaned = clean_up(&net.to_raw());
        let again = validate(&cleaned).unwrap();
        assert!(is_isomorphic(&net, &again));
    }

    #[test]
    fn add_leaf_to_single_leaf_gives_cherry() {
        let net = fixtures::single_leaf("x");
        let grown = net.add_leaf(net.root_arc(), "y").unwrap();
        assert!(is_isomorphic(&grown, &fixtures::cherry("x", "y")));
    }

    #[test]
    fn add_leaf_preserves_reticulations_and_grows_leaves() {
        let net = fixtures::n_blob();
        // Arc 7 is (w, r).
        let grown = net.add_leaf(ArcId(7), "z").unwrap();
        assert_eq!(grown.leaf_count(), net.leaf_count() + 1);
        assert_eq!(grown.reticulation_count(), net.reticulation_count());
    }

    #[test]
    fn add_leaf_rejects_label_clash() {
        let net = fixtures::n_blob();
        assert_eq!(
            net.add_leaf(ArcId(7), "a"),
            Err(EditError::LabelClash("a".into()))
        );
    }

    #[test]
    fn delete_leaf_of_cherry_leaves_single_leaf() {
        let net = fixtures::cherry("x", "y");
        let shrunk = net.delete_leaf("x").unwrap();
        assert!(is_isomorphic(&shrunk, &fixtures::single_leaf("y")));
    }

    #[test]
    fn delete_reticulation_arc_reduces_reticulated_cherry() {
        let net = fixtures::reticulated_cherry();
        // Vertices: rho=0, g=1, p=2, r=3, y=4, x=5; the middle arc is (p, r).
        let arc = net.find_arc(VertexId(2), VertexId(3)).unwrap();
        let reduced = net.delete_reticulation_arc(arc).unwrap();
        assert_eq!(reduced.reticulation_count(), 0);
        assert!(is_isomorphic(&reduced, &fixtures::cherry("x", "y")));
    }

    #[test]
    fn delete_tree_arc_is_rejected() {
        let net = fixtures::reticulated_cherry();
        let arc = net.find_arc(VertexId(2), VertexId(4)).unwrap(); // (p, y)
        assert_eq!(
            net.delete_reticulation_arc(arc),
            Err(EditError::NotAReticulationArc(arc))
        );
    }

    #[test]
    fn add_then_delete_roundtrips() {
        let net = fixtures::n_blob();
        for arc in net.arc_ids() {
            let grown = net.add_leaf(arc, "fresh").unwrap();
            let back = grown.delete_leaf("fresh").unwrap();
            assert!(is_isomorphic(&net, &back), "arc {arc}");
        }
    }
}
