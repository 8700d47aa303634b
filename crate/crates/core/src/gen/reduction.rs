//! The vertex-cover reduction network. Every vertex of a 3-regular graph
//! becomes a gadget whose principal part is a 15-arc N-fence with four
//! leaf-carrying reticulations; gadget roots hang off a spine below the
//! root, and gadgets of adjacent vertices are cross-wired so that each of
//! the fence's three loose reticulations feeds a neighbour gadget and each
//! of the three loose tree vertices is fed by one.

use std::collections::HashMap;

use crate::gen::GenError;
use crate::network::{validate, PhyloNetwork, RawGraph};

/// A simple undirected graph expected to be 3-regular and connected.
#[derive(Debug, Clone)]
pub struct CubicGraph {
    names: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl CubicGraph {
    pub fn new(names: Vec<String>, edges: Vec<(usize, usize)>) -> Self {
        CubicGraph { names, edges }
    }

    /// Parses an undirected edge list, one `u v` pair per line.
    pub fn from_edge_list(text: &str) -> Result<Self, GenError> {
        let mut names = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut edges = Vec::new();
        let mut intern = |s: &str, names: &mut Vec<String>| -> usize {
            if let Some(&i) = index.get(s) {
                return i;
            }
            let i = names.len();
            names.push(s.to_string());
            index.insert(s.to_string(), i);
            i
        };
        for (lineno, line) in text.lines().enumerate() {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            if tokens.len() != 2 {
                return Err(GenError::NotCubic(format!(
                    "line {}: expected two vertex names",
                    lineno + 1
                )));
            }
            let u = intern(tokens[0], &mut names);
            let v = intern(tokens[1], &mut names);
            edges.push((u, v));
        }
        Ok(CubicGraph { names, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    /// Sorted neighbour lists; errors unless the graph is simple, 3-regular,
    /// connected, and has at least 4 vertices.
    pub fn check_cubic(&self) -> Result<Vec<Vec<usize>>, GenError> {
        let n = self.vertex_count();
        if n < 4 {
            return Err(GenError::NotCubic("need at least 4 vertices".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &self.edges {
            if u == v {
                return Err(GenError::NotCubic(format!("self-loop at {}", self.names[u])));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for v in 0..n {
            adj[v].sort_unstable();
            if adj[v].windows(2).any(|w| w[0] == w[1]) {
                return Err(GenError::NotCubic(format!(
                    "parallel edge at {}",
                    self.names[v]
                )));
            }
            if adj[v].len() != 3 {
                return Err(GenError::NotCubic(format!(
                    "vertex {} has degree {}",
                    self.names[v],
                    adj[v].len()
                )));
            }
        }
        // Connectivity.
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(GenError::NotCubic("graph is not connected".into()));
        }
        Ok(adj)
    }

    /// The complete graph on four vertices.
    pub fn k4() -> Self {
        let names = (0..4).map(|i| format!("v{i}")).collect();
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v));
            }
        }
        CubicGraph { names, edges }
    }

    /// The complete bipartite graph on 3 + 3 vertices.
    pub fn k33() -> Self {
        let names = (0..6).map(|i| format!("v{i}")).collect();
        let edges = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
        CubicGraph { names, edges }
    }

    /// The triangular prism: two triangles joined by a perfect matching.
    pub fn prism() -> Self {
        let names = (0..6).map(|i| format!("v{i}")).collect();
        let edges = vec![
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ];
        CubicGraph { names, edges }
    }

    /// The 3-cube graph.
    pub fn cube() -> Self {
        let names = (0..8).map(|i| format!("v{i}")).collect();
        let mut edges = Vec::new();
        for u in 0..8usize {
            for bit in 0..3 {
                let v = u ^ (1 << bit);
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        CubicGraph { names, edges }
    }

    /// Minimum vertex cover by subset enumeration; test-scale inputs only.
    pub fn minimum_vertex_cover(&self) -> usize {
        let n = self.vertex_count();
        assert!(n <= 20, "brute-force vertex cover is for small graphs");
        (0..=n)
            .find(|&k| {
                subsets_of_size(n, k).any(|mask| {
                    self.edges
                        .iter()
                        .all(|&(u, v)| mask & (1 << u) != 0 || mask & (1 << v) != 0)
                })
            })
            .unwrap()
    }
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u32> {
    (0u32..1 << n).filter(move |m| m.count_ones() as usize == k)
}

struct Gadget {
    r: [usize; 8],
    w: [usize; 8], // w[1..=7]; w[0] unused
    rho: usize,
}

/// Builds the reduction network for a 3-regular graph. The result has
/// `5 |V(g)|` leaves and `8 |V(g)|` reticulations, and is tree-based.
pub fn reduce_vertex_cover(g: &CubicGraph) -> Result<PhyloNetwork, GenError> {
    let adj = g.check_cubic()?;
    let n = g.vertex_count();
    let mut raw = RawGraph::new();

    // Spine: root, then a path of tree vertices carrying one gadget each.
    let root = raw.add_vertex("rho");
    let spine: Vec<usize> = (1..n).map(|i| raw.add_vertex(format!("s{i}"))).collect();
    raw.add_arc(root, spine[0]);
    for i in 0..n.saturating_sub(2) {
        raw.add_arc(spine[i], spine[i + 1]);
    }

    let mut gadgets = Vec::with_capacity(n);
    for v in 0..n {
        let name = g.name(v);
        let mut r = [0usize; 8];
        let mut w = [0usize; 8];
        for i in 0..8 {
            r[i] = raw.add_vertex(format!("r{i}_{name}"));
        }
        for (i, slot) in w.iter_mut().enumerate().skip(1) {
            *slot = raw.add_vertex(format!("w{i}_{name}"));
        }
        let m: Vec<usize> = (1..=4)
            .map(|i| raw.add_vertex(format!("m{i}_{name}")))
            .collect();
        let rho_v = raw.add_vertex(format!("rho_{name}"));
        let leaves: Vec<usize> = (1..=5)
            .map(|i| raw.add_vertex(format!("l{i}_{name}")))
            .collect();

        // Principal part: a 15-arc N-fence from r0 down to leaf l5.
        raw.add_arc(r[0], r[1]);
        for i in 1..=6 {
            raw.add_arc(w[i], r[i]);
            raw.add_arc(w[i], r[i + 1]);
        }
        raw.add_arc(w[7], r[7]);
        raw.add_arc(w[7], leaves[4]);
        // Leaf children of the first four fence reticulations.
        for i in 1..=4 {
            raw.add_arc(r[i], leaves[i - 1]);
        }
        // The tree vertices above the principal part.
        raw.add_arc(m[0], r[0]);
        raw.add_arc(m[0], w[4]);
        raw.add_arc(m[1], m[0]);
        raw.add_arc(m[1], w[5]);
        raw.add_arc(m[2], m[1]);
        raw.add_arc(m[2], w[6]);
        raw.add_arc(m[3], m[2]);
        raw.add_arc(m[3], r[0]);
        raw.add_arc(rho_v, m[3]);
        raw.add_arc(rho_v, w[7]);

        gadgets.push(Gadget { r, w, rho: rho_v });
    }

    // Hang the gadget roots off the spine.
    for i in 0..n - 1 {
        raw.add_arc(spine[i], gadgets[i].rho);
    }
    raw.add_arc(spine[n - 2], gadgets[n - 1].rho);

    // Cross arcs: the mappings send a vertex's k-th smallest neighbour to
    // its k-th loose reticulation and tree vertex.
    let tau = |v: usize, u: usize| 5 + adj[v].iter().position(|&x| x == u).unwrap();
    let pi = |v: usize, u: usize| 1 + adj[v].iter().position(|&x| x == u).unwrap();
    for &(u, v) in g.edges() {
        raw.add_arc(gadgets[u].r[tau(u, v)], gadgets[v].w[pi(v, u)]);
        raw.add_arc(gadgets[v].r[tau(v, u)], gadgets[u].w[pi(u, v)]);
    }

    validate(&raw).map_err(|e| GenError::NotCubic(format!("reduction produced an invalid graph: {e}")))
}
