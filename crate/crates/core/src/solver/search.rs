//! Depth-first branch and bound over horizontal assignments.
//!
//! Reticulations are processed in topological order; at each one the search
//! tries its first in-arc, its second in-arc, and inret last. A horizontal
//! choice contracts the arc's endpoints; the contraction is admissible only
//! while the quotient digraph stays acyclic (self-loops included) and the
//! arc's tail keeps another non-horizontal out-arc. Branches are pruned as
//! soon as the inret count reaches the incumbent.

use std::time::{Duration, Instant};

use crate::labelling::RetChoice;
use crate::network::{ArcId, PhyloNetwork, VertexId};

/// Union-find over vertices with explicit undo and per-root member lists.
struct Dsu {
    parent: Vec<u32>,
    members: Vec<Vec<u32>>,
    undo: Vec<(u32, u32, usize)>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n as u32).collect(),
            members: (0..n as u32).map(|v| vec![v]).collect(),
            undo: Vec::new(),
        }
    }

    fn find(&self, v: u32) -> u32 {
        let mut v = v;
        while self.parent[v as usize] != v {
            v = self.parent[v as usize];
        }
        v
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        debug_assert_ne!(ra, rb);
        let (big, small) = if self.members[ra as usize].len() >= self.members[rb as usize].len() {
            (ra, rb)
        } else {
            (rb, ra)
        };
        let split = self.members[big as usize].len();
        let moved = std::mem::take(&mut self.members[small as usize]);
        self.members[big as usize].extend(moved);
        self.parent[small as usize] = big;
        self.undo.push((small, big, split));
    }

    fn checkpoint(&self) -> usize {
        self.undo.len()
    }

    fn rollback(&mut self, checkpoint: usize) {
        while self.undo.len() > checkpoint {
            let (small, big, split) = self.undo.pop().unwrap();
            let moved = self.members[big as usize].split_off(split);
            self.members[small as usize] = moved;
            self.parent[small as usize] = small;
        }
    }
}

pub(crate) struct SearchOutcome {
    /// Choice per reticulation, aligned with the topological reticulation
    /// order handed to [`Search::run`].
    pub best: Vec<RetChoice>,
    pub best_count: usize,
    pub nodes: u64,
    pub timed_out: bool,
}

pub(crate) struct Search<'a> {
    net: &'a PhyloNetwork,
    retics: &'a [VertexId],
    dsu: Dsu,
    horizontal: Vec<bool>,
    nonhorizontal_out: Vec<u32>,
    visited: Vec<u64>,
    epoch: u64,
    current: Vec<RetChoice>,
    incumbent: Vec<RetChoice>,
    incumbent_count: usize,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl<'a> Search<'a> {
    pub(crate) fn new(
        net: &'a PhyloNetwork,
        retics: &'a [VertexId],
        initial: Vec<RetChoice>,
        initial_count: usize,
        timeout: Option<Duration>,
    ) -> Self {
        let n = net.vertex_count();
        Search {
            net,
            retics,
            dsu: Dsu::new(n),
            horizontal: vec![false; net.arc_count()],
            nonhorizontal_out: net
                .vertices()
                .map(|v| net.out_arcs(v).len() as u32)
                .collect(),
            visited: vec![0; n],
            epoch: 0,
            current: Vec::with_capacity(retics.len()),
            incumbent: initial,
            incumbent_count: initial_count,
            nodes: 0,
            deadline: timeout.map(|t| Instant::now() + t),
            timed_out: false,
        }
    }

    pub(crate) fn run(mut self) -> SearchOutcome {
        if self.incumbent_count > 0 {
            self.descend(0, 0);
        }
        SearchOutcome {
            best: self.incumbent,
            best_count: self.incumbent_count,
            nodes: self.nodes,
            timed_out: self.timed_out,
        }
    }

    fn descend(&mut self, depth: usize, inret_count: usize) {
        self.nodes += 1;
        if self.nodes % 256 == 1 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out || inret_count >= self.incumbent_count {
            return;
        }
        if depth == self.retics.len() {
            self.incumbent_count = inret_count;
            self.incumbent = self.current.clone();
            return;
        }

        let r = self.retics[depth];
        let in_arcs = self.net.in_arcs(r);
        for (choice, arc) in [
            (RetChoice::FirstInArc, Some(in_arcs[0])),
            (RetChoice::SecondInArc, Some(in_arcs[1])),
            (RetChoice::Inret, None),
        ] {
            if self.timed_out || self.incumbent_count == 0 {
                return;
            }
            match arc {
                Some(a) => {
                    if let Some(checkpoint) = self.try_contract(a) {
                        self.current.push(choice);
                        self.descend(depth + 1, inret_count);
                        self.current.pop();
                        self.undo_contract(a, checkpoint);
                    }
                }
                None => {
                    self.current.push(choice);
                    self.descend(depth + 1, inret_count + 1);
                    self.current.pop();
                }
            }
        }
    }

    /// Attempts to make arc `a = (u, r)` horizontal. Returns the undo
    /// checkpoint on success, or `None` when the contraction is inadmissible.
    fn try_contract(&mut self, a: ArcId) -> Option<usize> {
        let (u, r) = self.net.arc(a);
        // The tail must keep a non-horizontal out-arc.
        if self.nonhorizontal_out[u.index()] < 2 {
            return None;
        }
        let (cu, cr) = (self.dsu.find(u.0), self.dsu.find(r.0));
        debug_assert_ne!(cu, cr);
        // A quotient path between the two components in either direction
        // (other than the contracted arc itself) becomes a cycle or a
        // self-loop after the merge.
        if self.reaches(cr, cu, None) || self.reaches(cu, cr, Some(a)) {
            return None;
        }
        let checkpoint = self.dsu.checkpoint();
        self.dsu.union(u.0, r.0);
        self.horizontal[a.index()] = true;
        self.nonhorizontal_out[u.index()] -= 1;
        Some(checkpoint)
    }

    fn undo_contract(&mut self, a: ArcId, checkpoint: usize) {
        let (u, _) = self.net.arc(a);
        self.nonhorizontal_out[u.index()] += 1;
        self.horizontal[a.index()] = false;
        self.dsu.rollback(checkpoint);
    }

    /// DFS over the quotient: is `target` reachable from component `from`
    /// along arcs (skipping `exclude`)? Contracted arcs connect vertices of
    /// one component and are followed harmlessly.
    fn reaches(&mut self, from: u32, target: u32, exclude: Option<ArcId>) -> bool {
        self.epoch += 1;
        let epoch = self.epoch;
        let mut stack: Vec<u32> = Vec::new();
        for &v in &self.dsu.members[from as usize] {
            self.visited[v as usize] = epoch;
            stack.push(v);
        }
        while let Some(v) = stack.pop() {
            for &a in self.net.out_arcs(VertexId(v)) {
                if exclude == Some(a) {
                    continue;
                }
                let h = self.net.head(a);
                if self.visited[h.index()] == epoch {
                    continue;
                }
                let comp = self.dsu.find(h.0);
                if comp == target {
                    return true;
                }
                for &m in &self.dsu.members[comp as usize] {
                    if self.visited[m as usize] != epoch {
                        self.visited[m as usize] = epoch;
                        stack.push(m);
                    }
                }
            }
        }
        false
    }
}
