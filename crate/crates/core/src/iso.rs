//! Isomorphism of labelled networks via iterative colour refinement with a
//! backtracking fallback. Exact, intended for test-scale inputs.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::network::{PhyloNetwork, VertexId, VertexKind};

fn initial_colour(net: &PhyloNetwork, v: VertexId) -> u64 {
    let mut h = DefaultHasher::new();
    match net.kind(v) {
        VertexKind::Root => 0u8.hash(&mut h),
        VertexKind::Tree => 1u8.hash(&mut h),
        VertexKind::Reticulation => 2u8.hash(&mut h),
        VertexKind::Leaf => {
            3u8.hash(&mut h);
            net.label(v).hash(&mut h);
        }
    }
    h.finish()
}

fn refine(net: &PhyloNetwork) -> Vec<u64> {
    let n = net.vertex_count();
    let mut colour: Vec<u64> = net.vertices().map(|v| initial_colour(net, v)).collect();
    let mut classes = distinct(&colour);
    for _ in 0..n {
        let mut next = vec![0u64; n];
        for v in net.vertices() {
            let mut outs: Vec<u64> = net.children(v).map(|c| colour[c.index()]).collect();
            let mut ins: Vec<u64> = net.parents(v).map(|p| colour[p.index()]).collect();
            outs.sort_unstable();
            ins.sort_unstable();
            let mut h = DefaultHasher::new();
            colour[v.index()].hash(&mut h);
            outs.hash(&mut h);
            ins.hash(&mut h);
            next[v.index()] = h.finish();
        }
        colour = next;
        let c = distinct(&colour);
        if c == classes {
            break;
        }
        classes = c;
    }
    colour
}

fn distinct(colour: &[u64]) -> usize {
    let mut sorted = colour.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len()
}

/// Tests whether two networks are isomorphic as leaf-labelled digraphs.
pub fn is_isomorphic(a: &PhyloNetwork, b: &PhyloNetwork) -> bool {
    if a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count() {
        return false;
    }
    let ca = refine(a);
    let cb = refine(b);
    let mut ma = ca.clone();
    let mut mb = cb.clone();
    ma.sort_unstable();
    mb.sort_unstable();
    if ma != mb {
        return false;
    }

    // Backtracking over colour classes, rarest colour first.
    let n = a.vertex_count();
    let mut freq: HashMap<u64, usize> = HashMap::new();
    for &c in &ca {
        *freq.entry(c).or_default() += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (freq[&ca[v]], ca[v], v));
    let mut by_colour: HashMap<u64, Vec<usize>> = HashMap::new();
    for v in 0..n {
        by_colour.entry(cb[v]).or_default().push(v);
    }

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    backtrack(a, b, &ca, &by_colour, &order, 0, &mut mapping, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    a: &PhyloNetwork,
    b: &PhyloNetwork,
    ca: &[u64],
    by_colour: &HashMap<u64, Vec<usize>>,
    order: &[usize],
    pos: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    let Some(candidates) = by_colour.get(&ca[v]) else {
        return false;
    };
    'cand: for &w in candidates {
        if used[w] {
            continue;
        }
        // Consistency with already-mapped neighbours, both directions.
        for c in a.children(VertexId(v as u32)) {
            let m = mapping[c.index()];
            if m != usize::MAX && b.find_arc(VertexId(w as u32), VertexId(m as u32)).is_none() {
                continue 'cand;
            }
        }
        for p in a.parents(VertexId(v as u32)) {
            let m = mapping[p.index()];
            if m != usize::MAX && b.find_arc(VertexId(m as u32), VertexId(w as u32)).is_none() {
                continue 'cand;
            }
        }
        mapping[v] = w;
        used[w] = true;
        if backtrack(a, b, ca, by_colour, order, pos + 1, mapping, used) {
            return true;
        }
        mapping[v] = usize::MAX;
        used[w] = false;
    }
    false
}
