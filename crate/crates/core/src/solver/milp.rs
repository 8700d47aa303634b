//! The mixed-integer programming model for the minimum-inret problem.
//!
//! Variables: `x_a` per incoming reticulation arc (one when the arc is
//! vertical), `h_v` per reticulation (one when it is an inret), and a
//! continuous nonnegative label `l_v` per vertex. Tree arcs carry no
//! variable; they are implicitly vertical, which shrinks the model without
//! changing its optimum.

use std::collections::BTreeMap;

use crate::network::{ArcId, PhyloNetwork, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarKind {
    Binary,
    /// Continuous, bounded below by zero.
    Nonnegative,
}

#[derive(Debug, Clone)]
pub struct MilpVar {
    pub name: String,
    pub kind: VarKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
}

/// `sum(coeff * var) sense rhs`, all coefficients integral.
#[derive(Debug, Clone)]
pub struct MilpConstraint {
    pub name: String,
    pub terms: Vec<(i64, usize)>,
    pub sense: Sense,
    pub rhs: i64,
}

#[derive(Debug, Clone)]
pub struct MilpModel {
    pub vars: Vec<MilpVar>,
    /// Minimized linear objective.
    pub objective: Vec<(i64, usize)>,
    pub constraints: Vec<MilpConstraint>,
}

impl MilpModel {
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn binaries(&self) -> impl Iterator<Item = &MilpVar> {
        self.vars.iter().filter(|v| v.kind == VarKind::Binary)
    }

    pub fn objective_value(&self, values: &[f64]) -> f64 {
        self.objective
            .iter()
            .map(|&(c, i)| c as f64 * values[i])
            .sum()
    }

    /// Feasibility of a point, with a small tolerance on the continuous side.
    pub fn is_satisfied(&self, values: &[f64]) -> bool {
        const EPS: f64 = 1e-9;
        self.constraints.iter().all(|c| {
            let lhs: f64 = c.terms.iter().map(|&(k, i)| k as f64 * values[i]).sum();
            match c.sense {
                Sense::Le => lhs <= c.rhs as f64 + EPS,
                Sense::Ge => lhs >= c.rhs as f64 - EPS,
            }
        })
    }
}

/// Instantiates the seven constraint families for a network. The optimum of
/// the model equals the exact solver's distance.
pub fn build_milp(net: &PhyloNetwork) -> MilpModel {
    let big_m = net.vertex_count() as i64;
    let retic_arcs: Vec<ArcId> = net.reticulation_arcs().collect();
    let retics: Vec<VertexId> = net.reticulations().collect();

    let mut vars = Vec::new();
    let mut x_index: BTreeMap<ArcId, usize> = BTreeMap::new();
    for &a in &retic_arcs {
        x_index.insert(a, vars.len());
        vars.push(MilpVar {
            name: format!("x_a{}", a.0),
            kind: VarKind::Binary,
        });
    }
    let mut h_index: BTreeMap<VertexId, usize> = BTreeMap::new();
    for &r in &retics {
        h_index.insert(r, vars.len());
        vars.push(MilpVar {
            name: format!("h_v{}", r.0),
            kind: VarKind::Binary,
        });
    }
    let mut l_index: BTreeMap<VertexId, usize> = BTreeMap::new();
    for v in net.vertices() {
        l_index.insert(v, vars.len());
        vars.push(MilpVar {
            name: format!("l_v{}", v.0),
            kind: VarKind::Nonnegative,
        });
    }

    let objective = retics.iter().map(|r| (1, h_index[r])).collect();
    let mut constraints = Vec::new();

    // (1) both in-arcs vertical forces the inret indicator.
    for &r in &retics {
        let mut terms: Vec<(i64, usize)> =
            net.in_arcs(r).iter().map(|a| (1, x_index[a])).collect();
        terms.push((-1, h_index[&r]));
        constraints.push(MilpConstraint {
            name: format!("c1_{}", r.0),
            terms,
            sense: Sense::Le,
            rhs: 1,
        });
    }
    // (2) at least one vertical out-arc; only binding when every out-arc is
    // a reticulation arc, since tree arcs are vertical by construction.
    for v in net.vertices() {
        if net.is_leaf(v) || net.out_arcs(v).is_empty() {
            continue;
        }
        if net.out_arcs(v).iter().all(|&a| net.is_reticulation_arc(a)) {
            constraints.push(MilpConstraint {
                name: format!("c2_{}", v.0),
                terms: net.out_arcs(v).iter().map(|a| (1, x_index[a])).collect(),
                sense: Sense::Ge,
                rhs: 1,
            });
        }
    }
    // (3) at least one vertical in-arc per reticulation.
    for &r in &retics {
        constraints.push(MilpConstraint {
            name: format!("c3_{}", r.0),
            terms: net.in_arcs(r).iter().map(|a| (1, x_index[a])).collect(),
            sense: Sense::Ge,
            rhs: 1,
        });
    }
    // (4) labels weakly increase along every arc.
    for a in net.arc_ids() {
        let (u, v) = net.arc(a);
        constraints.push(MilpConstraint {
            name: format!("c4_{}_{}", u.0, v.0),
            terms: vec![(1, l_index[&u]), (-1, l_index[&v])],
            sense: Sense::Le,
            rhs: 0,
        });
    }
    // (5) strictly, into non-reticulations.
    for a in net.arc_ids() {
        let (u, v) = net.arc(a);
        if !net.is_reticulation(v) {
            constraints.push(MilpConstraint {
                name: format!("c5_{}_{}", u.0, v.0),
                terms: vec![(1, l_index[&u]), (-1, l_index[&v])],
                sense: Sense::Le,
                rhs: -1,
            });
        }
    }
    // (6) vertical reticulation arcs are strict: l_u <= l_v - 1 + M(1 - x).
    for &a in &retic_arcs {
        let (u, v) = net.arc(a);
        constraints.push(MilpConstraint {
            name: format!("c6_{}_{}", u.0, v.0),
            terms: vec![(1, l_index[&u]), (-1, l_index[&v]), (big_m, x_index[&a])],
            sense: Sense::Le,
            rhs: big_m - 1,
        });
    }
    // (7) horizontal reticulation arcs equalize labels: l_u >= l_v - M x.
    for &a in &retic_arcs {
        let (u, v) = net.arc(a);
        constraints.push(MilpConstraint {
            name: format!("c7_{}_{}", u.0, v.0),
            terms: vec![(1, l_index[&u]), (-1, l_index[&v]), (big_m, x_index[&a])],
            sense: Sense::Ge,
            rhs: 0,
        });
    }

    MilpModel {
        vars,
        objective,
        constraints,
    }
}
