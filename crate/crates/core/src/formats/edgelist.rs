//! Plain edge lists: one `tail head` pair of vertex names per line. Names
//! of outdegree-0 vertices double as taxon labels.

use thiserror::Error;

use crate::network::{validate, PhyloNetwork, RawGraph, ValidateError};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: expected two whitespace-separated vertex names")]
    SyntaxError { line: usize },
    #[error(transparent)]
    Validation(#[from] ValidateError),
}

pub fn parse_edge_list(text: &str) -> Result<PhyloNetwork, EdgeListError> {
    let mut raw = RawGraph::new();
    for (i, line) in text.lines().enumerate() {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if tokens.len() != 2 {
            return Err(EdgeListError::SyntaxError { line: i + 1 });
        }
        raw.add_named_arc(tokens[0], tokens[1]);
    }
    Ok(validate(&raw)?)
}

/// Writes the arcs tail-first in topological order. Internal vertices get
/// positional names from the topological order; leaves keep their labels.
pub fn serialize_edge_list(net: &PhyloNetwork) -> String {
    let order = net.topological_order();
    let mut names: Vec<String> = vec![String::new(); net.vertex_count()];
    for (pos, &v) in order.iter().enumerate() {
        names[v.index()] = match net.label(v) {
            Some(label) => label.to_string(),
            None => {
                let mut candidate = format!("v{pos}");
                while net.leaf_by_label(&candidate).is_some() {
                    candidate.insert(0, '_');
                }
                candidate
            }
        };
    }
    let mut out = String::new();
    for &v in order {
        for &a in net.out_arcs(v) {
            let (t, h) = net.arc(a);
            out.push_str(&names[t.index()]);
            out.push(' ');
            out.push_str(&names[h.index()]);
            out.push('\n');
        }
    }
    out
}
