//! Extended Newick: the Newick grammar plus hybrid tags `#H<k>`, each tag
//! appearing exactly twice to mark the two attachment points of a
//! reticulation. Whitespace is insignificant; branch lengths are accepted
//! and discarded.

use std::collections::HashMap;

use thiserror::Error;

use crate::network::{validate, PhyloNetwork, RawGraph, ValidateError, VertexId};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EnewickError {
    #[error("syntax error at byte {position}")]
    SyntaxError { position: usize },
    #[error("hybrid tag #{tag} appears {count} times, expected exactly two")]
    UnbalancedHybridTag { tag: String, count: usize },
    #[error(transparent)]
    Validation(#[from] ValidateError),
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    raw: RawGraph,
    hybrids: HashMap<String, (usize, usize)>, // tag -> (vertex, occurrences)
}

impl<'a> Parser<'a> {
    fn error<T>(&self) -> Result<T, EnewickError> {
        Err(EnewickError::SyntaxError { position: self.pos })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> Result<(), EnewickError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            self.error()
        }
    }

    fn name_char(b: u8) -> bool {
        b.is_ascii_alphanumeric() || matches!(b, b'_' | b'.' | b'-' | b'+' | b'|')
    }

    fn take_name(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && Self::name_char(self.bytes[self.pos]) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }

    /// subtree := '(' subtree (',' subtree)* ')' label | label
    /// label   := name? ('#' tag)? (':' number)?
    fn subtree(&mut self) -> Result<usize, EnewickError> {
        let mut children = Vec::new();
        if self.peek() == Some(b'(') {
            self.pos += 1;
            children.push(self.subtree()?);
            while self.peek() == Some(b',') {
                self.pos += 1;
                children.push(self.subtree()?);
            }
            self.eat(b')')?;
        }
        let name = self.take_name();
        let tag = if self.peek() == Some(b'#') {
            self.pos += 1;
            let tag = self.take_name();
            if tag.is_empty() {
                return self.error();
            }
            Some(tag)
        } else {
            None
        };
        if self.peek() == Some(b':') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self
                .bytes
                .get(self.pos)
                .is_some_and(|b| b.is_ascii_digit() || matches!(b, b'.' | b'e' | b'E' | b'-' | b'+'))
            {
                self.pos += 1;
            }
            if self.pos == start {
                return self.error();
            }
        }
        if children.is_empty() && name.is_empty() && tag.is_none() {
            return self.error();
        }

        let vertex = match &tag {
            Some(tag) => match self.hybrids.get(tag).copied() {
                Some((v, count)) => {
                    self.hybrids.insert(tag.clone(), (v, count + 1));
                    v
                }
                None => {
                    let v = self.raw.add_vertex(name);
                    self.hybrids.insert(tag.clone(), (v, 1));
                    v
                }
            },
            None => self.raw.add_vertex(name),
        };
        for child in children {
            self.raw.add_arc(vertex, child);
        }
        Ok(vertex)
    }
}

/// Parses an extended Newick document into a validated network.
pub fn parse_enewick(text: &str) -> Result<PhyloNetwork, EnewickError> {
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        raw: RawGraph::new(),
        hybrids: HashMap::new(),
    };
    parser.subtree()?;
    parser.eat(b';')?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return parser.error();
    }
    let mut tags: Vec<_> = parser.hybrids.iter().collect();
    tags.sort();
    for (tag, &(_, count)) in tags {
        if count != 2 {
            return Err(EnewickError::UnbalancedHybridTag {
                tag: tag.clone(),
                count,
            });
        }
    }
    Ok(validate(&parser.raw)?)
}

/// Serializes a network. Reticulations are numbered in depth-first
/// encounter order; the first encounter carries the subtree, the second is
/// a bare `#H<k>` reference.
pub fn serialize_enewick(net: &PhyloNetwork) -> String {
    let mut hybrid_numbers: HashMap<VertexId, usize> = HashMap::new();
    let mut expanded = vec![false; net.vertex_count()];
    let mut out = String::from("(");
    let child = net.children(net.root()).next().expect("root has one child");
    write_subtree(net, child, &mut hybrid_numbers, &mut expanded, &mut out);
    out.push_str(");");
    out
}

fn write_subtree(
    net: &PhyloNetwork,
    v: VertexId,
    hybrid_numbers: &mut HashMap<VertexId, usize>,
    expanded: &mut [bool],
    out: &mut String,
) {
    if net.is_reticulation(v) {
        let next = hybrid_numbers.len() + 1;
        let number = *hybrid_numbers.entry(v).or_insert(next);
        if expanded[v.index()] {
            out.push_str(&format!("#H{number}"));
            return;
        }
        expanded[v.index()] = true;
        out.push('(');
        write_subtree(
            net,
            net.children(v).next().unwrap(),
            hybrid_numbers,
            expanded,
            out,
        );
        out.push(')');
        out.push_str(&format!("#H{number}"));
        return;
    }
    if net.is_leaf(v) {
        out.push_str(net.label(v).unwrap());
        return;
    }
    out.push('(');
    let children: Vec<VertexId> = net.children(v).collect();
    for (i, &c) in children.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write_subtree(net, c, hybrid_numbers, expanded, out);
    }
    out.push(')');
}
