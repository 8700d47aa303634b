//! The structured result document emitted by the command-line tools.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// One planned leaf addition: the subdivided arc and the fresh taxon.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Addition {
    pub arc: u32,
    pub tail: u32,
    pub head: u32,
    pub label: String,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq)]
pub struct ReportDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_tree_child: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_orchard: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_tree_based: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_tc: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_tb: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_or: Option<usize>,
    /// Whether `l_or` is proven optimal (false after a timeout).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub optimal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub additions: Option<Vec<Addition>>,
    /// Vertex id (as a string key) to integer label.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labelling: Option<BTreeMap<String, i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omnians: Option<Vec<u32>>,
    /// Arc ids per W-fence.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w_fences: Option<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes: Option<u64>,
}

impl ReportDocument {
    /// The distances must sandwich whenever all three are present:
    /// `l_tb <= l_or <= l_tc`.
    pub fn sandwich_holds(&self) -> bool {
        match (self.l_tb, self.l_or, self.l_tc) {
            (Some(tb), Some(or), Some(tc)) => tb <= or && or <= tc,
            _ => true,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
