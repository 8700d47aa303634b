//! Instance generation: random birth-hybridization networks, the
//! vertex-cover reduction networks, and the two-leaf family attaining the
//! sharp upper bound.

mod reduction;
mod simulate;
mod tight;

pub use reduction::{reduce_vertex_cover, CubicGraph};
pub use simulate::{generate, GenConfig, HybridizationRate};
pub use tight::tight_family;

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),
    #[error("no network with the requested leaf and reticulation counts after {attempts} attempts")]
    RetriesExhausted { attempts: usize },
    #[error("input graph is not usable for the reduction: {0}")]
    NotCubic(String),
}
