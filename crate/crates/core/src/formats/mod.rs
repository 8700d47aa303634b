//! Parsing and serialization: extended Newick, plain edge lists, the LP
//! export of the MILP model, and the machine-readable report document.

mod edgelist;
mod enewick;
mod lp;
mod report;

pub use edgelist::{parse_edge_list, serialize_edge_list, EdgeListError};
pub use enewick::{parse_enewick, serialize_enewick, EnewickError};
pub use lp::write_lp;
pub use report::{Addition, ReportDocument};
