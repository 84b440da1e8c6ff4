pub mod bounds;
pub mod catalog;
#[cfg(feature = "cli")]
pub mod cli;
pub mod conditions;
pub mod counting;
pub mod error;
pub mod graph;
pub mod limits;

pub use error::{Error, Result};
pub use graph::{Graph, Hypergraph, VertexSet};
pub use limits::Limits;
