//! 3-arc graphs of simple graphs: construction, characterization
//! certificates, and constructive upper bounds on their domination number.

pub mod constructions;
pub mod domination;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod iso;
pub mod recognition;
pub mod threearc;

pub use error::{Error, Result};
pub use graph::{DiGraph, Graph, VertexId};
