//! Exact Roman domination and Roman bondage numbers, the upper bounds on the
//! bondage number, and statement-level checks of the results they rest on.

pub mod bondage;
pub mod bounds;
pub mod error;
pub mod graph;
pub mod io;
pub mod rdf;

pub use error::{Error, Result};
pub use graph::{enumerate_small_graphs, DegreeProfile, Edge, EmbeddingInfo, Girth, Graph, SurfaceKind, Vertex};
