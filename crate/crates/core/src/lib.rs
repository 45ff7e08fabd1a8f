//! Exact face-vector calculus for cyclic polytopes, McMullen-Walkup
//! polytopes, lexicographic diamonds and the cubical family `Q(k, d, n)`.

pub mod cli;
pub mod complex;
pub mod constructions;
pub mod error;
pub mod exact_json;
pub mod q_analysis;
pub mod report;
pub mod stackedness;
pub mod vector_calculus;
pub mod verify;

pub use complex::{Face, SimplicialComplex, VertexLabel};
pub use error::{Error, Result};
