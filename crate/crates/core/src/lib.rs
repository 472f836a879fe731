//! Exact and randomized computations around forcing tournaments and 0/1
//! matrix patterns by adding bidirectional edges.
//!
//! Vertices are 0-based in every API; the text formats in [`io`] are 1-based.

pub mod bits;
pub mod classify;
pub mod digraph;
pub mod embed;
pub mod error;
pub mod io;
pub mod limits;
pub mod matrix;
pub mod ordering;
pub mod problab;
pub mod reduce;
pub mod rng;
pub mod search;
pub mod witness;

pub use digraph::{Digraph, SemiCompleteDigraph, Tournament};
pub use error::{Error, Result};
pub use limits::Limits;
pub use matrix::BinaryMatrix;
pub use ordering::{back_edge_graph, make_xh_tree, UndirectedOrderedGraph, VertexOrdering};
pub use witness::{PatternEmbedding, VertexEmbedding};
