//! Recognition and exact counting on thick graphs.
//!
//! A thick graph is obtained from a thin graph H by blowing vertices up
//! into cliques and edges into cobipartite graphs. This crate recognises
//! cobipartite, unipolar, quasi-thick-forest and thick-forest inputs
//! (producing explicit models), exactly counts weighted independent sets
//! and proper q-colourings on quasi thick forests via clique cutset
//! decomposition, counts independent sets of a thick graph from a model
//! and a tree decomposition of its thin graph, and provides brute-force
//! oracles plus generators for all of the above.

pub mod chordal;
pub mod count;
pub mod decompose;
pub mod figures;
pub mod fpt;
pub mod gen;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod recognize;
pub mod treewidth;

pub use graph::{Graph, VertexSet};
pub use recognize::{RecognitionOutcome, ThickModel};
