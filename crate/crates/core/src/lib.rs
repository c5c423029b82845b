//! Exact small Ramsey numbers `R(H, K_p)`, p-goodness certification, and the
//! constructions around them: Turán lower-bound colorings, greedy tree
//! embedding under a minimum-degree hypothesis, the pendant-edge recurrence
//! over a catalog of known values, Stahl's forest formula, and randomized
//! high-girth / small-independence witnesses.

pub mod bounds;
pub mod catalog;
pub mod cli;
pub mod coloring;
pub mod enumerate;
pub mod error;
pub mod goodness;
pub mod graph;
pub mod sampler;
pub mod search;
pub mod tree;
pub mod value;

pub use error::{Error, Result};
pub use graph::{contains_subgraph, named_graph, parse_graph6, to_graph6, Embedding, Girth, Graph};
