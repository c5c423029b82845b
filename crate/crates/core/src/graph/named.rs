//! Named-graph vocabulary: `K<n>`, `C<n>`, `P<n>`, `S<n>`, `K4-e`,
//! `Petersen`, and the pendant-extended small graphs `H1`..`H7`.
//!
//! Pendant chains: `H1 = K3 + pendant`, `H2 = H1 + pendant`,
//! `H3 = C4 + pendant`, `H4 = K4 + pendant`, `H5 = H4 + pendant`,
//! `H6 = (K4-e) + pendant`, `H7 = H6 + pendant`. A first pendant attaches to
//! vertex 0 of the base graph; a second pendant extends the first one into a
//! path (it attaches to the previous leaf).

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

fn param(name: &str, prefix: &str) -> Option<Result<usize>> {
    let digits = name.strip_prefix(prefix)?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some(digits.parse::<usize>().map_err(|_| Error::ParameterOutOfRange(name.to_string())))
}

fn in_range(name: &str, k: usize, lo: usize, hi: usize) -> Result<usize> {
    if (lo..=hi).contains(&k) {
        Ok(k)
    } else {
        Err(Error::ParameterOutOfRange(format!("{name}: parameter must be in {lo}..={hi}")))
    }
}

pub(crate) fn cycle(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub(crate) fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub(crate) fn star(leaves: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges(leaves + 1, &edges)
}

fn k4_minus_e() -> Graph {
    let mut g = Graph::complete(4).unwrap();
    g.remove_edge(2, 3);
    g
}

fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// Builds a graph from the named-graph vocabulary.
pub fn named_graph(name: &str) -> Result<Graph> {
    let pendant = |g: Graph, at: usize| g.with_pendant(at).unwrap();
    let g = match name {
        "K4-e" => k4_minus_e(),
        "Petersen" => petersen(),
        "H1" => pendant(Graph::complete(3)?, 0),
        "H2" => pendant(named_graph("H1")?, 3),
        "H3" => pendant(cycle(4)?, 0),
        "H4" => pendant(Graph::complete(4)?, 0),
        "H5" => pendant(named_graph("H4")?, 4),
        "H6" => pendant(k4_minus_e(), 0),
        "H7" => pendant(named_graph("H6")?, 4),
        _ => {
            if let Some(k) = param(name, "K") {
                Graph::complete(in_range(name, k?, 1, MAX_VERTICES)?)?
            } else if let Some(k) = param(name, "C") {
                cycle(in_range(name, k?, 3, MAX_VERTICES)?)?
            } else if let Some(k) = param(name, "P") {
                path(in_range(name, k?, 1, MAX_VERTICES)?)?
            } else if let Some(k) = param(name, "S") {
                star(in_range(name, k?, 1, MAX_VERTICES - 1)?)?
            } else {
                return Err(Error::UnknownGraph(name.to_string()));
            }
        }
    };
    Ok(g)
}
