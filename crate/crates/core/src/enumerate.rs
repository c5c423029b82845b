//! Isomorph-free enumeration of small graphs.
//!
//! Graphs on `n` vertices are grown from graphs on `n - 1` vertices by adding
//! a vertex with every possible neighborhood, then deduplicated by canonical
//! form. Restricting growth with a hereditary predicate (closed under vertex
//! deletion, e.g. "triangle-free" or "acyclic") stays complete, since every
//! graph in the class is an extension of one of its own vertex-deleted
//! subgraphs.
//!
//! Canonical forms come from individualization-refinement: an equitable
//! degree partition is refined, cells are split by individualizing vertices,
//! and the minimal adjacency code over the leaves wins. Interchangeable
//! twin vertices are branched on once.

use std::collections::BTreeMap;

use crate::graph::{bits, Graph};

/// Graphs above this order are not supported by the canonical code (u128).
pub const MAX_ENUMERATION_ORDER: usize = 16;

/// All graphs on `n` vertices up to isomorphism, in canonical labeling.
pub fn graphs(n: usize) -> Vec<Graph> {
    graphs_where(n, |_| true)
}

/// All graphs on `n` vertices satisfying a hereditary predicate, up to isomorphism.
pub fn graphs_where(n: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Graph> {
    assert!(n <= MAX_ENUMERATION_ORDER, "enumeration supports at most {MAX_ENUMERATION_ORDER} vertices");
    let mut level: Vec<Graph> = vec![Graph::empty(0).unwrap()];
    for k in 0..n {
        let mut next: BTreeMap<u128, Graph> = BTreeMap::new();
        for g in &level {
            for nbhd in 0u64..1 << k {
                let mut rows = g.rows().to_vec();
                rows.push(nbhd);
                for v in bits(nbhd) {
                    rows[v] |= 1 << k;
                }
                let h = Graph::from_rows(rows).expect("extension is a valid graph");
                if !keep(&h) {
                    continue;
                }
                let (code, perm) = canonical_form(&h);
                next.entry(code).or_insert_with(|| h.relabel(&perm));
            }
        }
        level = next.into_values().collect();
    }
    level
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    graphs(n).into_iter().filter(Graph::is_connected).collect()
}

pub fn forests(n: usize) -> Vec<Graph> {
    graphs_where(n, Graph::is_forest)
}

pub fn trees(n: usize) -> Vec<Graph> {
    forests(n).into_iter().filter(Graph::is_tree).collect()
}

/// Canonical code and the relabeling (`perm[v]` = new label of `v`) realizing it.
pub(crate) fn canonical_form(g: &Graph) -> (u128, Vec<usize>) {
    let n = g.order();
    assert!(n <= MAX_ENUMERATION_ORDER);
    let mut cells = initial_partition(g);
    refine(g, &mut cells);
    let mut best: Option<(u128, Vec<usize>)> = None;
    search(g, cells, &mut best);
    best.unwrap_or((0, Vec::new()))
}

/// Bit code of the upper triangle when vertex `order[i]` is relabeled `i`.
fn code(g: &Graph, order: &[usize]) -> u128 {
    let mut c = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            c = c << 1 | g.has_edge(order[i], order[j]) as u128;
        }
    }
    c
}

fn initial_partition(g: &Graph) -> Vec<Vec<usize>> {
    let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..g.order() {
        by_degree.entry(g.degree(v)).or_default().push(v);
    }
    by_degree.into_values().collect()
}

/// Splits cells by neighbor counts into every cell until stable. New sub-cells
/// are ordered by their count signature, which keeps the partition
/// isomorphism-invariant.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut split: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let sig = masks.iter().map(|m| (g.row(v) & m).count_ones()).collect();
                split.entry(sig).or_default().push(v);
            }
            next.extend(split.into_values());
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<(u128, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let c = code(g, &order);
        if best.as_ref().is_none_or(|(b, _)| c < *b) {
            let mut perm = vec![0; order.len()];
            for (i, &v) in order.iter().enumerate() {
                perm[v] = i;
            }
            *best = Some((c, perm));
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cells[target] {
        let twin = |u: usize| g.row(u) & !(1u64 << v) == g.row(v) & !(1u64 << u);
        if tried.iter().any(|&u| twin(u)) {
            continue;
        }
        tried.push(v);
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..target]);
        child.push(vec![v]);
        child.push(cells[target].iter().copied().filter(|&u| u != v).collect());
        child.extend_from_slice(&cells[target + 1..]);
        refine(g, &mut child);
        search(g, child, best);
    }
}

/// True when `a` and `b` are isomorphic.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_form(a).0 == canonical_form(b).0
}
