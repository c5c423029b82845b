//! Small undirected simple graphs stored as one `u64` adjacency row per vertex.
//!
//! Every graph in this crate has at most 64 vertices, so a neighborhood is a
//! single machine word and set operations (common neighbors, candidate sets
//! during embedding search, clique extension) are plain bit arithmetic.

pub(crate) mod embed;
mod graph6;
mod independence;
mod named;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use embed::{contains_subgraph, Embedding};
pub use graph6::{parse_graph6, to_graph6};
pub use independence::{independence_number, independence_number_with_cutoff, DEFAULT_INDEPENDENCE_CUTOFF};
pub use named::named_graph;

pub const MAX_VERTICES: usize = 64;

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates over the set bits of `mask`, lowest first.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

/// Length of a shortest cycle. Forests have infinite girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn exceeds(self, ell: usize) -> bool {
        match self {
            Girth::Finite(g) => g > ell,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

/// Result of splitting off a degree-1 vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantSplit {
    /// The graph with `leaf` removed; vertices above `leaf` shift down by one.
    pub core: Graph,
    pub leaf: usize,
    /// The unique neighbor of `leaf`, in the original labeling.
    pub attach: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, rows: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.rows[v] = all & !(1u64 << v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidInput(format!("bad edge ({u}, {v}) for {n} vertices")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking symmetry and loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mask = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 || row >> v & 1 == 1 {
                return Err(Error::InvalidInput(format!("row {v} has bits out of range or a loop")));
            }
            for u in bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::InvalidInput(format!("asymmetric edge ({v}, {u})")));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.rows[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn complement(&self) -> Graph {
        let all = low_mask(self.n);
        let rows = (0..self.n).map(|v| !self.rows[v] & all & !(1u64 << v)).collect();
        Graph { n: self.n, rows }
    }

    /// Subgraph induced by the vertices in `keep`, relabeled in increasing order.
    pub fn induced(&self, keep: u64) -> Graph {
        let keep = keep & self.vertex_mask();
        let kept: Vec<usize> = bits(keep).collect();
        let mut g = Graph { n: kept.len(), rows: vec![0; kept.len()] };
        for (i, &u) in kept.iter().enumerate() {
            for (j, &v) in kept.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn without_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertex_mask() & !(1u64 << v))
    }

    /// Appends a new vertex `n` joined only to `attach`.
    pub fn with_pendant(&self, attach: usize) -> Result<Graph> {
        if attach >= self.n {
            return Err(Error::InvalidInput(format!("attach vertex {attach} out of range")));
        }
        if self.n == MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n + 1));
        }
        let mut g = self.clone();
        g.n += 1;
        g.rows.push(0);
        g.add_edge(attach, self.n);
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        g.rows[..self.n].copy_from_slice(&self.rows);
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        Ok(g)
    }

    /// Applies a vertex relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph { n: self.n, rows: vec![0; self.n] };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Vertex set of the component containing `v`, restricted to `within`.
    pub fn component_of(&self, v: usize, within: u64) -> u64 {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.rows[u] & within;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Vertex masks of the connected components, ordered by lowest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut rest = self.vertex_mask();
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.component_of(rest.trailing_zeros() as usize, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0, self.vertex_mask()) == self.vertex_mask()
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count() == self.n - 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n
    }

    pub fn girth(&self) -> Girth {
        match self.shortest_cycle() {
            Some(c) => Girth::Finite(c.len()),
            None => Girth::Infinite,
        }
    }

    /// The vertices of some shortest cycle, in cyclic order, or `None` for a forest.
    ///
    /// BFS from every root; a non-tree edge `xy` closes a walk of length
    /// `d(x) + d(y) + 1`, and the minimum over all roots is the girth. The
    /// walk is cut at the lowest common ancestor so the result is always a
    /// genuine cycle.
    pub fn shortest_cycle(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut best: Option<(usize, usize, usize, usize)> = None; // (len, root, x, y)
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = Vec::with_capacity(n);
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            queue.clear();
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.push(root);
            let mut head = 0;
            'bfs: while head < queue.len() {
                let x = queue[head];
                head += 1;
                if let Some((len, ..)) = best {
                    if 2 * dist[x] + 1 >= len {
                        break 'bfs;
                    }
                }
                for y in bits(self.rows[x]) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        if best.is_none_or(|(b, ..)| len < b) {
                            best = Some((len, root, x, y));
                        }
                    }
                }
            }
        }
        let (_, root, x, y) = best?;
        // Recompute the BFS tree of the winning root to recover the paths.
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        queue.clear();
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.push(root);
        let mut head = 0;
        while head < queue.len() {
            let a = queue[head];
            head += 1;
            for b in bits(self.rows[a]) {
                if dist[b] == usize::MAX {
                    dist[b] = dist[a] + 1;
                    parent[b] = a;
                    queue.push(b);
                }
            }
        }
        let path = |mut v: usize| {
            let mut p = vec![v];
            while parent[v] != usize::MAX {
                v = parent[v];
                p.push(v);
            }
            p
        };
        let px = path(x);
        let py = path(y);
        // Strip the common tail (shared ancestors) but keep the LCA once.
        let mut i = px.len();
        let mut j = py.len();
        while i > 1 && j > 1 && px[i - 2] == py[j - 2] {
            i -= 1;
            j -= 1;
        }
        let mut cycle: Vec<usize> = px[..i].to_vec();
        cycle.extend(py[..j - 1].iter().rev());
        Some(cycle)
    }

    /// Splits off the lowest-index degree-1 vertex, if there is one.
    pub fn pendant_decompose(&self) -> Option<PendantSplit> {
        if self.n < 2 {
            return None;
        }
        let leaf = (0..self.n).find(|&v| self.degree(v) == 1)?;
        let attach = self.rows[leaf].trailing_zeros() as usize;
        Some(PendantSplit { core: self.without_vertex(leaf), leaf, attach })
    }

    pub fn independence_number(&self) -> Result<usize> {
        independence_number(self)
    }

    pub fn to_graph6(&self) -> String {
        to_graph6(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, to_graph6(self))
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&to_graph6(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_graph6(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        named_graph("Petersen").unwrap()
    }

    #[test]
    fn degrees() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!((k5.min_degree(), k5.max_degree()), (4, 4));
        let h1 = named_graph("H1").unwrap();
        assert_eq!((h1.min_degree(), h1.max_degree()), (1, 3));
        let s5 = named_graph("S5").unwrap();
        assert_eq!(s5.order(), 6);
        assert_eq!((s5.min_degree(), s5.max_degree()), (1, 5));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(Graph::complete(3).unwrap().girth(), Girth::Finite(3));
        assert_eq!(named_graph("P6").unwrap().girth(), Girth::Infinite);
        assert_eq!(named_graph("S4").unwrap().girth(), Girth::Infinite);
        assert_eq!(named_graph("C4").unwrap().girth(), Girth::Finite(4));
        assert_eq!(petersen().girth(), Girth::Finite(5));
    }

    #[test]
    fn shortest_cycle_is_a_cycle() {
        for name in ["K3", "C7", "Petersen", "H3", "K4-e", "H7"] {
            let g = named_graph(name).unwrap();
            let c = g.shortest_cycle().unwrap();
            assert_eq!(Girth::Finite(c.len()), g.girth());
            for i in 0..c.len() {
                assert!(g.has_edge(c[i], c[(i + 1) % c.len()]), "{name}: {c:?}");
            }
            let mut sorted = c.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), c.len());
        }
    }

    #[test]
    fn trees_and_connectivity() {
        assert!(named_graph("P4").unwrap().is_tree());
        assert!(!named_graph("H1").unwrap().is_tree());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_tree());
        assert!(!two_edges.is_connected());
        assert!(two_edges.is_forest());
        assert_eq!(two_edges.girth(), Girth::Infinite);
    }

    #[test]
    fn pendant_decomposition() {
        let h1 = named_graph("H1").unwrap();
        let split = h1.pendant_decompose().unwrap();
        assert_eq!(split.core, Graph::complete(3).unwrap());
        assert_eq!(h1.degree(split.leaf), 1);
        assert!(Graph::complete(4).unwrap().pendant_decompose().is_none());
        let p3 = named_graph("P3").unwrap();
        let split = p3.pendant_decompose().unwrap();
        assert_eq!(split.leaf, 0);
        assert_eq!(split.attach, 1);
        assert_eq!(split.core, named_graph("P2").unwrap());
    }

    #[test]
    fn rejects_oversized() {
        assert_eq!(Graph::empty(65), Err(Error::TooManyVertices(65)));
        assert!(Graph::complete(64).is_ok());
    }

    #[test]
    fn from_rows_checks_symmetry() {
        assert!(Graph::from_rows(vec![0b10, 0]).is_err());
        assert!(Graph::from_rows(vec![0b1]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }
}
