use serde::{Deserialize, Serialize};

use super::{bits, Graph};

/// Injective, edge-preserving vertex map from a pattern `H` into a host `G`.
/// `map[u]` is the image of pattern vertex `u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity, range and edge preservation against `h` and `g`.
    pub fn is_valid(&self, h: &Graph, g: &Graph) -> bool {
        if self.map.len() != h.order() {
            return false;
        }
        let mut seen = 0u64;
        for &x in &self.map {
            if x >= g.order() || seen >> x & 1 == 1 {
                return false;
            }
            seen |= 1 << x;
        }
        h.edges().all(|(u, v)| g.has_edge(self.map[u], self.map[v]))
    }
}

/// Pattern vertex order for backtracking: each next vertex has the most
/// already-ordered neighbors, then highest degree, then lowest index.
pub(crate) fn search_order(h: &Graph, seed: &[usize]) -> Vec<usize> {
    let n = h.order();
    let mut order: Vec<usize> = seed.to_vec();
    let mut placed: u64 = seed.iter().fold(0, |m, &v| m | 1 << v);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((h.row(v) & placed).count_ones(), h.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        order.push(next);
        placed |= 1 << next;
    }
    order
}

/// Backtracking matcher. The first `fixed.len()` entries of `order` are
/// pre-assigned to the given host vertices.
pub(crate) struct Matcher<'a> {
    pub h: &'a Graph,
    pub host: &'a [u64],
    pub host_mask: u64,
    pub order: &'a [usize],
}

impl Matcher<'_> {
    /// Tries to extend `map` (indexed by pattern vertex) from position `depth` of the order.
    pub fn extend(&self, map: &mut [usize], used: u64, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        let mut cand = self.host_mask & !used;
        let need = self.h.degree(u) as u32;
        for w in bits(self.h.row(u)) {
            if map[w] != usize::MAX {
                cand &= self.host[map[w]];
            }
        }
        for x in bits(cand) {
            if self.host[x].count_ones() < need {
                continue;
            }
            map[u] = x;
            if self.extend(map, used | 1 << x, depth + 1) {
                return true;
            }
        }
        map[u] = usize::MAX;
        false
    }
}

/// Finds a (not necessarily induced) copy of `h` in `g`, lowest-index images first.
pub fn contains_subgraph(g: &Graph, h: &Graph) -> Option<Embedding> {
    if h.order() > g.order() {
        return None;
    }
    let order = search_order(h, &[]);
    let matcher = Matcher { h, host: g.rows(), host_mask: g.vertex_mask(), order: &order };
    let mut map = vec![usize::MAX; h.order()];
    matcher.extend(&mut map, 0, 0).then(|| Embedding { map })
}
