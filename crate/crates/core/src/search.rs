//! Exhaustive search for red/blue colorings of `K_N` with no red `H` and no
//! blue `K_p`.
//!
//! Vertices are added one at a time. The colors from the new vertex `k` to
//! `0..k` are decided in index order, and a partial state is pruned as soon
//! as the newest red edge completes a red copy of `H` or the newest blue edge
//! completes a blue `K_p` (a blue `K_{p-2}` inside the common blue
//! neighborhood of its endpoints).
//!
//! Symmetry breaking: vertices of the current `K_k` that agree in color
//! towards every other vertex are twins, and permuting a twin class is an
//! automorphism. Within each class the new vertex's color vector must be
//! non-increasing (red before blue), which keeps exactly one extension per
//! class-count pattern. Every good coloring of `K_{k+1}` is isomorphic to an
//! extension of a surviving `K_k` state, so `Exhausted` is a proof.
//!
//! Work is split deterministically: the search is run to a fixed frontier
//! depth, then each frontier state is a branch. Branch results are merged in
//! frontier order, so verdicts and node counts do not depend on the number of
//! workers.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::bounds::{turan_coloring, turan_lower_bound};
use crate::coloring::{verify_coloring, TwoColoring};
use crate::error::{Error, Result};
use crate::graph::embed::{search_order, Matcher};
use crate::graph::{low_mask, Graph, MAX_VERTICES};
use crate::value::{Bounds, Provenance, RamseyValue};

/// Environment variable holding the worker count; unset means one worker.
pub const WORKERS_ENV: &str = "RAMSEY_GOOD_WORKERS";

/// Frontier depth (number of placed vertices) at which the search splits.
const SPLIT_DEPTH: usize = 5;

/// Ordered-edge orbits are only computed for patterns up to this order.
const MAX_AUT_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of search nodes (edge color decisions).
    pub budget: u64,
    pub workers: usize,
}

impl SearchOptions {
    pub fn new(budget: u64) -> Self {
        SearchOptions { budget, workers: 1 }
    }

    pub fn with_workers(self, workers: usize) -> Self {
        SearchOptions { workers: workers.max(1), ..self }
    }

    /// Reads the worker count from [`WORKERS_ENV`].
    pub fn from_env(budget: u64) -> Self {
        let workers = std::env::var(WORKERS_ENV).ok().and_then(|s| s.parse().ok()).unwrap_or(1);
        SearchOptions::new(budget).with_workers(workers)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    WitnessFound(TwoColoring),
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchVerdict {
    pub outcome: SearchOutcome,
    pub nodes: u64,
}

/// Precomputed search data for the forbidden red pattern.
struct Pattern {
    h: Graph,
    /// One search order per ordered-edge orbit, starting with the edge's ends.
    edge_roots: Vec<Vec<usize>>,
    /// One search order per vertex orbit; only used when `h` has isolated vertices.
    vertex_roots: Vec<Vec<usize>>,
}

fn automorphisms(h: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = h.order();
    if n > MAX_AUT_ORDER {
        return None;
    }
    let order = search_order(h, &[]);
    let mut out = Vec::new();
    fn all(m: &Matcher<'_>, map: &mut [usize], used: u64, depth: usize, out: &mut Vec<Vec<usize>>) {
        if depth == m.order.len() {
            out.push(map.to_vec());
            return;
        }
        let u = m.order[depth];
        let mut cand = m.host_mask & !used;
        for w in crate::graph::bits(m.h.row(u)) {
            if map[w] != usize::MAX {
                cand &= m.host[map[w]];
            }
        }
        for x in crate::graph::bits(cand) {
            if m.h.degree(u) != m.h.degree(x) {
                continue;
            }
            map[u] = x;
            all(m, map, used | 1 << x, depth + 1, out);
        }
        map[u] = usize::MAX;
    }
    let m = Matcher { h, host: h.rows(), host_mask: h.vertex_mask(), order: &order };
    all(&m, &mut vec![usize::MAX; n], 0, 0, &mut out);
    Some(out)
}

impl Pattern {
    fn new(h: &Graph) -> Self {
        let auts = automorphisms(h);
        let minimal = |key: &[usize]| match &auts {
            None => true,
            Some(auts) => auts.iter().all(|s| key.iter().map(|&v| s[v]).collect::<Vec<_>>().as_slice() >= key),
        };
        let mut edge_roots = Vec::new();
        for (u, v) in h.edges() {
            for (a, b) in [(u, v), (v, u)] {
                if minimal(&[a, b]) {
                    edge_roots.push(search_order(h, &[a, b]));
                }
            }
        }
        let mut vertex_roots = Vec::new();
        if (0..h.order()).any(|v| h.degree(v) == 0) {
            for a in 0..h.order() {
                if minimal(&[a]) {
                    vertex_roots.push(search_order(h, &[a]));
                }
            }
        }
        Pattern { h: h.clone(), edge_roots, vertex_roots }
    }

    /// Is there a red copy of the pattern whose first `seed.len()` order
    /// positions land on `seed`? `host_mask` restricts the usable vertices.
    fn rooted(&self, red: &[u64], host_mask: u64, seed: &[usize]) -> bool {
        let mut map = vec![usize::MAX; self.h.order()];
        let roots = if seed.len() == 2 { &self.edge_roots } else { &self.vertex_roots };
        'root: for order in roots {
            let mut used = 0u64;
            for (i, &x) in seed.iter().enumerate() {
                let u = order[i];
                if red[x].count_ones() < self.h.degree(u) as u32 {
                    continue 'root;
                }
                map[u] = x;
                used |= 1 << x;
            }
            let m = Matcher { h: &self.h, host: red, host_mask, order };
            if m.extend(&mut map, used, seed.len()) {
                return true;
            }
            map.iter_mut().for_each(|x| *x = usize::MAX);
        }
        false
    }
}

fn has_clique(rows: &[u64], cand: u64, size: usize) -> bool {
    if size == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < size {
        return false;
    }
    if size == 1 {
        return true;
    }
    let mut rest = cand;
    while rest.count_ones() as usize >= size {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if has_clique(rows, rest & rows[v], size - 1) {
            return true;
        }
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Flow {
    Continue,
    Found,
    OutOfBudget,
    Cancelled,
}

struct Worker<'a> {
    pat: &'a Pattern,
    n: usize,
    p: usize,
    budget: u64,
    nodes: u64,
    red: [u64; MAX_VERTICES],
    blue: [u64; MAX_VERTICES],
    /// Frontier collection: stop at this many placed vertices and record the state.
    split_at: Option<usize>,
    frontier: Vec<Vec<u64>>,
    witness: Option<Vec<u64>>,
    /// Cancellation: abort when a branch with a lower index has found a witness.
    branch: usize,
    winner: Option<&'a AtomicUsize>,
}

impl<'a> Worker<'a> {
    fn new(pat: &'a Pattern, n: usize, p: usize, budget: u64) -> Self {
        Worker {
            pat,
            n,
            p,
            budget,
            nodes: 0,
            red: [0; MAX_VERTICES],
            blue: [0; MAX_VERTICES],
            split_at: None,
            frontier: Vec::new(),
            witness: None,
            branch: 0,
            winner: None,
        }
    }

    /// Loads a complete coloring of `K_k` given by its red rows.
    fn load(&mut self, red_rows: &[u64]) {
        let k = red_rows.len();
        for (v, &row) in red_rows.iter().enumerate() {
            self.red[v] = row;
            self.blue[v] = low_mask(k) & !row & !(1u64 << v);
        }
    }

    /// Places vertex `k` onto a complete coloring of `K_k`.
    fn place(&mut self, k: usize) -> Flow {
        // prev[j]: the previous member of j's twin class, if any.
        let mut prev = [usize::MAX; MAX_VERTICES];
        let mask = low_mask(k);
        for b in 1..k {
            for a in (0..b).rev() {
                let others = mask & !(1u64 << a | 1u64 << b);
                if (self.red[a] ^ self.red[b]) & others == 0 {
                    prev[b] = a;
                    break;
                }
            }
        }
        self.assign(k, 0, &prev)
    }

    fn assign(&mut self, k: usize, j: usize, prev: &[usize; MAX_VERTICES]) -> Flow {
        if j == k {
            return self.completed(k);
        }
        let (bk, bj) = (1u64 << k, 1u64 << j);

        let red_allowed = prev[j] == usize::MAX || self.red[k] >> prev[j] & 1 == 1;
        if red_allowed {
            if let Some(flow) = self.tick() {
                return flow;
            }
            self.red[k] |= bj;
            self.red[j] |= bk;
            if !self.pat.rooted(&self.red, low_mask(k + 1), &[k, j]) {
                let flow = self.assign(k, j + 1, prev);
                if flow != Flow::Continue {
                    return flow;
                }
            }
            self.red[k] &= !bj;
            self.red[j] &= !bk;
        }

        if let Some(flow) = self.tick() {
            return flow;
        }
        self.blue[k] |= bj;
        self.blue[j] |= bk;
        if !has_clique(&self.blue, self.blue[k] & self.blue[j] & low_mask(k), self.p - 2) {
            let flow = self.assign(k, j + 1, prev);
            if flow != Flow::Continue {
                return flow;
            }
        }
        self.blue[k] &= !bj;
        self.blue[j] &= !bk;
        Flow::Continue
    }

    fn completed(&mut self, k: usize) -> Flow {
        if !self.pat.vertex_roots.is_empty() && self.pat.rooted(&self.red, low_mask(k + 1), &[k]) {
            return Flow::Continue;
        }
        let placed = k + 1;
        if placed == self.n {
            self.witness = Some(self.red[..placed].to_vec());
            return Flow::Found;
        }
        if self.split_at == Some(placed) {
            self.frontier.push(self.red[..placed].to_vec());
            return Flow::Continue;
        }
        self.place(placed)
    }

    fn tick(&mut self) -> Option<Flow> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Some(Flow::OutOfBudget);
        }
        if self.nodes & 0xfff == 0 {
            if let Some(w) = self.winner {
                if w.load(Ordering::Relaxed) < self.branch {
                    return Some(Flow::Cancelled);
                }
            }
        }
        None
    }
}

struct BranchResult {
    flow: Flow,
    nodes: u64,
    witness: Option<Vec<u64>>,
}

fn run_branch(pat: &Pattern, n: usize, p: usize, budget: u64, state: &[u64], index: usize, winner: Option<&AtomicUsize>) -> BranchResult {
    let mut w = Worker::new(pat, n, p, budget);
    w.branch = index;
    w.winner = winner;
    w.load(state);
    let flow = w.place(state.len());
    if flow == Flow::Found {
        if let Some(win) = winner {
            win.fetch_min(index, Ordering::Relaxed);
        }
    }
    BranchResult { flow, nodes: w.nodes, witness: w.witness }
}

fn witness_coloring(rows: &[u64]) -> TwoColoring {
    TwoColoring::from_red(Graph::from_rows(rows.to_vec()).expect("search state is a valid graph"))
}

/// Decides whether `K_n` has a coloring with no red `h` and no blue `K_p`.
///
/// `Exhausted` is a proof that none exists. Running out of budget is the
/// [`Error::Inconclusive`] error, distinct from `Exhausted`.
pub fn exists_good_coloring(n: usize, h: &Graph, p: usize, opts: &SearchOptions) -> Result<SearchVerdict> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::InvalidInput(format!("K_{n} is outside the supported range 1..=64")));
    }
    if p < 2 {
        return Err(Error::InvalidInput(format!("clique order p = {p} must be at least 2")));
    }
    if h.order() == 0 {
        return Err(Error::InvalidInput("forbidden graph must have at least one vertex".into()));
    }
    let pat = Pattern::new(h);
    let inconclusive = Err(Error::Inconclusive { budget: opts.budget });

    let mut root = Worker::new(&pat, n, p, opts.budget);
    if n > SPLIT_DEPTH {
        root.split_at = Some(SPLIT_DEPTH);
    }
    let verdict = match root.place(0) {
        Flow::OutOfBudget => return inconclusive,
        Flow::Found => SearchVerdict { outcome: SearchOutcome::WitnessFound(witness_coloring(root.witness.as_ref().unwrap())), nodes: root.nodes },
        Flow::Cancelled => unreachable!("root search is never cancelled"),
        Flow::Continue if root.frontier.is_empty() => SearchVerdict { outcome: SearchOutcome::Exhausted, nodes: root.nodes },
        Flow::Continue => {
            let remaining = opts.budget - root.nodes;
            let mut used = root.nodes;
            let mut found = None;
            if opts.workers <= 1 {
                for (i, state) in root.frontier.iter().enumerate() {
                    let r = run_branch(&pat, n, p, remaining, state, i, None);
                    used += r.nodes;
                    if r.flow == Flow::OutOfBudget || used > opts.budget {
                        return inconclusive;
                    }
                    if r.flow == Flow::Found {
                        found = r.witness;
                        break;
                    }
                }
            } else {
                let winner = AtomicUsize::new(usize::MAX);
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(opts.workers)
                    .build()
                    .map_err(|e| Error::InvalidInput(format!("cannot start worker pool: {e}")))?;
                let results: Vec<BranchResult> = pool.install(|| {
                    root.frontier
                        .par_iter()
                        .enumerate()
                        .map(|(i, state)| run_branch(&pat, n, p, remaining, state, i, Some(&winner)))
                        .collect()
                });
                for r in results {
                    // Branches after the winner may have been cancelled; they are never reached here.
                    debug_assert_ne!(r.flow, Flow::Cancelled);
                    used += r.nodes;
                    if r.flow == Flow::OutOfBudget || used > opts.budget {
                        return inconclusive;
                    }
                    if r.flow == Flow::Found {
                        found = r.witness;
                        break;
                    }
                }
            }
            match found {
                Some(rows) => SearchVerdict { outcome: SearchOutcome::WitnessFound(witness_coloring(&rows)), nodes: used },
                None => SearchVerdict { outcome: SearchOutcome::Exhausted, nodes: used },
            }
        }
    };
    if let SearchOutcome::WitnessFound(c) = &verdict.outcome {
        let check = verify_coloring(c, h, p)?;
        assert!(check.is_good(), "search produced a coloring that fails verification: {check:?}");
    }
    Ok(verdict)
}

/// Result of [`ramsey_number`]: the value, total search nodes, and a
/// verified good coloring of `K_{lo-1}` certifying the lower end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyComputation {
    pub value: RamseyValue,
    pub nodes: u64,
    pub lower_witness: TwoColoring,
}

/// `C(h + p - 2, p - 1)`, the Erdős–Szekeres bound on `R(K_h, K_p)`, which
/// bounds `R(H, K_p)` for every `H` on `h` vertices.
pub fn erdos_szekeres_bound(h: usize, p: usize) -> u64 {
    let (a, b) = ((h + p - 2) as u128, (p - 1) as u128);
    let mut c: u128 = 1;
    for i in 0..b {
        c = c * (a - i) / (i + 1);
    }
    u64::try_from(c).unwrap_or(u64::MAX)
}

/// Determines `R(H, K_p)` by searching upward from the Turán bound.
///
/// The Turán coloring certifies `R >= (|H|-1)(p-1)+1`; the first order whose
/// search is `Exhausted` is the exact value. If the budget runs out the
/// result is the interval from the largest certified lower bound to the
/// Erdős–Szekeres upper bound, with provenance `Mixed`.
pub fn ramsey_number(h: &Graph, p: usize, opts: &SearchOptions) -> Result<RamseyComputation> {
    if !h.is_connected() || h.order() == 0 {
        return Err(Error::InvalidInput("ramsey_number needs a connected graph".into()));
    }
    if p < 2 {
        return Err(Error::InvalidInput(format!("clique order p = {p} must be at least 2")));
    }
    let order = h.order();
    let turan = turan_lower_bound(order as u64, p as u64);
    let upper = erdos_szekeres_bound(order, p);
    let mut witness = if order >= 2 { turan_coloring(order, p)? } else { TwoColoring::partial(0)? };
    debug_assert!(witness.order() == 0 || verify_coloring(&witness, h, p)?.is_good());

    let mut nodes = 0u64;
    let mut n = turan as usize;
    loop {
        let mixed = |lo: usize| RamseyValue::new(Bounds::interval(lo as u64, upper.max(lo as u64)), Provenance::Mixed);
        if n > MAX_VERTICES {
            return Ok(RamseyComputation { value: mixed(n), nodes, lower_witness: witness });
        }
        let left = SearchOptions { budget: opts.budget - nodes, ..*opts };
        match exists_good_coloring(n, h, p, &left) {
            Ok(v) => {
                nodes += v.nodes;
                match v.outcome {
                    SearchOutcome::Exhausted => {
                        let value = RamseyValue::exact(n as u64, Provenance::SearchProved);
                        return Ok(RamseyComputation { value, nodes, lower_witness: witness });
                    }
                    SearchOutcome::WitnessFound(c) => {
                        witness = c;
                        n += 1;
                    }
                }
            }
            Err(Error::Inconclusive { .. }) => {
                return Ok(RamseyComputation { value: mixed(n), nodes: opts.budget, lower_witness: witness });
            }
            Err(e) => return Err(e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::Verdict;
    use crate::graph::named_graph;

    fn opts() -> SearchOptions {
        SearchOptions::new(100_000_000)
    }

    /// Every one of the 2^C(n,2) colorings, checked with `verify_coloring`.
    fn unpruned_exists(n: usize, h: &Graph, p: usize) -> bool {
        let m = n * (n - 1) / 2;
        (0u64..1 << m).any(|code| {
            let mut red = Graph::empty(n).unwrap();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if code >> k & 1 == 1 {
                        red.add_edge(i, j);
                    }
                    k += 1;
                }
            }
            verify_coloring(&TwoColoring::from_red(red), h, p).unwrap() == Verdict::Good
        })
    }

    fn found(v: &SearchVerdict) -> bool {
        matches!(v.outcome, SearchOutcome::WitnessFound(_))
    }

    #[test]
    fn triangle_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert!(found(&exists_good_coloring(5, &k3, 3, &opts()).unwrap()));
        assert_eq!(exists_good_coloring(6, &k3, 3, &opts()).unwrap().outcome, SearchOutcome::Exhausted);
    }

    #[test]
    fn h1_versus_triangle() {
        let h1 = named_graph("H1").unwrap();
        assert!(found(&exists_good_coloring(6, &h1, 3, &opts()).unwrap()));
        assert_eq!(exists_good_coloring(7, &h1, 3, &opts()).unwrap().outcome, SearchOutcome::Exhausted);
    }

    #[test]
    fn small_ramsey_numbers() {
        let cases = [("K3", 3, 6), ("C4", 3, 7), ("P4", 3, 7), ("K4-e", 3, 7), ("H1", 3, 7), ("P3", 4, 7), ("K3", 2, 3)];
        for (name, p, want) in cases {
            let r = ramsey_number(&named_graph(name).unwrap(), p, &opts()).unwrap();
            assert_eq!(r.value, RamseyValue::exact(want, Provenance::SearchProved), "{name}, {p}");
            assert_eq!(r.lower_witness.order() as u64, want - 1);
            assert!(verify_coloring(&r.lower_witness, &named_graph(name).unwrap(), p).unwrap().is_good());
        }
        let k1 = ramsey_number(&Graph::complete(1).unwrap(), 3, &opts()).unwrap();
        assert_eq!(k1.value.value, Bounds::exact(1));
    }

    #[test]
    fn agrees_with_unpruned_enumeration() {
        let patterns: Vec<Graph> = ["K3", "P3", "P4", "C4", "K4-e", "H1", "S3", "K2"]
            .iter()
            .map(|s| named_graph(s).unwrap())
            .chain([Graph::from_edges(3, &[(0, 1)]).unwrap(), Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()])
            .collect();
        for h in &patterns {
            for p in 2..=4 {
                for n in 1..=5 {
                    let v = exists_good_coloring(n, h, p, &opts()).unwrap();
                    assert_eq!(found(&v), unpruned_exists(n, h, p), "{h:?} p={p} n={n}");
                }
            }
        }
    }

    #[test]
    fn monotone_in_order() {
        for (name, p) in [("K3", 3), ("H1", 3), ("C4", 3), ("P3", 4)] {
            let h = named_graph(name).unwrap();
            let mut seen_exhausted = false;
            for n in 1..=8 {
                let v = exists_good_coloring(n, &h, p, &opts()).unwrap();
                if seen_exhausted {
                    assert!(!found(&v), "{name} p={p}: colorable at {n} after an exhausted order");
                }
                seen_exhausted |= !found(&v);
            }
            assert!(seen_exhausted);
        }
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let k3 = Graph::complete(3).unwrap();
        let err = exists_good_coloring(6, &k3, 3, &SearchOptions::new(10)).unwrap_err();
        assert_eq!(err, Error::Inconclusive { budget: 10 });
        let r = ramsey_number(&k3, 3, &SearchOptions::new(10)).unwrap();
        assert_eq!(r.value.provenance, Provenance::Mixed);
        assert_eq!(r.value.value, Bounds::interval(5, 6));
    }

    #[test]
    fn worker_count_does_not_change_results() {
        for (name, n, p) in [("K3", 6, 3), ("H1", 6, 3), ("H1", 7, 3), ("K3", 8, 4), ("C4", 7, 3)] {
            let h = named_graph(name).unwrap();
            let one = exists_good_coloring(n, &h, p, &opts()).unwrap();
            let four = exists_good_coloring(n, &h, p, &opts().with_workers(4)).unwrap();
            assert_eq!(one, four, "{name} n={n} p={p}");
        }
    }

    #[test]
    fn isolated_vertex_patterns_are_caught() {
        // K2 + K1: a red edge plus any third vertex.
        let h = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let v = exists_good_coloring(3, &h, 3, &opts()).unwrap();
        if let SearchOutcome::WitnessFound(c) = &v.outcome {
            assert!(verify_coloring(c, &h, 3).unwrap().is_good());
        }
        assert_eq!(found(&v), unpruned_exists(3, &h, 3));
    }

    #[test]
    fn erdos_szekeres() {
        assert_eq!(erdos_szekeres_bound(3, 3), 6);
        assert_eq!(erdos_szekeres_bound(4, 4), 20);
        assert_eq!(erdos_szekeres_bound(3, 2), 3);
    }
}
