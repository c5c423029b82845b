//! Exact independence number by branch and bound.
//!
//! Reductions: a vertex of degree 0 or 1 inside the candidate set is always
//! taken, and disconnected candidate sets are solved per component. Branching
//! is on a maximum-degree vertex. The bound is a greedy clique cover of the
//! candidate set (an independent set meets each clique at most once).

use super::{bits, Graph};
use crate::error::{Error, Result};

/// Largest graph order accepted by [`independence_number`].
pub const DEFAULT_INDEPENDENCE_CUTOFF: usize = 200;

pub fn independence_number(g: &Graph) -> Result<usize> {
    independence_number_with_cutoff(g, DEFAULT_INDEPENDENCE_CUTOFF)
}

pub fn independence_number_with_cutoff(g: &Graph, cutoff: usize) -> Result<usize> {
    if g.order() > cutoff {
        return Err(Error::TooLarge { n: g.order(), cutoff });
    }
    Ok(Solver { g }.solve(g.vertex_mask(), 0))
}

struct Solver<'a> {
    g: &'a Graph,
}

impl Solver<'_> {
    fn clique_cover_bound(&self, mut cand: u64) -> usize {
        let mut cliques = 0;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            let mut clique_cand = cand & self.g.row(v);
            cand &= !(1u64 << v);
            while clique_cand != 0 {
                let u = clique_cand.trailing_zeros() as usize;
                cand &= !(1u64 << u);
                clique_cand &= self.g.row(u);
            }
            cliques += 1;
        }
        cliques
    }

    /// Maximum independent set size inside `cand`, or anything `<= floor`
    /// when it cannot beat `floor`.
    fn solve(&self, mut cand: u64, floor: usize) -> usize {
        let mut taken = 0;
        loop {
            if cand == 0 {
                return taken;
            }
            // Degree <= 1 reduction.
            let low = bits(cand).find(|&v| (self.g.row(v) & cand).count_ones() <= 1);
            match low {
                Some(v) => {
                    cand &= !(self.g.row(v) | 1u64 << v);
                    taken += 1;
                }
                None => break,
            }
        }
        let floor = floor.saturating_sub(taken);

        let first = cand.trailing_zeros() as usize;
        let comp = self.g.component_of(first, cand);
        if comp != cand {
            let a = self.solve(comp, 0);
            let b = self.solve(cand & !comp, floor.saturating_sub(a));
            return taken + a + b;
        }

        if self.clique_cover_bound(cand) <= floor {
            return taken;
        }

        let v = bits(cand).max_by_key(|&v| ((self.g.row(v) & cand).count_ones(), std::cmp::Reverse(v))).unwrap();
        let with = 1 + self.solve(cand & !(self.g.row(v) | 1u64 << v), floor.saturating_sub(1));
        let without = self.solve(cand & !(1u64 << v), floor.max(with));
        taken + with.max(without)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn brute_force(g: &Graph) -> usize {
        let n = g.order();
        (0u64..1 << n)
            .filter(|&s| bits(s).all(|v| g.row(v) & s == 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn small_examples() {
        for n in 1..=8 {
            assert_eq!(independence_number(&Graph::complete(n).unwrap()).unwrap(), 1);
        }
        assert_eq!(independence_number(&named_graph("C5").unwrap()).unwrap(), 2);
        assert_eq!(independence_number(&Graph::empty(0).unwrap()).unwrap(), 0);
        assert_eq!(independence_number(&Graph::empty(64).unwrap()).unwrap(), 64);
    }

    #[test]
    fn petersen_matches_subset_check() {
        let p = named_graph("Petersen").unwrap();
        // Exhaustive over 4- and 5-subsets: some 4-set is independent, no 5-set is.
        let independent = |s: u64| bits(s).all(|v| p.row(v) & s == 0);
        let subsets = |k: u32| (0u64..1 << 10).filter(move |s| s.count_ones() == k);
        assert!(subsets(4).any(independent));
        assert!(!subsets(5).any(independent));
        assert_eq!(independence_number(&p).unwrap(), 4);
    }

    #[test]
    fn cutoff_is_an_error() {
        let g = Graph::empty(10).unwrap();
        assert_eq!(independence_number_with_cutoff(&g, 9), Err(Error::TooLarge { n: 10, cutoff: 9 }));
        assert_eq!(independence_number_with_cutoff(&g, 10), Ok(10));
    }

    #[test]
    fn sparse_sixty_vertex_graphs_finish() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for &r in &[0.03, 0.1, 0.3, 0.6] {
            let mut g = Graph::empty(60).unwrap();
            for i in 0..60 {
                for j in i + 1..60 {
                    if rng.random::<f64>() < r {
                        g.add_edge(i, j);
                    }
                }
            }
            let a = independence_number(&g).unwrap();
            assert!(a >= 1 && a <= 60);
        }
    }

    proptest! {
        #[test]
        fn agrees_with_exhaustive(n in 0usize..=16, seed in any::<u64>(), density in 0.05f64..0.95) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut g = Graph::empty(n).unwrap();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.random::<f64>() < density {
                        g.add_edge(i, j);
                    }
                }
            }
            prop_assert_eq!(independence_number(&g).unwrap(), brute_force(&g));
        }
    }
}
