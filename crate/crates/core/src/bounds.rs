//! Closed-form bounds: the Turán construction, the p-good predicate, the
//! pendant-edge recurrence, Stahl's forest formula, the multicolor tree
//! formula, and the girth-based goodness-failure threshold.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coloring::TwoColoring;
use crate::error::{Error, Result};
use crate::graph::{Girth, Graph};
use crate::value::{Bounds, Provenance, RamseyValue};

/// `(h - 1)(p - 1) + 1`, the Turán lower bound on `R(H, K_p)` for connected `H` on `h` vertices.
pub fn turan_lower_bound(h: u64, p: u64) -> u64 {
    (h - 1) * (p - 1) + 1
}

/// Coloring of `K_{(h-1)(p-1)}`: `p - 1` disjoint red `K_{h-1}` blocks, all
/// other pairs blue. Red components have `h - 1` vertices, so no connected
/// `h`-vertex graph is red; any `p` vertices put two in one block, so there is
/// no blue `K_p`.
pub fn turan_coloring(h: usize, p: usize) -> Result<TwoColoring> {
    if h < 2 || p < 2 {
        return Err(Error::InvalidInput(format!("turan_coloring needs h >= 2 and p >= 2, got h={h}, p={p}")));
    }
    let block = h - 1;
    let n = block * (p - 1);
    let mut red = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if u / block == v / block {
                red.add_edge(u, v);
            }
        }
    }
    Ok(TwoColoring::from_red(red))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PGood {
    Good,
    NotGood,
    Unknown,
}

/// Classifies `R(H, K_p) ∈ r` against the Turán value for `|H| = h`.
pub fn p_good(h: u64, p: u64, r: &Bounds) -> PGood {
    let target = turan_lower_bound(h, p);
    if r.exact_value() == Some(target) {
        PGood::Good
    } else if r.lo > target {
        PGood::NotGood
    } else {
        PGood::Unknown
    }
}

/// `R(G1, K_p) = max{R(G, K_p), R(G1, K_{p-1}) + n - 1}` where `G1` is `G`
/// plus a pendant edge and `n = |G1|`, evaluated over intervals.
pub fn pendant_recurrence(r_core_p: &RamseyValue, r_ext_pm1: &RamseyValue, n: u64) -> RamseyValue {
    RamseyValue::new(r_core_p.value.max(r_ext_pm1.value.shift(n - 1)), Provenance::Formula)
}

/// Component-order counts of a forest: `counts[i - 1]` is the number of
/// components with `i` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestSpec {
    counts: Vec<u64>,
}

impl ForestSpec {
    pub fn new(mut counts: Vec<u64>) -> Result<Self> {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        if counts.is_empty() {
            return Err(Error::InvalidInput("forest has no components".into()));
        }
        Ok(ForestSpec { counts })
    }

    pub fn from_graph(g: &Graph) -> Result<Self> {
        if !g.is_forest() {
            return Err(Error::InvalidInput("graph is not a forest".into()));
        }
        let mut counts = vec![0; g.order()];
        for c in g.components() {
            counts[c.count_ones() as usize - 1] += 1;
        }
        ForestSpec::new(counts)
    }

    /// Largest component order.
    pub fn largest(&self) -> usize {
        self.counts.len()
    }

    /// Number of components of order `i`.
    pub fn count(&self, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.counts.get(i - 1).copied().unwrap_or(0)
        }
    }
}

impl FromStr for ForestSpec {
    type Err = Error;

    /// Parses `k1=2,k3=1`.
    fn from_str(s: &str) -> Result<Self> {
        let mut counts = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let bad = || Error::InvalidInput(format!("bad forest term `{part}`, expected k<i>=<count>"));
            let (key, val) = part.split_once('=').ok_or_else(bad)?;
            let i: usize = key.trim().strip_prefix('k').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let c: u64 = val.trim().parse().map_err(|_| bad())?;
            if i == 0 || i > 64 {
                return Err(bad());
            }
            if counts.len() < i {
                counts.resize(i, 0);
            }
            counts[i - 1] += c;
        }
        ForestSpec::new(counts)
    }
}

impl fmt::Display for ForestSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> =
            self.counts.iter().enumerate().filter(|(_, &c)| c > 0).map(|(i, c)| format!("k{}={c}", i + 1)).collect();
        f.write_str(&terms.join(","))
    }
}

/// Stahl's formula: `max over j in 1..=m of (j - 1)(p - 2) + Σ_{i=j}^{m} i·k_i`.
pub fn stahl_forest(f: &ForestSpec, p: u64) -> u64 {
    let m = f.largest();
    (1..=m)
        .map(|j| (j as u64 - 1) * (p - 2) + (j..=m).map(|i| i as u64 * f.count(i)).sum::<u64>())
        .max()
        .unwrap()
}

/// `(n - 1)(r - 1) + 1`: `R(T, K_{m1}, ..., K_{mt})` for a tree on `n`
/// vertices, given `r = R(K_{m1}, ..., K_{mt})`.
pub fn multicolor_tree(n: u64, r_complete: u64) -> u64 {
    (n - 1) * (r_complete - 1) + 1
}

/// `36·h·ℓ⁴·exp(12·h·ℓ⁴)`, past which a connected graph of order `h` and
/// girth `ℓ` is never p-good. Held as a natural logarithm; the integer is
/// only present when the value fits in 64 bits.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Threshold {
    pub ln_value: f64,
    pub exact: Option<u64>,
}

pub fn goodness_failure_threshold(h: u64, girth: Girth) -> Result<Threshold> {
    let ell = match girth {
        Girth::Infinite => return Err(Error::Domain("trees are p-good for all p".into())),
        Girth::Finite(l) => l as u64,
    };
    if h < 3 || ell < 3 {
        return Err(Error::Domain(format!("need h >= 3 and a finite girth >= 3, got h={h}, girth={ell}")));
    }
    let base = h as f64 * (ell as f64).powi(4);
    let ln_value = (36.0 * base).ln() + 12.0 * base;
    let exact = if ln_value < 64.0 * std::f64::consts::LN_2 {
        Some(ln_value.exp().ceil() as u64)
    } else {
        None
    };
    Ok(Threshold { ln_value, exact })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_coloring;
    use crate::enumerate;
    use crate::graph::named_graph;

    #[test]
    fn turan_values() {
        assert_eq!(turan_lower_bound(4, 3), 7);
        assert_eq!(turan_lower_bound(5, 4), 13);
        for h in 2..10 {
            assert_eq!(turan_lower_bound(h, 2), h);
        }
    }

    #[test]
    fn turan_colorings() {
        let c = turan_coloring(3, 3).unwrap();
        assert_eq!(c.order(), 4);
        assert_eq!(c.red().edge_count(), 2);
        assert_eq!(c.blue().degree_sequence(), vec![2; 4]);
        assert!(verify_coloring(&c, &named_graph("P3").unwrap(), 3).unwrap().is_good());

        let c = turan_coloring(4, 3).unwrap();
        assert_eq!(c.order(), 6);
        assert_eq!(c.red().edge_count(), 6);
        assert_eq!(c.blue().edge_count(), 9);
        assert!(verify_coloring(&c, &named_graph("H1").unwrap(), 3).unwrap().is_good());

        for p in 2..8 {
            let c = turan_coloring(2, p).unwrap();
            assert_eq!(c.order(), p - 1);
            assert_eq!(c.red().edge_count(), 0);
        }
        assert!(turan_coloring(1, 3).is_err());
    }

    #[test]
    fn turan_battery_small() {
        for h in 2..=5 {
            for g in enumerate::connected_graphs(h) {
                for p in 2..=5 {
                    assert!(verify_coloring(&turan_coloring(h, p).unwrap(), &g, p).unwrap().is_good());
                }
            }
        }
    }

    #[test]
    fn p_good_examples() {
        assert_eq!(p_good(4, 4, &Bounds::exact(10)), PGood::Good);
        assert_eq!(p_good(4, 5, &Bounds::exact(14)), PGood::NotGood);
        assert_eq!(p_good(5, 7, &Bounds::interval(28, 31)), PGood::NotGood);
        assert_eq!(p_good(5, 7, &Bounds::interval(25, 31)), PGood::Unknown);
        assert_eq!(p_good(5, 7, &Bounds::at_least(25)), PGood::Unknown);
    }

    #[test]
    fn recurrence_examples() {
        let ex = |v| RamseyValue::exact(v, Provenance::Catalog);
        assert_eq!(pendant_recurrence(&ex(9), &ex(7), 4).value, Bounds::exact(10));
        assert_eq!(pendant_recurrence(&ex(14), &ex(10), 4).value, Bounds::exact(14));
        assert_eq!(pendant_recurrence(&ex(11), &ex(9), 5).value, Bounds::exact(13));
        let iv = RamseyValue::interval(28, 31, Provenance::Catalog);
        assert_eq!(pendant_recurrence(&iv, &ex(21), 5).value, Bounds::interval(28, 31));
        assert_eq!(pendant_recurrence(&iv, &ex(26), 6).value, Bounds::exact(31));
        assert_eq!(pendant_recurrence(&ex(9), &ex(7), 4).provenance, Provenance::Formula);
    }

    #[test]
    fn recurrence_dominates_its_inputs() {
        for a in [Bounds::exact(9), Bounds::interval(28, 31), Bounds::at_least(36)] {
            for b in [Bounds::exact(7), Bounds::interval(34, 39), Bounds::at_least(20)] {
                for n in 3..7 {
                    let r = pendant_recurrence(&RamseyValue::new(a, Provenance::Catalog), &RamseyValue::new(b, Provenance::Catalog), n).value;
                    assert!(r.lo >= a.lo && r.lo >= b.lo + n - 1);
                    if a.is_exact() && b.is_exact() {
                        assert!(r.is_exact());
                    }
                }
            }
        }
    }

    #[test]
    fn stahl_examples() {
        for m in 1..=10u64 {
            let mut counts = vec![0; m as usize];
            counts[m as usize - 1] = 1;
            let f = ForestSpec::new(counts).unwrap();
            for p in 2..=8 {
                assert_eq!(stahl_forest(&f, p), turan_lower_bound(m, p), "m={m} p={p}");
            }
        }
        assert_eq!(stahl_forest(&"k2=2".parse().unwrap(), 3), 5);
        assert_eq!(stahl_forest(&"k1=1".parse().unwrap(), 3), 1);
        assert_eq!(stahl_forest(&"k1=1".parse().unwrap(), 9), 1);
        assert_eq!(stahl_forest(&"k2=1,k3=1".parse().unwrap(), 3), 6);
    }

    #[test]
    fn forest_spec_parsing() {
        let f: ForestSpec = "k1=2, k3=1".parse().unwrap();
        assert_eq!((f.count(1), f.count(2), f.count(3), f.largest()), (2, 0, 1, 3));
        assert_eq!(f.to_string(), "k1=2,k3=1");
        assert!("k0=1".parse::<ForestSpec>().is_err());
        assert!("k2".parse::<ForestSpec>().is_err());
        assert!("".parse::<ForestSpec>().is_err());
        assert!("k3=0".parse::<ForestSpec>().is_err());
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(ForestSpec::from_graph(&g).unwrap().to_string(), "k1=1,k2=1,k3=1");
        assert!(ForestSpec::from_graph(&Graph::complete(3).unwrap()).is_err());
    }

    #[test]
    fn multicolor() {
        assert_eq!(multicolor_tree(3, 6), 11);
        assert_eq!(multicolor_tree(4, 9), 25);
        for r in 1..20 {
            assert_eq!(multicolor_tree(2, r), r);
        }
    }

    #[test]
    fn threshold_values() {
        let t = goodness_failure_threshold(4, Girth::Finite(3)).unwrap();
        let want = 11664f64.ln() + 3888.0;
        assert!((t.ln_value - want).abs() / want < 1e-12);
        assert!((t.ln_value - 3897.364).abs() < 1e-3);
        assert_eq!(t.exact, None);
        let t = goodness_failure_threshold(3, Girth::Finite(3)).unwrap();
        assert!((t.ln_value - (8748f64.ln() + 2916.0)).abs() < 1e-9);
        assert!(matches!(goodness_failure_threshold(4, Girth::Infinite), Err(Error::Domain(_))));
    }
}
