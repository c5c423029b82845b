//! Goodness of graphs built from a catalog-known core by adding pendant edges.
//!
//! For a chain `G_0, G_1, ..., G_k` where each `G_{i+1}` is `G_i` plus a
//! pendant edge, `R(G_i, K_p)` is filled in from
//! `R(G_i, K_p) = max{R(G_{i-1}, K_p), R(G_i, K_{p-1}) + |G_i| - 1}`, seeded by
//! catalog values for the core column and for the `K_3` row.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bounds::{p_good, pendant_recurrence, turan_lower_bound, PGood};
use crate::catalog::{key_string, Catalog};
use crate::enumerate::isomorphic;
use crate::error::{Error, Result};
use crate::graph::{named_graph, Graph};
use crate::value::{Bounds, Provenance, RamseyValue};

/// A core graph followed by successive single pendant-edge extensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantChain {
    pub ids: Vec<String>,
    pub graphs: Vec<Graph>,
}

/// Name for `g` from the named-graph vocabulary, or `g6:<graph6>`.
pub fn identify(g: &Graph) -> String {
    let n = g.order();
    let mut names = vec![format!("K{n}"), format!("C{n}"), format!("P{n}")];
    if n >= 2 {
        names.push(format!("S{}", n - 1));
    }
    names.extend(["K4-e", "H1", "H2", "H3", "H4", "H5", "H6", "H7", "Petersen"].map(String::from));
    names
        .into_iter()
        .find(|name| named_graph(name).is_ok_and(|h| isomorphic(&h, g)))
        .unwrap_or_else(|| format!("g6:{}", g.to_graph6()))
}

impl PendantChain {
    /// Peels pendant edges off `h` (lowest-index leaf first) until none is left.
    pub fn from_graph(h: &Graph) -> Result<PendantChain> {
        if !h.is_connected() {
            return Err(Error::InvalidInput("goodness needs a connected graph".into()));
        }
        if h.is_tree() {
            return Err(Error::Domain("trees are p-good for all p".into()));
        }
        let mut graphs = vec![h.clone()];
        while let Some(split) = graphs.last().unwrap().pendant_decompose() {
            graphs.push(split.core);
        }
        graphs.reverse();
        let ids = graphs.iter().map(identify).collect();
        Ok(PendantChain { ids, graphs })
    }

    /// Chain for a named graph or `g6:` identifier.
    pub fn named(id: &str) -> Result<PendantChain> {
        PendantChain::from_graph(&crate::catalog::resolve_graph(id)?)
    }

    pub fn id(&self) -> &str {
        self.ids.last().unwrap()
    }

    pub fn graph(&self) -> &Graph {
        self.graphs.last().unwrap()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodnessRow {
    pub p: u64,
    pub catalog: Option<Bounds>,
    /// Value from the recurrence; absent for the core column and the `K_3` row.
    pub derived: Option<Bounds>,
    /// Intersection of catalog and derived values, or the derived value when they are disjoint.
    pub value: RamseyValue,
    /// What the table shows: the catalog value verbatim if there is one.
    pub reported: Bounds,
    pub turan: u64,
    pub status: PGood,
    pub conflict: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstFailure {
    pub p: u64,
    /// The Turán value that `R(H, K_p)` would need to equal.
    pub would_be: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodnessReport {
    pub graph: String,
    pub chain: Vec<String>,
    pub order: usize,
    pub rows: Vec<GoodnessRow>,
    pub goodness: Bounds,
    pub first_failure: Option<FirstFailure>,
    pub warnings: Vec<String>,
}

impl GoodnessReport {
    pub fn row(&self, p: u64) -> Option<&GoodnessRow> {
        self.rows.iter().find(|r| r.p == p)
    }

    /// Reported column, `p = 3, 4, ...`.
    pub fn column(&self) -> Vec<Bounds> {
        self.rows.iter().map(|r| r.reported).collect()
    }

    /// Cell text in the table layout, with the would-be value in parentheses
    /// at the first failure.
    pub fn cell(&self, p: u64) -> Option<String> {
        let row = self.row(p)?;
        let mut s = row.reported.to_string();
        if let Some(f) = self.first_failure.filter(|f| f.p == p) {
            write!(s, " ({})", f.would_be).unwrap();
        }
        Some(s)
    }
}

struct Engine<'a> {
    chain: &'a PendantChain,
    catalog: &'a Catalog,
    memo: BTreeMap<(usize, u64), GoodnessRow>,
    warnings: Vec<String>,
}

impl Engine<'_> {
    fn value(&mut self, i: usize, p: u64) -> Result<RamseyValue> {
        if let Some(row) = self.memo.get(&(i, p)) {
            return Ok(row.value);
        }
        let id = &self.chain.ids[i];
        let kp = format!("K{p}");
        let key = [id.as_str(), kp.as_str()];
        let entry = self.catalog.entry(&key);
        if let Some(flag) = entry.and_then(|e| e.flag.as_ref()) {
            self.warnings.push(format!("R{} flagged: {flag}", key_string(&key)));
        }
        let catalog = entry.map(|e| e.value);
        let derived = if i == 0 || p == 3 {
            None
        } else {
            let core = self.value(i - 1, p)?;
            let prev = self.value(i, p - 1)?;
            Some(pendant_recurrence(&core, &prev, self.chain.graphs[i].order() as u64).value)
        };
        let (value, conflict) = match (catalog, derived) {
            (Some(c), None) => (RamseyValue::new(c, Provenance::Catalog), false),
            (None, Some(d)) => (RamseyValue::new(d, Provenance::Formula), false),
            (Some(c), Some(d)) => match c.intersect(d) {
                Some(both) => (RamseyValue::new(both, Provenance::Mixed), false),
                None => {
                    self.warnings.push(format!(
                        "R{}: catalog value {c} is disjoint from the recurrence value {d}; using {d}",
                        key_string(&key)
                    ));
                    (RamseyValue::new(d, Provenance::Formula), true)
                }
            },
            (None, None) => return Err(Error::MissingCatalogEntry(key_string(&key))),
        };
        let h = self.chain.graphs[i].order() as u64;
        let row = GoodnessRow {
            p,
            catalog,
            derived,
            value,
            reported: catalog.unwrap_or(value.value),
            turan: turan_lower_bound(h, p),
            status: p_good(h, p, &value.value),
            conflict,
        };
        self.memo.insert((i, p), row);
        Ok(value)
    }
}

/// Computes `R(H, K_p)` for `p = 3..=p_max` and the goodness of the last
/// graph in `chain`.
pub fn goodness(chain: &PendantChain, catalog: &Catalog, p_max: u64) -> Result<GoodnessReport> {
    if p_max < 3 {
        return Err(Error::InvalidInput(format!("p_max must be at least 3, got {p_max}")));
    }
    let last = chain.graphs.len() - 1;
    let mut engine = Engine { chain, catalog, memo: BTreeMap::new(), warnings: Vec::new() };
    for p in 3..=p_max {
        engine.value(last, p)?;
    }
    let rows: Vec<GoodnessRow> = (3..=p_max).map(|p| engine.memo[&(last, p)].clone()).collect();

    let mut good = 2;
    let mut goodness = None;
    let mut first_failure = None;
    for row in &rows {
        match row.status {
            PGood::Good => good = row.p,
            PGood::NotGood => {
                goodness = Some(Bounds::exact(good));
                first_failure = Some(FirstFailure { p: row.p, would_be: row.turan });
                break;
            }
            PGood::Unknown => break,
        }
    }
    let mut warnings = engine.warnings;
    warnings.dedup();
    Ok(GoodnessReport {
        graph: chain.id().to_string(),
        chain: chain.ids.clone(),
        order: chain.graph().order(),
        rows,
        goodness: goodness.unwrap_or(Bounds::at_least(good)),
        first_failure,
        warnings,
    })
}

/// Renders reports side by side: one column per graph, one row per `p`, and
/// a goodness row.
pub fn render_markdown(reports: &[GoodnessReport]) -> String {
    let p_max = reports.iter().filter_map(|r| r.rows.last().map(|row| row.p)).max().unwrap_or(3);
    let mut out = String::from("|  |");
    for r in reports {
        write!(out, " {} |", r.graph).unwrap();
    }
    out.push_str("\n|---|");
    out.push_str(&"---|".repeat(reports.len()));
    out.push('\n');
    for p in 3..=p_max {
        write!(out, "| R(_, K{p}) |").unwrap();
        for r in reports {
            write!(out, " {} |", r.cell(p).unwrap_or_default()).unwrap();
        }
        out.push('\n');
    }
    out.push_str("| goodness |");
    for r in reports {
        write!(out, " {} |", r.goodness).unwrap();
    }
    out.push('\n');
    out
}
