//! Known Ramsey values keyed by tuples of graph identifiers.
//!
//! Identifiers are the [`named_graph`] vocabulary or `g6:<graph6>`. Keys are
//! normalized by moving complete graphs to the end in increasing order, so
//! `("K4", "K3")` and `("K3", "K4")` name the same entry.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bounds::turan_lower_bound;
use crate::error::{Error, Result};
use crate::graph::{named_graph, parse_graph6, Graph};
use crate::value::{Bounds, Provenance, RamseyValue};

const DEFAULT_CATALOG: &str = include_str!("../data/catalog.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    PaperTable,
    Classical,
    User,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub graphs: Vec<String>,
    pub value: Bounds,
    pub source: Source,
    /// Data-quality note. Flagged entries are kept verbatim and are not
    /// rejected by the Turán check.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flag: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Catalog {
    entries: BTreeMap<Vec<String>, CatalogEntry>,
}

/// Resolves a graph identifier: a named graph or `g6:<graph6>`.
pub fn resolve_graph(id: &str) -> Result<Graph> {
    match id.strip_prefix("g6:") {
        Some(g6) => parse_graph6(g6),
        None => named_graph(id),
    }
}

/// Order of `id` if it names a complete graph `K<n>`.
fn complete_order(id: &str) -> Option<usize> {
    let digits = id.strip_prefix('K')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

pub fn normalize_key<S: AsRef<str>>(ids: &[S]) -> Vec<String> {
    let mut other: Vec<String> = Vec::new();
    let mut complete: Vec<(usize, String)> = Vec::new();
    for id in ids {
        let id = id.as_ref();
        match complete_order(id) {
            Some(n) => complete.push((n, id.to_string())),
            None => other.push(id.to_string()),
        }
    }
    complete.sort();
    other.extend(complete.into_iter().map(|(_, id)| id));
    other
}

pub fn key_string<S: AsRef<str>>(ids: &[S]) -> String {
    let parts: Vec<&str> = ids.iter().map(|s| s.as_ref()).collect();
    format!("({})", parts.join(", "))
}

/// The Turán bound that applies to a two-argument key with a complete second
/// argument and a connected first argument.
fn turan_for_key(key: &[String]) -> Result<Option<u64>> {
    let graphs = key.iter().map(|id| resolve_graph(id)).collect::<Result<Vec<_>>>()?;
    if key.len() != 2 {
        return Ok(None);
    }
    let Some(p) = complete_order(&key[1]) else {
        return Ok(None);
    };
    let h = &graphs[0];
    if p < 2 || h.order() < 2 || !h.is_connected() {
        return Ok(None);
    }
    Ok(Some(turan_lower_bound(h.order() as u64, p as u64)))
}

impl Catalog {
    /// The catalog shipped with the crate.
    pub fn shipped() -> Catalog {
        Catalog::from_json(DEFAULT_CATALOG).expect("shipped catalog is valid")
    }

    pub fn from_json(text: &str) -> Result<Catalog> {
        let raw: Vec<CatalogEntry> = serde_json::from_str(text).map_err(|e| Error::Catalog(e.to_string()))?;
        Catalog::from_entries(raw)
    }

    /// Validates and normalizes entries. Identical duplicates collapse;
    /// conflicting duplicates are an error.
    pub fn from_entries(raw: Vec<CatalogEntry>) -> Result<Catalog> {
        let mut entries = BTreeMap::new();
        for mut e in raw {
            if e.graphs.len() < 2 {
                return Err(Error::Catalog(format!("entry {} needs at least two graphs", key_string(&e.graphs))));
            }
            e.graphs = normalize_key(&e.graphs);
            let key = key_string(&e.graphs);
            if let Some(bound) = turan_for_key(&e.graphs).map_err(|err| Error::Catalog(format!("{key}: {err}")))? {
                if e.value.lo < bound && e.flag.is_none() {
                    return Err(Error::TuranContradiction { key, bound });
                }
            }
            match entries.get(&e.graphs) {
                Some(old) if *old != e => return Err(Error::Catalog(format!("conflicting entries for {key}"))),
                Some(_) => {}
                None => {
                    entries.insert(e.graphs.clone(), e);
                }
            }
        }
        Ok(Catalog { entries })
    }

    pub fn to_json(&self) -> String {
        let list: Vec<&CatalogEntry> = self.entries.values().collect();
        serde_json::to_string_pretty(&list).expect("catalog entries serialize")
    }

    pub fn lookup<S: AsRef<str>>(&self, key: &[S]) -> Option<RamseyValue> {
        self.entry(key).map(|e| RamseyValue::new(e.value, Provenance::Catalog))
    }

    pub fn entry<S: AsRef<str>>(&self, key: &[S]) -> Option<&CatalogEntry> {
        self.entries.get(&normalize_key(key))
    }

    pub fn entries(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Flagged entries, formatted as `key: note`.
    pub fn warnings(&self) -> Vec<String> {
        self.entries
            .values()
            .filter_map(|e| e.flag.as_ref().map(|f| format!("{} = {}: {f}", key_string(&e.graphs), e.value)))
            .collect()
    }

    pub fn insert(&mut self, entry: CatalogEntry) -> Result<()> {
        let mut all: Vec<CatalogEntry> = self.entries.values().cloned().collect();
        all.retain(|e| e.graphs != normalize_key(&entry.graphs));
        all.push(entry);
        *self = Catalog::from_entries(all)?;
        Ok(())
    }
}

impl fmt::Display for Catalog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in self.entries.values() {
            writeln!(f, "R{} = {}", key_string(&e.graphs), e.value)?;
        }
        Ok(())
    }
}

/// Loads a catalog file, or the shipped catalog when `path` is `None`.
pub fn load_catalog(path: Option<&Path>) -> Result<Catalog> {
    match path {
        None => Ok(Catalog::shipped()),
        Some(p) => Catalog::from_json(&std::fs::read_to_string(p)?),
    }
}
