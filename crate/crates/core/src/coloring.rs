//! Red/blue colorings of `K_N` and their verification.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, contains_subgraph, low_mask, parse_graph6, to_graph6, Embedding, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    Red,
    Blue,
}

/// A total or partial red/blue assignment to the edges of `K_N`.
///
/// `red` holds the red edges; `decided[v]` marks which pairs `{v, u}` carry a
/// color. Blue is whatever is decided and not red.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoColoring {
    red: Graph,
    decided: Vec<u64>,
}

impl TwoColoring {
    /// Complete coloring with the given red graph; every other pair is blue.
    pub fn from_red(red: Graph) -> Self {
        let n = red.order();
        let decided = (0..n).map(|v| low_mask(n) & !(1u64 << v)).collect();
        TwoColoring { red, decided }
    }

    /// Complete coloring with the given blue graph; every other pair is red.
    pub fn from_blue(blue: &Graph) -> Self {
        TwoColoring::from_red(blue.complement())
    }

    /// Coloring of `K_n` with no pair decided yet.
    pub fn partial(n: usize) -> Result<Self> {
        Ok(TwoColoring { red: Graph::empty(n)?, decided: vec![0; n] })
    }

    pub fn order(&self) -> usize {
        self.red.order()
    }

    pub fn set(&mut self, u: usize, v: usize, color: Color) {
        assert!(u != v && u < self.order() && v < self.order(), "pair ({u}, {v}) out of range");
        self.decided[u] |= 1 << v;
        self.decided[v] |= 1 << u;
        match color {
            Color::Red => self.red.add_edge(u, v),
            Color::Blue => self.red.remove_edge(u, v),
        }
    }

    pub fn color(&self, u: usize, v: usize) -> Option<Color> {
        if self.decided[u] >> v & 1 == 0 {
            None
        } else if self.red.has_edge(u, v) {
            Some(Color::Red)
        } else {
            Some(Color::Blue)
        }
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        (0..n).all(|v| self.decided[v] == low_mask(n) & !(1u64 << v))
    }

    pub fn red(&self) -> &Graph {
        &self.red
    }

    pub fn blue(&self) -> Graph {
        let rows = (0..self.order()).map(|v| self.decided[v] & !self.red.row(v)).collect();
        Graph::from_rows(rows).expect("blue edges form a valid graph")
    }
}

/// Outcome of checking a complete coloring against `(H, K_p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Good,
    RedHFound(Embedding),
    BlueCliqueFound(Vec<usize>),
}

impl Verdict {
    pub fn is_good(&self) -> bool {
        matches!(self, Verdict::Good)
    }
}

/// Finds a clique of `size` vertices inside `cand`, lowest indices first.
pub(crate) fn find_clique(rows: &[u64], cand: u64, size: usize) -> Option<Vec<usize>> {
    fn go(rows: &[u64], cand: u64, size: usize, acc: &mut Vec<usize>) -> bool {
        if size == 0 {
            return true;
        }
        if (cand.count_ones() as usize) < size {
            return false;
        }
        for v in bits(cand) {
            acc.push(v);
            let above = !low_mask(v + 1);
            if go(rows, cand & rows[v] & above, size - 1, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let mut acc = Vec::with_capacity(size);
    go(rows, cand, size, &mut acc).then_some(acc)
}

/// Checks a complete coloring for a red copy of `h` or a blue `K_p`.
///
/// `h` may be any graph, including forests with isolated vertices.
pub fn verify_coloring(c: &TwoColoring, h: &Graph, p: usize) -> Result<Verdict> {
    if !c.is_complete() {
        return Err(Error::InvalidInput("coloring is partial".into()));
    }
    if p < 2 {
        return Err(Error::InvalidInput(format!("clique order p = {p} must be at least 2")));
    }
    if let Some(e) = contains_subgraph(c.red(), h) {
        return Ok(Verdict::RedHFound(e));
    }
    let blue = c.blue();
    if let Some(k) = find_clique(blue.rows(), blue.vertex_mask(), p) {
        return Ok(Verdict::BlueCliqueFound(k));
    }
    Ok(Verdict::Good)
}

/// Witness text: the order `N` on one line, then the graph6 of the red graph.
pub fn export_witness(c: &TwoColoring) -> Result<String> {
    if !c.is_complete() {
        return Err(Error::Witness("cannot export a partial coloring".into()));
    }
    Ok(format!("{}\n{}", c.order(), to_graph6(c.red())))
}

pub fn import_witness(text: &str) -> Result<TwoColoring> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Witness("empty witness".into()))?
        .parse()
        .map_err(|e| Error::Witness(format!("bad order line: {e}")))?;
    let g6 = lines.next().ok_or_else(|| Error::Witness("missing graph6 line".into()))?;
    if lines.next().is_some() {
        return Err(Error::Witness("unexpected trailing lines".into()));
    }
    let red = parse_graph6(g6).map_err(|e| Error::Witness(e.to_string()))?;
    if red.order() != n {
        return Err(Error::Witness(format!("order line says {n} but graph6 encodes {}", red.order())));
    }
    Ok(TwoColoring::from_red(red))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    fn k3() -> Graph {
        Graph::complete(3).unwrap()
    }

    #[test]
    fn pentagon_is_good_for_triangles() {
        // Red C5, blue C5 (the complement of C5 is a 5-cycle).
        let c = TwoColoring::from_red(named_graph("C5").unwrap());
        assert_eq!(c.blue().degree_sequence(), vec![2; 5]);
        assert_eq!(c.blue().girth(), crate::graph::Girth::Finite(5));
        assert_eq!(verify_coloring(&c, &k3(), 3).unwrap(), Verdict::Good);
    }

    #[test]
    fn every_k6_coloring_fails_for_triangles() {
        for code in 0u32..1 << 15 {
            let mut red = Graph::empty(6).unwrap();
            let mut k = 0;
            for j in 1..6 {
                for i in 0..j {
                    if code >> k & 1 == 1 {
                        red.add_edge(i, j);
                    }
                    k += 1;
                }
            }
            let v = verify_coloring(&TwoColoring::from_red(red), &k3(), 3).unwrap();
            assert!(!v.is_good(), "{code:b}");
        }
    }

    #[test]
    fn witnesses_are_concrete() {
        let all_red = TwoColoring::from_red(Graph::complete(5).unwrap());
        match verify_coloring(&all_red, &k3(), 3).unwrap() {
            Verdict::RedHFound(e) => assert!(e.is_valid(&k3(), all_red.red())),
            v => panic!("{v:?}"),
        }
        let all_blue = TwoColoring::from_red(Graph::empty(5).unwrap());
        match verify_coloring(&all_blue, &k3(), 4).unwrap() {
            Verdict::BlueCliqueFound(k) => assert_eq!(k, vec![0, 1, 2, 3]),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn partial_colorings_rejected() {
        let mut c = TwoColoring::partial(3).unwrap();
        c.set(0, 1, Color::Red);
        c.set(0, 2, Color::Blue);
        assert_eq!(c.color(1, 2), None);
        assert_eq!(c.color(2, 0), Some(Color::Blue));
        assert!(verify_coloring(&c, &k3(), 3).is_err());
        c.set(1, 2, Color::Blue);
        assert!(c.is_complete());
        assert!(verify_coloring(&c, &k3(), 3).unwrap().is_good());
        assert!(verify_coloring(&c, &k3(), 1).is_err());
    }

    #[test]
    fn witness_text_format() {
        let c = TwoColoring::from_red(named_graph("C5").unwrap());
        let text = export_witness(&c).unwrap();
        assert_eq!(text, "5\nDhc");
        assert_eq!(import_witness(&text).unwrap(), c);
        assert_eq!(import_witness("5\nDhc\n").unwrap(), c);
        assert!(import_witness("6\nDhc").is_err());
        assert!(import_witness("5").is_err());
        assert!(import_witness("x\nDhc").is_err());
        assert!(import_witness("5\nDhc\nDhc").is_err());
    }

    #[test]
    fn blue_complement_reconstructs_verdicts() {
        let h1 = named_graph("H1").unwrap();
        for red in [named_graph("C5").unwrap(), named_graph("Petersen").unwrap(), named_graph("H7").unwrap()] {
            let c = TwoColoring::from_red(red);
            let again = TwoColoring::from_blue(&c.blue());
            let re = import_witness(&export_witness(&again).unwrap()).unwrap();
            for p in 2..=4 {
                assert_eq!(verify_coloring(&c, &h1, p).unwrap(), verify_coloring(&re, &h1, p).unwrap());
            }
        }
    }
}
