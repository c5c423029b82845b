//! Greedy embedding of a tree into a graph of large minimum degree.
//!
//! If `δ(G) ≥ |T| − 1`, every tree `T` embeds into `G` with any chosen root
//! image: peel leaves off `T` until only the root is left, then put them back
//! in reverse order. When a leaf is put back its parent is already placed, and
//! the parent's image has at least `|T| − 1` neighbors of which at most
//! `|T| − 2` are taken.

use crate::error::{Error, Result};
use crate::graph::{bits, Embedding, Graph};

/// Removes leaves other than `root`, lowest index first, until only `root`
/// remains. The returned sequence lists the removed vertices followed by `root`.
pub fn leaf_elimination_order(t: &Graph, root: usize) -> Result<Vec<usize>> {
    Ok(peel(t, root)?.into_iter().map(|(v, _)| v).collect())
}

/// Each removed vertex with its neighbor at removal time; the root comes last
/// with no parent.
fn peel(t: &Graph, root: usize) -> Result<Vec<(usize, Option<usize>)>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if root >= t.order() {
        return Err(Error::InvalidInput(format!("root {root} out of range for {} vertices", t.order())));
    }
    let mut alive = t.vertex_mask();
    let mut out = Vec::with_capacity(t.order());
    while alive != 1 << root {
        let leaf = bits(alive & !(1 << root))
            .find(|&v| (t.row(v) & alive).count_ones() == 1)
            .expect("a tree with two or more vertices has two leaves");
        let parent = (t.row(leaf) & alive).trailing_zeros() as usize;
        out.push((leaf, Some(parent)));
        alive &= !(1 << leaf);
    }
    out.push((root, None));
    Ok(out)
}

/// Embeds tree `t` into `g` with `root ↦ target`, placing each vertex on the
/// lowest-index unused neighbor of its parent's image.
///
/// Returns `Ok(None)` when some vertex finds no free neighbor, which cannot
/// happen if `g.min_degree() >= t.order() - 1`.
pub fn embed_tree(t: &Graph, root: usize, g: &Graph, target: usize) -> Result<Option<Embedding>> {
    let order = peel(t, root)?;
    if target >= g.order() {
        return Err(Error::InvalidInput(format!("target {target} out of range for {} vertices", g.order())));
    }
    let mut map = vec![usize::MAX; t.order()];
    map[root] = target;
    let mut used = 1u64 << target;
    for &(v, parent) in order.iter().rev().skip(1) {
        let at = map[parent.expect("only the root has no parent")];
        let free = g.row(at) & !used;
        if free == 0 {
            return Ok(None);
        }
        let x = free.trailing_zeros() as usize;
        map[v] = x;
        used |= 1 << x;
    }
    Ok(Some(Embedding { map }))
}
