//! Random high-girth graphs with small independence number.
//!
//! Sample `G(n, r)` with `r = n^(λ-1)`, delete one vertex from each cycle of
//! length at most `ℓ`, and certify the result exactly: girth above `ℓ` and no
//! independent set of size `p = ⌈3 n^(1-λ) ln n⌉`. Coloring the survivor red
//! and its complement blue then shows `R(H, K_p) > |G'|` for every `H` that
//! has a cycle of length at most `ℓ`.
//!
//! The logarithm is natural. Certification is per instance; nothing here
//! checks the asymptotic growth of `R(H, K_p) / p`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::TwoColoring;
use crate::error::{Error, Result};
use crate::graph::{bits, Girth, Graph};

/// Identifier stored with every witness. Seeds only replay under this generator.
pub const RNG_ALGORITHM: &str = "chacha8 (rand_chacha 0.9, seed_from_u64)";

/// `G(n, r)`: pairs `i < j` in lexicographic order, each kept when a uniform
/// draw from `[0, 1)` is below `r`.
pub fn sample_gnp(n: usize, r: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::InvalidInput(format!("edge probability {r} is not in [0, 1]")));
    }
    let mut g = Graph::empty(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..n {
        for j in i + 1..n {
            if rng.random::<f64>() < r {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Vertices whose removal leaves girth above `ell`: while a cycle of length
/// at most `ell` survives, a shortest one is found and its lowest vertex removed.
pub fn short_cycle_vertices(g: &Graph, ell: usize) -> Vec<usize> {
    let mut alive = g.vertex_mask();
    let mut removed = Vec::new();
    loop {
        let kept: Vec<usize> = bits(alive).collect();
        match g.induced(alive).shortest_cycle() {
            Some(c) if c.len() <= ell => {
                let v = kept[*c.iter().min().unwrap()];
                removed.push(v);
                alive &= !(1 << v);
            }
            _ => break,
        }
    }
    removed.sort_unstable();
    removed
}

fn check_lambda(lambda: f64, ell: usize) -> Result<()> {
    if ell < 3 {
        return Err(Error::Domain(format!("girth threshold {ell} must be at least 3")));
    }
    if !(lambda > 0.0 && lambda < 1.0 / ell as f64) {
        return Err(Error::Domain(format!("lambda = {lambda} is not in (0, 1/{ell})")));
    }
    Ok(())
}

/// Bound on the expected number of cycles of length at most `ell` in
/// `G(n, n^(λ-1))`: `2 n^(λℓ-1) / (1 - n^(-λ))`.
pub fn eq1_bound(n: f64, lambda: f64, ell: usize) -> Result<f64> {
    check_lambda(lambda, ell)?;
    if n < 2.0 {
        return Err(Error::Domain(format!("n = {n} must be at least 2")));
    }
    Ok(2.0 * n.powf(lambda * ell as f64 - 1.0) / (1.0 - n.powf(-lambda)))
}

/// Natural log of [`eq1_bound`], taking `ln n` so that `n` may be far beyond `f64`.
pub fn eq1_bound_ln(ln_n: f64, lambda: f64, ell: usize) -> Result<f64> {
    check_lambda(lambda, ell)?;
    if ln_n < std::f64::consts::LN_2 {
        return Err(Error::Domain(format!("ln n = {ln_n} must be at least ln 2")));
    }
    Ok(std::f64::consts::LN_2 + (lambda * ell as f64 - 1.0) * ln_n - (-(-lambda * ln_n).exp()).ln_1p())
}

/// `⌈3 n^(1-λ) ln n⌉`.
pub fn independence_threshold(n: usize, lambda: f64) -> u64 {
    let n = n as f64;
    (3.0 * n.powf(1.0 - lambda) * n.ln()).ceil() as u64
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessResult {
    /// The graph left after deleting short-cycle vertices, as graph6.
    pub graph: Graph,
    pub n: usize,
    pub ell: usize,
    pub lambda: f64,
    pub r: f64,
    pub p: u64,
    pub seed: u64,
    pub rng: String,
    pub deleted: usize,
    pub girth: Girth,
    pub independence: usize,
    pub certified: bool,
    /// Which condition failed, when not certified.
    pub failure: Option<String>,
}

impl WitnessResult {
    /// Red is the witness graph, blue its complement.
    pub fn coloring(&self) -> TwoColoring {
        TwoColoring::from_red(self.graph.clone())
    }
}

/// Samples, prunes and certifies one witness. `lambda` defaults to `ell^-2`.
pub fn construct_witness(n: usize, ell: usize, lambda: Option<f64>, seed: u64) -> Result<WitnessResult> {
    let lambda = lambda.unwrap_or(1.0 / (ell * ell) as f64);
    check_lambda(lambda, ell)?;
    if n < 2 {
        return Err(Error::Domain(format!("n = {n} must be at least 2")));
    }
    let r = (n as f64).powf(lambda - 1.0);
    let g = sample_gnp(n, r, seed)?;
    let removed = short_cycle_vertices(&g, ell);
    let keep = removed.iter().fold(g.vertex_mask(), |m, &v| m & !(1u64 << v));
    let graph = g.induced(keep);
    let p = independence_threshold(n, lambda);
    let girth = graph.girth();
    let independence = graph.independence_number()?;
    let failure = if !girth.exceeds(ell) {
        Some(format!("girth {girth} does not exceed {ell}"))
    } else if independence as u64 >= p {
        Some(format!("independence number {independence} is not below p = {p}"))
    } else {
        None
    };
    Ok(WitnessResult {
        graph,
        n,
        ell,
        lambda,
        r,
        p,
        seed,
        rng: RNG_ALGORITHM.to_string(),
        deleted: removed.len(),
        girth,
        independence,
        certified: failure.is_none(),
        failure,
    })
}

/// True when `g` has girth above `ell` and no independent set of size `p`.
pub fn verify_superlinearity_witness(g: &Graph, ell: usize, p: u64) -> Result<bool> {
    Ok(g.girth().exceeds(ell) && (g.independence_number()? as u64) < p)
}
