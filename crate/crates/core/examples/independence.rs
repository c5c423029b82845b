//! Exact independence numbers by branch and bound.

use ramsey_good::graph::independence_number_with_cutoff;
use ramsey_good::named_graph;
use ramsey_good::sampler::sample_gnp;

fn main() -> ramsey_good::Result<()> {
    for name in ["K6", "C5", "C8", "Petersen", "S5"] {
        println!("alpha({name}) = {}", named_graph(name)?.independence_number()?);
    }
    for seed in 0..4 {
        let g = sample_gnp(64, 0.1, seed)?;
        println!("G(64, 0.1) seed {seed}: {} edges, alpha = {}", g.edge_count(), g.independence_number()?);
    }
    let g = sample_gnp(30, 0.5, 1)?;
    println!("cutoff 20 on 30 vertices: {}", independence_number_with_cutoff(&g, 20).unwrap_err());
    Ok(())
}
