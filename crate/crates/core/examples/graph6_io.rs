//! Named graphs and graph6 round trips.
//!
//! cargo run --example graph6_io -- "IheA@GUAo"

use ramsey_good::{named_graph, parse_graph6, to_graph6};

fn main() -> ramsey_good::Result<()> {
    for name in ["K3", "P3", "C5", "K4-e", "H1", "H5", "Petersen"] {
        let g = named_graph(name)?;
        println!(
            "{name:>8}  {:<12} n={} m={} degrees={:?} girth={}",
            to_graph6(&g),
            g.order(),
            g.edge_count(),
            g.degree_sequence(),
            g.girth()
        );
    }
    if let Some(text) = std::env::args().nth(1) {
        let g = parse_graph6(&text)?;
        println!("\n{text}: {} vertices, edges {:?}", g.order(), g.edges().collect::<Vec<_>>());
    }
    println!("\nbad input: {}", parse_graph6("B~").unwrap_err());
    Ok(())
}
