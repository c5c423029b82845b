//! The Turán coloring: p - 1 red cliques of order h - 1.

use ramsey_good::bounds::{turan_coloring, turan_lower_bound};
use ramsey_good::coloring::verify_coloring;
use ramsey_good::enumerate::connected_graphs;

fn main() -> ramsey_good::Result<()> {
    for (h, p) in [(3, 3), (4, 3), (5, 4), (6, 5)] {
        let c = turan_coloring(h, p)?;
        let battery = connected_graphs(h);
        let good = battery.iter().filter(|g| verify_coloring(&c, g, p).map(|v| v.is_good()).unwrap_or(false)).count();
        println!(
            "h={h} p={p}: K{} colored, bound {}, good for {good}/{} connected graphs on {h} vertices",
            c.order(),
            turan_lower_bound(h as u64, p as u64),
            battery.len()
        );
    }
    Ok(())
}
