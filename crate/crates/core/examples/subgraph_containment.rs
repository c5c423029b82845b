//! Non-induced subgraph search with a concrete embedding.

use ramsey_good::{contains_subgraph, named_graph};

fn main() -> ramsey_good::Result<()> {
    let cases = [("K4", "H1"), ("C5", "K3"), ("Petersen", "C4"), ("Petersen", "C5"), ("Petersen", "P6"), ("K4", "C4")];
    for (host, pattern) in cases {
        let g = named_graph(host)?;
        let h = named_graph(pattern)?;
        match contains_subgraph(&g, &h) {
            Some(e) => println!("{pattern} in {host}: {:?}", e.map),
            None => println!("{pattern} in {host}: not found"),
        }
    }
    Ok(())
}
