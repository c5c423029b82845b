//! Random high-girth graphs with small independence number, certified exactly.
//!
//! cargo run --release --example girth_witness -- 60 4 7

use ramsey_good::coloring::verify_coloring;
use ramsey_good::enumerate::connected_graphs;
use ramsey_good::sampler::{construct_witness, eq1_bound, verify_superlinearity_witness};
use ramsey_good::{named_graph, Girth};

fn main() -> ramsey_good::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (n, ell, seed) = (*args.first().unwrap_or(&60), *args.get(1).unwrap_or(&4), *args.get(2).unwrap_or(&7) as u64);

    let w = construct_witness(n, ell, None, seed)?;
    println!("{}", serde_json::to_string_pretty(&w).unwrap());
    println!("expected short cycles at n = {n}: <= {:.3}", eq1_bound(n as f64, w.lambda, ell)?);

    let pet = named_graph("Petersen")?;
    println!("\nPetersen as a witness for girth 4, p = 5: {}", verify_superlinearity_witness(&pet, 4, 5)?);
    let coloring = ramsey_good::coloring::TwoColoring::from_red(pet);
    let mut good = 0;
    let mut total = 0;
    for h in 3..=6 {
        for g in connected_graphs(h) {
            if matches!(g.girth(), Girth::Finite(l) if l <= 4) {
                total += 1;
                good += usize::from(verify_coloring(&coloring, &g, 5)?.is_good());
            }
        }
    }
    println!("so R(H, K5) > 10 for {good}/{total} connected H on <= 6 vertices with a cycle of length <= 4");
    Ok(())
}
