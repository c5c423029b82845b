//! Exact R(H, K_p) by exhaustive search.
//!
//! cargo run --release --example ramsey_search -- H1 4
//! RAMSEY_GOOD_WORKERS=4 cargo run --release --example ramsey_search -- K4-e 3

use ramsey_good::coloring::export_witness;
use ramsey_good::search::{exists_good_coloring, ramsey_number, SearchOptions, SearchOutcome};
use ramsey_good::cli::parse_graph_arg;

fn main() -> ramsey_good::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let name = args.first().map(String::as_str).unwrap_or("H1");
    let p: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let budget: u64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(1_000_000_000);
    let h = parse_graph_arg(name)?;
    let opts = SearchOptions::from_env(budget);

    let start = std::time::Instant::now();
    let r = ramsey_number(&h, p, &opts)?;
    println!("R({name}, K{p}) = {} ({:?}), {} nodes, {:.2?}", r.value, r.value.provenance, r.nodes, start.elapsed());
    println!("good coloring of K{}:\n{}", r.lower_witness.order(), export_witness(&r.lower_witness)?);

    // Orders below and at the value, one at a time.
    let top = r.value.lo() as usize;
    for n in top.saturating_sub(2).max(1)..=top {
        match exists_good_coloring(n, &h, p, &opts) {
            Ok(v) => {
                let what = match v.outcome {
                    SearchOutcome::WitnessFound(_) => "good coloring exists",
                    SearchOutcome::Exhausted => "none (exhausted)",
                };
                println!("  K{n}: {what}, {} nodes", v.nodes);
            }
            Err(e) => println!("  K{n}: {e}"),
        }
    }
    Ok(())
}
