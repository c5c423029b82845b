//! Isomorph-free enumeration of small graphs.

use ramsey_good::enumerate::{connected_graphs, forests, graphs, graphs_where, isomorphic, trees};
use ramsey_good::{named_graph, Girth};

fn main() {
    println!(" n  graphs  connected  forests  trees  triangle-free");
    for n in 1..=7 {
        let tf = graphs_where(n, |g| g.girth() != Girth::Finite(3)).len();
        println!(
            "{n:>2}  {:>6}  {:>9}  {:>7}  {:>5}  {tf:>13}",
            graphs(n).len(),
            connected_graphs(n).len(),
            forests(n).len(),
            trees(n).len()
        );
    }
    let h1 = named_graph("H1").unwrap();
    let shuffled = h1.relabel(&[2, 0, 3, 1]);
    println!("\nH1 relabeled is still H1: {}", isomorphic(&h1, &shuffled));
    println!("H1 vs K4-e: {}", isomorphic(&h1, &named_graph("K4-e").unwrap()));
}
