//! Greedy tree embedding into graphs of minimum degree at least |T| - 1.

use ramsey_good::enumerate::trees;
use ramsey_good::named_graph;
use ramsey_good::tree::{embed_tree, leaf_elimination_order};

fn main() -> ramsey_good::Result<()> {
    let pet = named_graph("Petersen")?;
    let star = named_graph("S3")?;
    println!("elimination order of S3 from its center: {:?}", leaf_elimination_order(&star, 0)?);
    for target in [0, 5, 9] {
        let e = embed_tree(&star, 0, &pet, target)?.expect("min degree 3 suffices");
        println!("S3 -> Petersen, center at {target}: {:?}", e.map);
    }

    // Every tree on 4 vertices, every root, every target in the Petersen graph.
    let mut count = 0;
    for t in trees(4) {
        for root in 0..4 {
            for target in 0..10 {
                let e = embed_tree(&t, root, &pet, target)?.unwrap();
                assert!(e.is_valid(&t, &pet) && e.map[root] == target);
                count += 1;
            }
        }
    }
    println!("{count} rooted embeddings of 4-vertex trees into Petersen");

    let s4 = named_graph("S4")?;
    println!("S4 into K4: {:?}", embed_tree(&s4, 0, &named_graph("K4")?, 0)?);
    Ok(())
}
