//! Checking red/blue colorings and moving witnesses through text.

use ramsey_good::coloring::{export_witness, import_witness, verify_coloring, TwoColoring};
use ramsey_good::{named_graph, Graph};

fn main() -> ramsey_good::Result<()> {
    let k3 = named_graph("K3")?;
    let pentagon = TwoColoring::from_red(named_graph("C5")?);
    println!("red C5 / blue C5 vs (K3, K3): {:?}", verify_coloring(&pentagon, &k3, 3)?);

    let text = export_witness(&pentagon)?;
    println!("witness file:\n{text}");
    assert_eq!(import_witness(&text)?, pentagon);

    let all_red = TwoColoring::from_red(Graph::complete(6)?);
    println!("all red K6: {:?}", verify_coloring(&all_red, &k3, 3)?);
    let all_blue = TwoColoring::from_blue(&Graph::complete(6)?);
    println!("all blue K6, p = 4: {:?}", verify_coloring(&all_blue, &named_graph("H1")?, 4)?);
    Ok(())
}
