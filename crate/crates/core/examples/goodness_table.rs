//! The goodness table for small graphs with pendant edges, from the shipped
//! catalog and the pendant-edge recurrence.

use ramsey_good::catalog::Catalog;
use ramsey_good::goodness::{goodness, render_markdown, PendantChain};

fn main() -> ramsey_good::Result<()> {
    let cat = Catalog::shipped();
    let columns = [
        ("K3", 10),
        ("H1", 10),
        ("H2", 10),
        ("C4", 9),
        ("H3", 9),
        ("K4", 6),
        ("H4", 5),
        ("H5", 4),
        ("K4-e", 7),
        ("H6", 7),
        ("H7", 7),
    ];
    let mut reports = Vec::new();
    for (name, p_max) in columns {
        reports.push(goodness(&PendantChain::named(name)?, &cat, p_max)?);
    }
    print!("{}", render_markdown(&reports));

    println!("\nwarnings:");
    for r in &reports {
        for w in &r.warnings {
            println!("  {}: {w}", r.graph);
        }
    }
    Ok(())
}
