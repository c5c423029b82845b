//! Stahl's formula for R(F, K_p) over forests, checked against search for
//! the trees it covers.

use ramsey_good::bounds::{stahl_forest, ForestSpec};
use ramsey_good::enumerate::forests;
use ramsey_good::search::{ramsey_number, SearchOptions};

fn main() -> ramsey_good::Result<()> {
    for spec in ["k1=1", "k2=2", "k1=2,k3=1", "k2=1,k4=1", "k5=1", "k2=3"] {
        let f: ForestSpec = spec.parse()?;
        let row: Vec<String> = (2..=6).map(|p| stahl_forest(&f, p).to_string()).collect();
        println!("{f:<12} p=2..6: {}", row.join(" "));
    }
    let opts = SearchOptions::new(100_000_000);
    println!();
    for f in forests(4).into_iter().filter(|f| f.is_connected()) {
        let spec = ForestSpec::from_graph(&f)?;
        let searched = ramsey_number(&f, 3, &opts)?;
        println!("{f:?} ({spec}): formula {}, search {}", stahl_forest(&spec, 3), searched.value);
    }
    Ok(())
}
