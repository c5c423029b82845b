//! The shipped catalog of known values, lookups and a user catalog.

use ramsey_good::catalog::{Catalog, CatalogEntry, Source};
use ramsey_good::value::Bounds;

fn main() -> ramsey_good::Result<()> {
    let mut cat = Catalog::shipped();
    println!("{} entries", cat.len());
    for key in [["K3", "K5"], ["K6", "K4"], ["K4-e", "K7"], ["H6", "K7"], ["H9", "K3"]] {
        match cat.lookup(&key) {
            Some(v) => println!("R({}, {}) = {v}", key[0], key[1]),
            None => println!("R({}, {}) missing", key[0], key[1]),
        }
    }
    println!("\nflagged entries:");
    for w in cat.warnings() {
        println!("  {w}");
    }

    let bad = CatalogEntry { graphs: vec!["H1".into(), "K3".into()], value: Bounds::exact(5), source: Source::User, flag: None };
    println!("\ninserting R(H1, K3) = 5: {}", cat.insert(bad).unwrap_err());
    let ok = CatalogEntry { graphs: vec!["g6:Bw".into(), "K6".into()], value: Bounds::exact(18), source: Source::User, flag: None };
    cat.insert(ok)?;
    println!("after insert: {} entries", cat.len());
    Ok(())
}
