//! Closed forms: p-goodness, the pendant recurrence, the multicolor tree
//! value and the girth threshold.

use ramsey_good::bounds::{goodness_failure_threshold, multicolor_tree, p_good, pendant_recurrence};
use ramsey_good::value::{Bounds, Provenance, RamseyValue};
use ramsey_good::Girth;

fn main() {
    println!("H1, p=4, R=10: {:?}", p_good(4, 4, &Bounds::exact(10)));
    println!("H1, p=5, R=14: {:?}", p_good(4, 5, &Bounds::exact(14)));
    println!("H6, p=7, R in 28-31: {:?}", p_good(5, 7, &Bounds::interval(28, 31)));

    let cat = |v| RamseyValue::exact(v, Provenance::Catalog);
    println!("R(H1,K4) = max(R(K3,K4), R(H1,K3) + 3) = {}", pendant_recurrence(&cat(9), &cat(7), 4));
    let k4e_k7 = RamseyValue::interval(28, 31, Provenance::Catalog);
    println!("R(H6,K7) = max(28-31, 21 + 4) = {}", pendant_recurrence(&k4e_k7, &cat(21), 5));

    println!("R(P3, K3, K3) = {}", multicolor_tree(3, 6));
    println!("R(P4, K3, K4) = {}", multicolor_tree(4, 9));

    for (h, ell) in [(3, 3), (4, 3), (5, 4)] {
        let t = goodness_failure_threshold(h, Girth::Finite(ell)).unwrap();
        println!("h={h} girth={ell}: not p-good once ln p >= {:.3}", t.ln_value);
    }
    println!("tree: {}", goodness_failure_threshold(4, Girth::Infinite).unwrap_err());
}
