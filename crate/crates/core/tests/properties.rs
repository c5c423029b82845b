use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ramsey_good::coloring::{export_witness, import_witness, verify_coloring, TwoColoring, Verdict};
use ramsey_good::enumerate::{connected_graphs, isomorphic, trees};
use ramsey_good::search::{exists_good_coloring, ramsey_number, SearchOptions, SearchOutcome};
use ramsey_good::tree::embed_tree;
use ramsey_good::{Girth, Graph};

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    g
}

fn arb_graph(max_n: usize, density: f64) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(proptest::bool::weighted(density), n * (n - 1) / 2).prop_map(move |b| graph_from_bits(n, &b))
    })
}

fn alpha_by_subsets(g: &Graph) -> usize {
    let n = g.order();
    (0u64..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || g.row(v) & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn independence_matches_subset_enumeration_at_twenty(bits in proptest::collection::vec(proptest::bool::weighted(0.25), 190)) {
        let g = graph_from_bits(20, &bits);
        prop_assert_eq!(g.independence_number().unwrap(), alpha_by_subsets(&g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn infinite_girth_iff_components_are_trees(g in arb_graph(20, 0.12)) {
        let acyclic = g.components().iter().all(|&c| g.induced(c).is_tree());
        prop_assert_eq!(g.girth() == Girth::Infinite, acyclic);
    }

    #[test]
    fn pendant_split_reattaches(g in arb_graph(12, 0.3), attach in 0usize..12) {
        let g = g.with_pendant(attach % g.order()).unwrap();
        let split = g.pendant_decompose().unwrap();
        let at = split.attach - usize::from(split.attach > split.leaf);
        prop_assert!(isomorphic(&split.core.with_pendant(at).unwrap(), &g));
    }

    #[test]
    fn witness_text_round_trips(g in arb_graph(30, 0.5)) {
        let c = TwoColoring::from_red(g);
        prop_assert_eq!(import_witness(&export_witness(&c).unwrap()).unwrap(), c);
    }

    #[test]
    fn verdict_witnesses_are_real(g in arb_graph(9, 0.5), hi in 0usize..21, p in 2usize..5) {
        let hs: Vec<Graph> = (3..=5).flat_map(connected_graphs).collect();
        let h = &hs[hi % hs.len()];
        let c = TwoColoring::from_red(g);
        match verify_coloring(&c, h, p).unwrap() {
            Verdict::RedHFound(e) => prop_assert!(e.is_valid(h, c.red())),
            Verdict::BlueCliqueFound(k) => {
                prop_assert_eq!(k.len(), p);
                let blue = c.blue();
                for (i, &u) in k.iter().enumerate() {
                    for &v in &k[i + 1..] {
                        prop_assert!(blue.has_edge(u, v));
                    }
                }
            }
            Verdict::Good => {}
        }
    }
}

#[test]
fn tree_embedding_is_total_above_the_degree_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=10 {
        let all = trees(n);
        let mut battery = Vec::new();
        while battery.len() < 3 {
            let m = rng.random_range(n.max(2)..=20);
            let q = rng.random_range(0.5..=1.0);
            let mut g = Graph::empty(m).unwrap();
            for u in 0..m {
                for v in u + 1..m {
                    if rng.random::<f64>() < q {
                        g.add_edge(u, v);
                    }
                }
            }
            if g.min_degree() + 1 >= n {
                battery.push(g);
            }
        }
        for t in &all {
            for g in &battery {
                for root in 0..n {
                    for target in 0..g.order() {
                        let e = embed_tree(t, root, g, target).unwrap().expect("greedy placement never stalls");
                        assert!(e.is_valid(t, g));
                        assert_eq!(e.map[root], target);
                    }
                }
            }
        }
    }
}

#[test]
fn ramsey_values_bracket_correctly_for_small_graphs() {
    let opts = SearchOptions::new(50_000_000);
    for h in (3..=4).flat_map(connected_graphs) {
        let r = ramsey_number(&h, 3, &opts).unwrap();
        let n = r.value.value.exact_value().expect("small cases finish") as usize;
        assert!(n as u64 >= 2 * (h.order() as u64 - 1) + 1);
        assert_eq!(r.lower_witness.order(), n - 1);
        assert!(verify_coloring(&r.lower_witness, &h, 3).unwrap().is_good());
        let below = exists_good_coloring(n - 1, &h, 3, &opts).unwrap();
        assert!(matches!(below.outcome, SearchOutcome::WitnessFound(_)));
        for m in n..=n + 1 {
            assert_eq!(exists_good_coloring(m, &h, 3, &opts).unwrap().outcome, SearchOutcome::Exhausted);
        }
    }
}
