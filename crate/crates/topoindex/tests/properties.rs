//! Cross-cutting invariants on generated inputs: relabeling invariance,
//! index interrelations, constructions that must realize what they promise,
//! and order properties of the majorization machinery.

use proptest::prelude::*;

use topoindex::degree_indices::{degree_index, IndexKind, IndexParams, IndexValue};
use topoindex::distance_indices::{distance_index, DistanceKind, DistanceParams};
use topoindex::enumeration::{majorizes, majorization_chain, prufer_decode};
use topoindex::generators::{greedy_tree, thorny};
use topoindex::graph::{DegreeSequence, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if mask[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).expect("pairs are distinct and in range")
        })
    })
}

fn arb_tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0..n, n - 2)
            .prop_map(move |code| prufer_decode(&code, n).expect("codes in range decode"))
    })
}

/// A permutation of 0..n, as the argsort of random keys.
fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(any::<u64>(), n).prop_map(|keys| {
        let mut order: Vec<usize> = (0..keys.len()).collect();
        order.sort_by_key(|&i| keys[i]);
        order
    })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> =
        g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edge_list(g.n(), &edges).expect("permuted pairs stay distinct")
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * b.abs().max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    // Every registered index is a graph invariant: relabeling the vertices
    // never changes the value (exactly for integer kinds, within float noise
    // for real ones, and errors must agree too).
    #[test]
    fn indices_ignore_vertex_labels(
        (g, perm) in arb_graph(8).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), permutation(n))
        })
    ) {
        let h = relabel(&g, &perm);
        let params = IndexParams::default();
        for kind in IndexKind::ALL {
            match (degree_index(&g, kind, &params), degree_index(&h, kind, &params)) {
                (Ok(IndexValue::Int(a)), Ok(IndexValue::Int(b))) => prop_assert_eq!(a, b, "{}", kind),
                (Ok(a), Ok(b)) => prop_assert!(close(a.as_f64(), b.as_f64()), "{}: {:?} vs {:?}", kind, a, b),
                (Err(_), Err(_)) => {}
                (a, b) => prop_assert!(false, "{}: one side errored: {:?} vs {:?}", kind, a, b),
            }
        }
    }

    // HM1 counts (du + dv)^2 per edge, which expands exactly into the
    // forgotten index plus twice the second Zagreb index.
    #[test]
    fn hyper_zagreb_splits_into_forgotten_plus_second(g in arb_graph(9)) {
        let params = IndexParams::default();
        let hm1 = degree_index(&g, IndexKind::Hm1, &params).unwrap();
        let f = degree_index(&g, IndexKind::F, &params).unwrap();
        let m2 = degree_index(&g, IndexKind::M2, &params).unwrap();
        match (hm1, f, m2) {
            (IndexValue::Int(h), IndexValue::Int(ff), IndexValue::Int(m)) => {
                prop_assert_eq!(h, ff + 2 * m);
            }
            (h, ff, m) => prop_assert!(close(h.as_f64(), ff.as_f64() + 2.0 * m.as_f64())),
        }
    }

    // The modified second Zagreb index is the general Randic index frozen at
    // exponent -1; two independent code paths must agree.
    #[test]
    fn modified_second_zagreb_is_randic_at_minus_one(g in arb_graph(9)) {
        let mm2 = degree_index(&g, IndexKind::ModM2, &IndexParams::default()).unwrap().as_f64();
        let at_minus_one = IndexParams { tau: -1.0, ..IndexParams::default() };
        let r = degree_index(&g, IndexKind::RandicGeneral, &at_minus_one).unwrap().as_f64();
        prop_assert!(close(mm2, r), "{mm2} vs {r}");
    }

    // Attaching pendants splits the Sombor index exactly: old edges at their
    // raised degrees plus one term per new pendant edge.
    #[test]
    fn sombor_splits_over_pendant_attachment(
        (g, thorns) in arb_graph(7).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), prop::collection::vec(0..=3usize, n))
        })
    ) {
        let star = thorny(&g, &thorns).expect("one count per vertex");
        let d = g.degrees();
        let raised = |i: usize| (d[i] + thorns[i]) as f64;
        let split: f64 = g
            .edges()
            .iter()
            .map(|&(u, v)| (raised(u).powi(2) + raised(v).powi(2)).sqrt())
            .sum::<f64>()
            + (0..g.n())
                .map(|i| thorns[i] as f64 * (raised(i).powi(2) + 1.0).sqrt())
                .sum::<f64>();
        let direct = degree_index(&star, IndexKind::So, &IndexParams::default()).unwrap().as_f64();
        prop_assert!(close(direct, split), "{direct} vs {split}");
    }

    // Decoding a code gives each vertex degree 1 plus its multiplicity in
    // the code; in particular the result is a tree on the stated order.
    #[test]
    fn prufer_multiplicities_set_degrees(
        (n, code) in (3..=12usize).prop_flat_map(|n| (Just(n), prop::collection::vec(0..n, n - 2)))
    ) {
        let t = prufer_decode(&code, n).expect("codes in range decode");
        prop_assert_eq!(t.n(), n);
        prop_assert_eq!(t.m(), n - 1);
        prop_assert!(t.is_connected());
        let degs = t.degrees();
        for v in 0..n {
            let mult = code.iter().filter(|&&c| c == v).count();
            prop_assert_eq!(degs[v], 1 + mult, "vertex {}", v);
        }
    }

    // The greedy tree must realize exactly the multiset it was asked for,
    // with layer sizes accounting for every vertex.
    #[test]
    fn greedy_tree_realizes_its_multiset(t in arb_tree(12)) {
        let want = DegreeSequence::from_graph(&t);
        let built = greedy_tree(&want).expect("came from a tree");
        let got = DegreeSequence::from_graph(&built.graph);
        prop_assert_eq!(got.values(), want.values());
        prop_assert_eq!(built.layers.iter().sum::<usize>(), t.n());
    }

    // Every tree degree multiset sits below the star in majorization order,
    // and the connecting chain moves one unit per step, monotonically.
    #[test]
    fn tree_multisets_chain_to_the_star(t in arb_tree(10)) {
        let seq = DegreeSequence::from_graph(&t);
        let n = t.n();
        let mut star = vec![1usize; n];
        star[0] = n - 1;
        let star = DegreeSequence::new(star);
        prop_assert!(majorizes(&star, &seq));
        let chain = majorization_chain(&seq, &star).expect("star majorizes every tree multiset");
        prop_assert_eq!(chain.first().unwrap().values(), seq.values());
        prop_assert_eq!(chain.last().unwrap().values(), star.values());
        for pair in chain.windows(2) {
            prop_assert!(majorizes(&pair[1], &pair[0]));
            let moved: usize = pair[0]
                .values()
                .iter()
                .zip(pair[1].values())
                .map(|(&a, &b)| a.abs_diff(b))
                .sum();
            prop_assert_eq!(moved, 2, "one unit leaves one slot and enters another");
        }
    }

    // On trees the Wiener and Szeged sums are the same number.
    #[test]
    fn trees_tie_wiener_and_szeged(t in arb_tree(12)) {
        let params = DistanceParams::default();
        let w = distance_index(&t, DistanceKind::Wiener, &params).unwrap();
        let sz = distance_index(&t, DistanceKind::Szeged, &params).unwrap();
        prop_assert_eq!(w.as_int(), sz.as_int());
        prop_assert!(w.as_int().is_some());
    }
}
