//! Deterministic corpora for the claim checkers.
//!
//! Every instance carries a fingerprint a reader can replay through
//! [`crate::dsl::parse_graph`]. Named families use their family spec; random
//! instances embed the derived seed in the spec and are built *through* the
//! DSL so the fingerprint and the checked graph can never drift apart;
//! everything else (enumerated trees, bitmask-enumerated labeled graphs,
//! tree-plus-extra-edge constructions) uses the literal `edges:` form.

use rand::prelude::*;

use crate::dsl::{fingerprint, parse_graph};
use crate::enumeration::all_trees;
use crate::graph::Graph;
use crate::harness::CheckCtx;
use crate::random::random_tree;

/// A graph plus the spec that rebuilds it.
#[derive(Clone, Debug)]
pub struct Instance {
    pub fingerprint: String,
    pub graph: Graph,
}

/// Builds an instance from a known-good spec.
pub fn instance(spec: &str) -> Instance {
    let graph = parse_graph(spec).unwrap_or_else(|e| panic!("corpus spec {spec:?}: {e}"));
    Instance { fingerprint: spec.to_string(), graph }
}

/// Wraps an already-built graph with its literal fingerprint.
pub fn literal(graph: Graph) -> Instance {
    Instance { fingerprint: fingerprint(&graph), graph }
}

/// Every isomorphism class of trees on `lo..=hi` vertices.
pub fn tree_catalog(lo: usize, hi: usize) -> Vec<Instance> {
    (lo..=hi)
        .flat_map(|n| all_trees(n).expect("catalog sizes stay under the enumeration cap"))
        .map(literal)
        .collect()
}

/// Sampling grid for random-graph densities; members print exactly, so the
/// fingerprints replay exactly.
const P_GRID: [f64; 7] = [0.1, 0.15, 0.2, 0.25, 0.3, 0.4, 0.5];

/// `count` random connected graphs with orders in `n_lo..=n_hi`, drawn on the
/// context's `lane` stream.
pub fn random_connected(ctx: &CheckCtx, lane: u64, count: usize, n_lo: usize, n_hi: usize) -> Vec<Instance> {
    let mut rng = ctx.rng(lane);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_lo..=n_hi);
            let p = P_GRID[rng.gen_range(0..P_GRID.len())];
            let seed: u64 = rng.gen();
            instance(&format!("rand_conn:n={n},p={p},seed={seed}"))
        })
        .collect()
}

/// `count` uniform random labeled trees with orders in `n_lo..=n_hi`.
pub fn random_trees(ctx: &CheckCtx, lane: u64, count: usize, n_lo: usize, n_hi: usize) -> Vec<Instance> {
    let mut rng = ctx.rng(lane);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_lo..=n_hi);
            let seed: u64 = rng.gen();
            instance(&format!("rand_tree:n={n},seed={seed}"))
        })
        .collect()
}

/// A random connected graph with exactly `extra` independent cycles: a
/// random tree plus `extra` distinct random non-edges. Fingerprinted
/// literally.
pub fn random_sparse(rng: &mut impl Rng, n: usize, extra: usize) -> Instance {
    let tree = random_tree(n, rng).expect("n >= 1");
    let mut edges: Vec<(usize, usize)> = tree.edges().to_vec();
    let mut non_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !tree.has_edge(u, v))
        .collect();
    let take = extra.min(non_edges.len());
    for _ in 0..take {
        let i = rng.gen_range(0..non_edges.len());
        edges.push(non_edges.swap_remove(i));
    }
    literal(Graph::from_edge_list(n, &edges).expect("valid by construction"))
}

/// A base graph with pendant (thorn) counts attached per vertex.
#[derive(Clone, Debug)]
pub struct ThornInstance {
    pub fingerprint: String,
    pub base: Graph,
    pub thorns: Vec<usize>,
    pub thorny: Graph,
}

/// `count` random (graph, thorn-vector) pairs with base orders in
/// `n_lo..=n_hi` and thorn counts in `0..=p_max`. With `force_positive`, at
/// least one thorn count per instance is nonzero.
pub fn random_thorn_pairs(
    ctx: &CheckCtx,
    lane: u64,
    count: usize,
    n_lo: usize,
    n_hi: usize,
    p_max: usize,
    force_positive: bool,
) -> Vec<ThornInstance> {
    let mut rng = ctx.rng(lane);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_lo..=n_hi);
            let p = P_GRID[rng.gen_range(0..P_GRID.len())];
            let seed: u64 = rng.gen();
            let base_spec = format!("rand_conn:n={n},p={p},seed={seed}");
            let mut thorns: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=p_max)).collect();
            if force_positive && thorns.iter().all(|&t| t == 0) {
                thorns[0] = 1;
            }
            let list: Vec<String> = thorns.iter().map(|t| t.to_string()).collect();
            // A one-entry list would parse as a uniform count, so thorn
            // vectors here always carry n entries (n >= 2 below).
            let spec = format!("thorn:{base_spec}:p={}", list.join(","));
            let thorny = parse_graph(&spec).expect("spec built from parts that parse");
            let base = parse_graph(&base_spec).expect("spec built from parts that parse");
            ThornInstance { fingerprint: spec, base, thorns, thorny }
        })
        .collect()
}

/// A fixed roster of regular graphs as DSL specs: cycles, completes,
/// balanced bipartite, cocktail-party.
pub fn regular_roster() -> Vec<Instance> {
    let mut specs: Vec<String> = Vec::new();
    specs.extend((3..=20).map(|n| format!("cycle:{n}")));
    specs.extend((2..=9).map(|n| format!("complete:{n}")));
    specs.extend((2..=7).map(|m| format!("kpartite:{m},{m}")));
    specs.extend((2..=5).map(|t| format!("kpartite:{}", vec!["2"; t].join(","))));
    specs.iter().map(|s| instance(s)).collect()
}

/// Every labeled graph on `n` vertices that is connected, by edge-subset
/// enumeration in mask order. Feasible for n <= 6.
pub fn labeled_connected(n: usize) -> Vec<Graph> {
    labeled_filtered(n, |_| true)
}

/// Labeled connected graphs on `n` vertices passing the extra filter.
pub fn labeled_filtered(n: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Graph> {
    assert!((1..=6).contains(&n), "labeled enumeration is sized for n <= 6");
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edge_list(n, &edges).expect("distinct pairs");
        if g.is_connected() && keep(&g) {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_connected_counts_match_the_literature() {
        // Sloane's counts of connected labeled graphs: 1, 1, 4, 38, 728, 26704.
        assert_eq!(labeled_connected(2).len(), 1);
        assert_eq!(labeled_connected(3).len(), 4);
        assert_eq!(labeled_connected(4).len(), 38);
        assert_eq!(labeled_connected(5).len(), 728);
    }

    #[test]
    fn fingerprints_replay() {
        let ctx = CheckCtx { seed: 3, quick: true };
        for inst in random_connected(&ctx, 9, 5, 4, 10) {
            let again = parse_graph(&inst.fingerprint).unwrap();
            assert_eq!(again.edges(), inst.graph.edges());
        }
        for pair in random_thorn_pairs(&ctx, 10, 5, 3, 8, 3, true) {
            let again = parse_graph(&pair.fingerprint).unwrap();
            assert_eq!(again.edges(), pair.thorny.edges());
            assert!(pair.thorns.iter().any(|&t| t > 0));
            assert_eq!(pair.thorns.len(), pair.base.n());
        }
    }

    #[test]
    fn sparse_instances_have_the_requested_cyclomatic_number() {
        let ctx = CheckCtx { seed: 5, quick: true };
        let mut rng = ctx.rng(0);
        for extra in 0..=3 {
            let inst = random_sparse(&mut rng, 12, extra);
            assert!(inst.graph.is_connected());
            assert_eq!(inst.graph.cyclomatic().unwrap(), extra);
            let again = parse_graph(&inst.fingerprint).unwrap();
            assert_eq!(again.edges(), inst.graph.edges());
        }
    }

    #[test]
    fn regular_roster_is_regular() {
        let roster = regular_roster();
        assert!(roster.len() > 30);
        for inst in roster {
            let d = inst.graph.degrees();
            assert!(d.iter().all(|&x| x == d[0]), "{} is regular", inst.fingerprint);
        }
    }
}
