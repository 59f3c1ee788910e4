//! Deterministic graph family constructors.
//!
//! Vertex numbering is fixed per family (documented on each function), so a
//! generator call is a complete, reproducible description of its graph.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{DegreeSequence, Graph};

#[derive(Debug, Error)]
pub enum GenError {
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("multipartite parts must be nonempty and positive, got {0:?}")]
    BadPartition(Vec<usize>),
    #[error("star-like tree needs at least one branch of positive length, got {0:?}")]
    BadBranches(Vec<usize>),
    #[error("degree sequence {seq} is not realizable by a tree: sum {sum} != 2(n-1) = {target}{zeros}")]
    NotTreeRealizable { seq: DegreeSequence, sum: usize, target: usize, zeros: &'static str },
    #[error("caterpillar needs backbone degree >= 2 and at least one interior vertex, got d1={d1}, k={k}")]
    BadCaterpillar { d1: usize, k: usize },
    #[error("caterpillar with d1={d1}, k={k} has (k+2)*d1 = {expected} vertices, but {given} were requested")]
    CaterpillarOrder { d1: usize, k: usize, expected: usize, given: usize },
    #[error("thorn list has {given} entries for a graph on {expected} vertices")]
    ThornLength { expected: usize, given: usize },
}

/// Path 0-1-...-(n-1). `path(1)` is a single vertex.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges_unchecked(n, &edges)
}

/// Cycle with edges i-(i+1 mod n); needs n >= 3.
pub fn cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::CycleTooSmall(n));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edges_unchecked(n, &edges))
}

/// Star on n vertices with center 0.
pub fn star(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::from_edges_unchecked(n, &edges)
}

/// Complete graph on n vertices.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges_unchecked(n, &edges)
}

/// Complete multipartite graph; vertices of part i occupy a consecutive id
/// block after the parts before it.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, GenError> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(GenError::BadPartition(parts.to_vec()));
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges_unchecked(n, &edges))
}

/// Balanced double star on 2t+2 vertices: adjacent centers 0 and 1, each
/// carrying t pendants (ids 2..t+2 on center 0, then t+2..2t+2 on center 1).
pub fn double_star(t: usize) -> Graph {
    let n = 2 * t + 2;
    let mut edges = vec![(0, 1)];
    for i in 0..t {
        edges.push((0, 2 + i));
        edges.push((1, 2 + t + i));
    }
    Graph::from_edges_unchecked(n, &edges)
}

/// Spider: paths of the given lengths glued at a common center 0. Branch i's
/// vertices follow those of branches before it.
pub fn star_like(branches: &[usize]) -> Result<Graph, GenError> {
    if branches.is_empty() || branches.contains(&0) {
        return Err(GenError::BadBranches(branches.to_vec()));
    }
    let n = 1 + branches.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for &len in branches {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Ok(Graph::from_edges_unchecked(n, &edges))
}

/// A greedy tree together with its breadth-first layer sizes.
#[derive(Clone, Debug)]
pub struct GreedyTree {
    pub graph: Graph,
    /// Vertices per layer, root layer first.
    pub layers: Vec<usize>,
}

/// Builds the greedy tree of a degree sequence.
///
/// Degrees are assigned in non-increasing order along a breadth-first
/// traversal: the root takes the largest degree, then each frontier vertex in
/// turn fills its remaining slots with the largest unassigned degrees.
/// Vertices are numbered in assignment order, so the result is unique up to
/// the (irrelevant) order among equal degrees.
pub fn greedy_tree(d: &DegreeSequence) -> Result<GreedyTree, GenError> {
    if !d.is_tree_realizable() {
        return Err(GenError::NotTreeRealizable {
            seq: d.clone(),
            sum: d.sum(),
            target: 2 * d.len().saturating_sub(1),
            zeros: if d.min() == 0 && d.len() > 1 { " (zero-degree entry)" } else { "" },
        });
    }
    let degrees = d.values();
    let n = degrees.len();
    if n == 1 {
        return Ok(GreedyTree { graph: Graph::empty(1), layers: vec![1] });
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut layers = vec![1usize];
    let mut next = 1; // next vertex id == next degree to hand out
    let mut frontier = vec![(0usize, degrees[0])]; // (vertex, open slots)
    while next < n {
        let mut new_frontier = Vec::new();
        for (v, slots) in frontier {
            for _ in 0..slots {
                let child = next;
                next += 1;
                edges.push((v, child));
                if degrees[child] > 1 {
                    new_frontier.push((child, degrees[child] - 1));
                }
            }
        }
        layers.push(edges.len() + 1 - layers.iter().sum::<usize>());
        frontier = new_frontier;
    }
    Ok(GreedyTree { graph: Graph::from_edges_unchecked(n, &edges), layers })
}

/// A uniform caterpillar and its edge census.
#[derive(Clone, Debug)]
pub struct Caterpillar {
    pub graph: Graph,
    /// Backbone vertex ids in path order.
    pub spine: Vec<usize>,
    /// Multiplicity of each endpoint-degree pair `(lo, hi)` over the edges.
    pub census: BTreeMap<(usize, usize), usize>,
}

/// Uniform caterpillar: a backbone path of k+2 vertices whose two ends have
/// degree d1 and whose k interior vertices have degree d1+1, every backbone
/// vertex carrying d1-1 pendants.
///
/// The order is forced to (k+2)*d1; passing `expect_n` asserts it. Backbone
/// ids are 0..k+2 in path order, pendants appended backbone-first.
pub fn caterpillar(d1: usize, k: usize, expect_n: Option<usize>) -> Result<Caterpillar, GenError> {
    if d1 < 2 || k < 1 {
        return Err(GenError::BadCaterpillar { d1, k });
    }
    let expected = (k + 2) * d1;
    if let Some(given) = expect_n {
        if given != expected {
            return Err(GenError::CaterpillarOrder { d1, k, expected, given });
        }
    }
    let spine: Vec<usize> = (0..k + 2).collect();
    let mut edges: Vec<_> = (1..k + 2).map(|i| (i - 1, i)).collect();
    let mut next = k + 2;
    for &s in &spine {
        for _ in 0..d1 - 1 {
            edges.push((s, next));
            next += 1;
        }
    }
    let graph = Graph::from_edges_unchecked(expected, &edges);
    let mut census = BTreeMap::new();
    for &(u, v) in graph.edges() {
        let (a, b) = (graph.degree(u), graph.degree(v));
        *census.entry((a.min(b), a.max(b))).or_insert(0) += 1;
    }
    Ok(Caterpillar { graph, spine, census })
}

/// Thorn graph: attaches `p[v]` new pendant vertices to each vertex v.
/// Original ids are preserved; thorns are appended in vertex order.
pub fn thorny(g: &Graph, p: &[usize]) -> Result<Graph, GenError> {
    if p.len() != g.n() {
        return Err(GenError::ThornLength { expected: g.n(), given: p.len() });
    }
    let n = g.n() + p.iter().sum::<usize>();
    let mut edges: Vec<_> = g.edges().to_vec();
    let mut next = g.n();
    for (v, &count) in p.iter().enumerate() {
        for _ in 0..count {
            edges.push((v, next));
            next += 1;
        }
    }
    Ok(Graph::from_edges_unchecked(n, &edges))
}

/// Thorn graph with the same number of pendants on every vertex.
pub fn thorny_uniform(g: &Graph, p: usize) -> Graph {
    thorny(g, &vec![p; g.n()]).expect("uniform thorn list always has the right length")
}

/// Subdivision: every edge is replaced by a path of length two. Original ids
/// are preserved; the vertex splitting edge e gets id n + e.
pub fn subdivision(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::with_capacity(2 * g.m());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, n + e));
        edges.push((v, n + e));
    }
    Graph::from_edges_unchecked(n + g.m(), &edges)
}

/// Line graph: one vertex per edge (numbered by edge index), adjacent iff the
/// edges share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let m = g.m();
    let mut edges = Vec::new();
    for e in 0..m {
        for f in e + 1..m {
            let (a, b) = g.edges()[e];
            let (c, d) = g.edges()[f];
            if a == c || a == d || b == c || b == d {
                edges.push((e, f));
            }
        }
    }
    Graph::from_edges_unchecked(m, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        assert_eq!(path(1).n(), 1);
        assert_eq!(path(5).degree_sequence().values(), &[2, 2, 2, 1, 1]);
        assert!(cycle(2).is_err());
        assert!(cycle(6).unwrap().degrees().iter().all(|&d| d == 2));
        assert_eq!(star(5).degree_sequence().values(), &[4, 1, 1, 1, 1]);
        assert_eq!(complete(5).m(), 10);
    }

    #[test]
    fn multipartite_two_two_is_a_four_cycle() {
        let g = complete_multipartite(&[2, 2]).unwrap();
        assert_eq!(g.m(), 4);
        assert!(g.degrees().iter().all(|&d| d == 2));
        assert!(complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn double_star_shape() {
        let g = double_star(3);
        assert_eq!(g.n(), 8);
        assert_eq!(g.degree_sequence().values(), &[4, 4, 1, 1, 1, 1, 1, 1]);
        assert!(g.is_tree());
    }

    #[test]
    fn star_like_is_a_spider() {
        let g = star_like(&[2, 2, 1]).unwrap();
        assert_eq!(g.n(), 6);
        assert!(g.is_tree());
        assert_eq!(g.degree_sequence().values(), &[3, 2, 2, 1, 1, 1]);
        assert!(star_like(&[]).is_err());
    }

    #[test]
    fn greedy_tree_layers_and_edge_classes() {
        let d = DegreeSequence::new(vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 3, 3, 3, 3, 3, 4, 4]);
        let t = greedy_tree(&d).unwrap();
        assert_eq!(t.layers, vec![1, 4, 9, 5]);
        assert!(t.graph.is_tree());
        assert_eq!(t.graph.degree_sequence(), d);
        let mut census: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &(u, v) in t.graph.edges() {
            let (a, b) = (t.graph.degree(u), t.graph.degree(v));
            *census.entry((a.max(b), a.min(b))).or_insert(0) += 1;
        }
        let expected: BTreeMap<(usize, usize), usize> =
            [((4, 4), 1), ((4, 3), 5), ((4, 2), 1), ((3, 1), 10), ((2, 1), 1)].into_iter().collect();
        assert_eq!(census, expected);
    }

    #[test]
    fn greedy_tree_rejects_bad_sequences() {
        assert!(greedy_tree(&DegreeSequence::new(vec![2, 2, 2])).is_err());
        assert!(greedy_tree(&DegreeSequence::new(vec![3, 1, 1])).is_err());
        let single = greedy_tree(&DegreeSequence::new(vec![0])).unwrap();
        assert_eq!(single.graph.n(), 1);
        assert_eq!(single.layers, vec![1]);
    }

    #[test]
    fn caterpillar_structure() {
        let c = caterpillar(3, 2, Some(12)).unwrap();
        assert_eq!(c.graph.n(), 12);
        assert!(c.graph.is_tree());
        let spine_degs: Vec<_> = c.spine.iter().map(|&v| c.graph.degree(v)).collect();
        assert_eq!(spine_degs, vec![3, 4, 4, 3]);
        let expected: BTreeMap<(usize, usize), usize> =
            [((3, 4), 2), ((4, 4), 1), ((1, 3), 4), ((1, 4), 4)].into_iter().collect();
        assert_eq!(c.census, expected);
    }

    #[test]
    fn caterpillar_minimal_case_and_order_check() {
        let c = caterpillar(2, 1, None).unwrap();
        assert_eq!(c.graph.n(), 6);
        assert_eq!(c.graph.degree_sequence().values(), &[3, 2, 2, 1, 1, 1]);
        assert!(matches!(
            caterpillar(3, 98, Some(100)),
            Err(GenError::CaterpillarOrder { expected: 300, given: 100, .. })
        ));
        assert!(caterpillar(1, 5, None).is_err());
        assert!(caterpillar(3, 0, None).is_err());
    }

    #[test]
    fn thorny_attaches_pendants() {
        let g = cycle(5).unwrap();
        let t = thorny_uniform(&g, 2);
        assert_eq!(t.n(), 15);
        for v in 0..5 {
            assert_eq!(t.degree(v), 4);
        }
        for v in 5..15 {
            assert_eq!(t.degree(v), 1);
        }
        assert!(thorny(&g, &[1, 2]).is_err());
    }

    #[test]
    fn subdivision_of_triangle_is_a_six_cycle() {
        let s = subdivision(&cycle(3).unwrap());
        assert_eq!(s.n(), 6);
        assert_eq!(s.m(), 6);
        assert!(s.degrees().iter().all(|&d| d == 2));
        assert!(s.is_connected());
    }

    #[test]
    fn line_graph_cases() {
        let lp = line_graph(&path(4));
        assert_eq!(lp.degree_sequence().values(), &[2, 1, 1]);
        let ls = line_graph(&star(4));
        assert_eq!(ls.m(), 3);
        assert!(ls.degrees().iter().all(|&d| d == 2));
    }
}
