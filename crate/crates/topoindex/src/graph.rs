//! Simple undirected graphs on dense integer vertex ids.
//!
//! Everything downstream (invariants, generators, enumeration, spectra) works
//! on [`Graph`]. Neighbor lists are kept sorted and the edge list is kept in
//! lexicographic order with `u < v`, so identical inputs always produce
//! identical iteration order.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use thiserror::Error;

/// Sentinel distance for unreachable vertex pairs in [`Graph::bfs_distances`].
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("edge ({0}, {0}) is a self-loop; only simple graphs are supported")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("graph is disconnected: no path from vertex {from} to vertex {to}")]
    Disconnected { from: usize, to: usize },
    #[error("expected a tree: {0}")]
    NotATree(String),
}

/// An undirected simple graph.
///
/// Duplicate edges passed to a constructor are collapsed; self-loops are
/// rejected. Vertices are `0..n` and may be isolated.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n(), self.m(), self.edges)
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], edges: Vec::new() }
    }

    /// Builds a graph from an edge list, deduplicating repeated edges.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        norm.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, edges: norm })
    }

    /// Internal constructor for generators whose edge lists are valid by
    /// construction.
    pub(crate) fn from_edges_unchecked(n: usize, edges: &[(usize, usize)]) -> Self {
        Graph::from_edge_list(n, edges).expect("generator produced an invalid edge list")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|a| a.len()).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edges as `(u, v)` pairs with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].binary_search(&v).is_ok()
    }

    /// BFS distances from `src`; unreachable vertices get [`UNREACHABLE`].
    pub fn bfs_distances(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Full distance matrix; fails on the first unreachable pair found.
    pub fn all_pairs_distances(&self) -> Result<Vec<Vec<u32>>, GraphError> {
        let mut rows = Vec::with_capacity(self.n());
        for src in 0..self.n() {
            let row = self.bfs_distances(src);
            if let Some(to) = row.iter().position(|&d| d == UNREACHABLE) {
                return Err(GraphError::Disconnected { from: src, to });
            }
            rows.push(row);
        }
        Ok(rows)
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Cycle rank `m - n + 1` of a connected graph.
    pub fn cyclomatic(&self) -> Result<usize, GraphError> {
        if !self.is_connected() {
            let comps = self.components();
            return Err(GraphError::Disconnected { from: comps[0][0], to: comps[1][0] });
        }
        Ok(self.m() + 1 - self.n())
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m() + 1 == self.n() && self.is_connected()
    }

    pub fn require_tree(&self) -> Result<(), GraphError> {
        if self.is_tree() {
            Ok(())
        } else if !self.is_connected() {
            Err(GraphError::NotATree("graph is disconnected".into()))
        } else {
            Err(GraphError::NotATree(format!(
                "graph has {} vertices and {} edges",
                self.n(),
                self.m()
            )))
        }
    }

    /// Per-edge counts of vertices strictly closer to each endpoint.
    ///
    /// For edge `(u, v)`: `n_u` counts vertices strictly closer to `u` than to
    /// `v`, `n_v` the converse, and `equidistant` the rest (which includes
    /// neither endpoint only when distances tie, so on bipartite graphs it is
    /// zero). Requires a connected graph.
    pub fn edge_splits(&self) -> Result<Vec<EdgeSplit>, GraphError> {
        let dist = self.all_pairs_distances()?;
        Ok(self
            .edges
            .iter()
            .map(|&(u, v)| {
                let mut split = EdgeSplit { u, v, nearer_u: 0, nearer_v: 0, equidistant: 0 };
                for w in 0..self.n() {
                    match dist[u][w].cmp(&dist[v][w]) {
                        std::cmp::Ordering::Less => split.nearer_u += 1,
                        std::cmp::Ordering::Greater => split.nearer_v += 1,
                        std::cmp::Ordering::Equal => split.equidistant += 1,
                    }
                }
                split
            })
            .collect())
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees())
    }

    /// Image of the graph under the permutation `perm` (`perm[v]` is the new
    /// id of `v`). Intended for invariance tests.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length must equal n");
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges_unchecked(self.n(), &edges)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges_unchecked(n, &edges)
    }

    /// Isomorphism-invariant code of the tree rooted at `root`.
    ///
    /// Classic bottom-up encoding: a leaf is `()`, an inner vertex wraps the
    /// sorted codes of its children.
    pub fn rooted_tree_code(&self, root: usize) -> Result<String, GraphError> {
        self.require_tree()?;
        Ok(self.rooted_code_unchecked(root))
    }

    fn rooted_code_unchecked(&self, root: usize) -> String {
        // Iterative post-order so deep paths cannot overflow the stack.
        let n = self.n();
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![root];
        parent[root] = root;
        while let Some(u) = stack.pop() {
            order.push(u);
            for &w in &self.adj[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    stack.push(w);
                }
            }
        }
        let mut codes: Vec<Vec<String>> = vec![Vec::new(); n];
        let mut done = vec![String::new(); n];
        for &u in order.iter().rev() {
            codes[u].sort_unstable();
            let inner: String = codes[u].concat();
            done[u] = format!("({inner})");
            if u != root {
                let code = std::mem::take(&mut done[u]);
                codes[parent[u]].push(code);
            }
        }
        done[root].clone()
    }

    /// Centroid vertices of a tree: one or two of them, ascending.
    pub fn centroids(&self) -> Result<Vec<usize>, GraphError> {
        self.require_tree()?;
        let n = self.n();
        if n == 1 {
            return Ok(vec![0]);
        }
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![0usize];
        parent[0] = 0;
        while let Some(u) = stack.pop() {
            order.push(u);
            for &w in &self.adj[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    stack.push(w);
                }
            }
        }
        let mut size = vec![1usize; n];
        for &u in order.iter().rev() {
            if u != 0 {
                size[parent[u]] += size[u];
            }
        }
        // Heaviest piece left after deleting v, over child subtrees and the
        // part containing the root.
        let mut best = n;
        let mut centroids = Vec::new();
        for v in 0..n {
            let mut heaviest = if v == 0 { 0 } else { n - size[v] };
            for &w in &self.adj[v] {
                if (w != parent[v] || v == 0) && parent[w] == v {
                    heaviest = heaviest.max(size[w]);
                }
            }
            match heaviest.cmp(&best) {
                std::cmp::Ordering::Less => {
                    best = heaviest;
                    centroids.clear();
                    centroids.push(v);
                }
                std::cmp::Ordering::Equal => centroids.push(v),
                std::cmp::Ordering::Greater => {}
            }
        }
        centroids.sort_unstable();
        Ok(centroids)
    }

    /// Canonical code of an unrooted tree: the smaller rooted code over its
    /// centroid(s). Two trees get the same code iff they are isomorphic.
    pub fn tree_code(&self) -> Result<String, GraphError> {
        let cents = self.centroids()?;
        Ok(cents
            .iter()
            .map(|&c| self.rooted_code_unchecked(c))
            .min()
            .expect("a tree has at least one centroid"))
    }
}

/// Counts of vertices nearer to each endpoint of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeSplit {
    pub u: usize,
    pub v: usize,
    pub nearer_u: usize,
    pub nearer_v: usize,
    pub equidistant: usize,
}

/// A degree sequence, stored non-increasing.
///
/// Zero entries are allowed here; operations that need positivity (tree
/// realization, configuration sampling) check for it themselves.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence {
    d: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(values: impl Into<Vec<usize>>) -> Self {
        let mut d = values.into();
        d.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { d }
    }

    pub fn from_graph(g: &Graph) -> Self {
        g.degree_sequence()
    }

    /// Entries in non-increasing order.
    pub fn values(&self) -> &[usize] {
        &self.d
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.d.iter().sum()
    }

    pub fn max(&self) -> usize {
        self.d.first().copied().unwrap_or(0)
    }

    pub fn min(&self) -> usize {
        self.d.last().copied().unwrap_or(0)
    }

    /// Multiplicity of each degree value, ascending by degree.
    pub fn counts(&self) -> BTreeMap<usize, usize> {
        let mut c = BTreeMap::new();
        for &d in &self.d {
            *c.entry(d).or_insert(0) += 1;
        }
        c
    }

    /// True iff some tree has exactly this degree sequence.
    pub fn is_tree_realizable(&self) -> bool {
        let n = self.len();
        match n {
            0 => false,
            1 => self.d[0] == 0,
            _ => self.min() >= 1 && self.sum() == 2 * (n - 1),
        }
    }

    /// Erdős–Gallai test: true iff some simple graph has this sequence.
    pub fn is_graphical(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return true;
        }
        if self.sum() % 2 != 0 || self.max() >= n {
            return self.max() == 0 && n > 0 || false;
        }
        let d = &self.d;
        let mut lhs = 0usize;
        for k in 1..=n {
            lhs += d[k - 1];
            let rhs = k * (k - 1) + d[k..].iter().map(|&x| x.min(k)).sum::<usize>();
            if lhs > rhs {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.d.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DegreeSequence({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn rejects_self_loops_and_bad_ids() {
        assert!(matches!(Graph::from_edge_list(3, &[(1, 1)]), Err(GraphError::SelfLoop(1))));
        assert!(matches!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn dedups_parallel_edges() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn distances_on_path() {
        let g = path(4);
        let d = g.all_pairs_distances().unwrap();
        let mut total = 0;
        for u in 0..4 {
            for v in u + 1..4 {
                total += d[u][v];
            }
        }
        assert_eq!(total, 10);
    }

    #[test]
    fn disconnected_pair_is_reported() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert!(matches!(
            g.all_pairs_distances(),
            Err(GraphError::Disconnected { from: 0, to: 2 })
        ));
        assert_eq!(g.components().len(), 2);
        assert!(g.cyclomatic().is_err());
    }

    #[test]
    fn edge_splits_on_path_have_no_ties() {
        let g = path(4);
        let splits = g.edge_splits().unwrap();
        let counts: Vec<_> = splits.iter().map(|s| (s.nearer_u, s.nearer_v, s.equidistant)).collect();
        assert_eq!(counts, vec![(1, 3, 0), (2, 2, 0), (3, 1, 0)]);
    }

    #[test]
    fn edge_splits_on_even_cycle() {
        let g = cycle(4);
        for s in g.edge_splits().unwrap() {
            assert_eq!((s.nearer_u, s.nearer_v, s.equidistant), (2, 2, 0));
        }
    }

    #[test]
    fn odd_cycle_has_equidistant_vertices() {
        let g = cycle(5);
        for s in g.edge_splits().unwrap() {
            assert_eq!((s.nearer_u, s.nearer_v, s.equidistant), (2, 2, 1));
        }
    }

    #[test]
    fn tree_recognition() {
        assert!(path(1).is_tree());
        assert!(path(7).is_tree());
        assert!(!cycle(4).is_tree());
        assert!(!Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap().is_tree());
        assert_eq!(path(7).cyclomatic().unwrap(), 0);
        assert_eq!(cycle(7).cyclomatic().unwrap(), 1);
    }

    #[test]
    fn centroids_of_paths() {
        assert_eq!(path(4).centroids().unwrap(), vec![1, 2]);
        assert_eq!(path(5).centroids().unwrap(), vec![2]);
    }

    #[test]
    fn labeled_trees_on_four_vertices_give_two_codes() {
        // All 16 labeled trees on 4 vertices fall into two isomorphism
        // classes: the path and the star.
        let mut codes = std::collections::BTreeSet::new();
        let seqs = all_prufer(4);
        assert_eq!(seqs.len(), 16);
        for g in seqs {
            codes.insert(g.tree_code().unwrap());
        }
        assert_eq!(codes.len(), 2);
    }

    fn all_prufer(n: usize) -> Vec<Graph> {
        // Tiny inline decoder; the real one lives in the enumeration module.
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let seq = [a, b];
                let mut deg = vec![1usize; n];
                for &s in &seq {
                    deg[s] += 1;
                }
                let mut edges = Vec::new();
                let mut deg2 = deg.clone();
                for &s in &seq {
                    let leaf = (0..n).find(|&v| deg2[v] == 1).unwrap();
                    edges.push((leaf, s));
                    deg2[leaf] -= 1;
                    deg2[s] -= 1;
                }
                let rest: Vec<_> = (0..n).filter(|&v| deg2[v] == 1).collect();
                edges.push((rest[0], rest[1]));
                out.push(Graph::from_edge_list(n, &edges).unwrap());
            }
        }
        out
    }

    #[test]
    fn tree_code_is_invariant_under_relabeling() {
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let perm = [5, 3, 0, 1, 4, 2];
        assert_eq!(g.tree_code().unwrap(), g.relabeled(&perm).tree_code().unwrap());
    }

    #[test]
    fn degree_sequence_basics() {
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let ds = g.degree_sequence();
        assert_eq!(ds.values(), &[3, 1, 1, 1]);
        assert_eq!(ds.to_string(), "3,1,1,1");
        assert!(ds.is_tree_realizable());
        assert!(!DegreeSequence::new(vec![3, 3, 2]).is_graphical());
        assert!(DegreeSequence::new(vec![2, 2, 2]).is_graphical());
        assert!(DegreeSequence::new(vec![3, 2, 2, 1, 1, 1]).is_graphical());
        assert!(!DegreeSequence::new(vec![4, 4, 1, 1]).is_graphical());
    }

    #[test]
    fn complement_of_path_three() {
        let g = path(3).complement();
        assert_eq!(g.edges(), &[(0, 2)]);
    }
}
