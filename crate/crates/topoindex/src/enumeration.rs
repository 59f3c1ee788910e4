//! Exhaustive machinery for small trees and graphs: Prüfer decoding, tree
//! enumeration up to isomorphism, structural classification, majorization,
//! extremal searches over tree families, and brute-force edge-subset scans.
//!
//! Two independent search backends are exposed: [`extremal_over_trees`]
//! enumerates isomorphism classes of trees directly, while
//! [`extremal_over_multisets`] walks degree multisets only. For objectives
//! that depend solely on the degree multiset the two must agree, and the
//! multiset backend reaches sizes the enumerator cannot.

use std::collections::BTreeMap;

use itertools::Itertools;
use thiserror::Error;

use crate::graph::{DegreeSequence, Graph, GraphError};

/// Size cap for whole-catalog tree enumeration.
pub const MAX_ALL_TREES_N: usize = 12;
/// Size cap for per-degree-sequence tree enumeration.
pub const MAX_SEQ_TREES_N: usize = 14;
/// Size cap for the exact chromatic number.
pub const MAX_CHROMATIC_N: usize = 12;
/// Size cap for the edge-subset scan in [`max_sum_of_squares`].
pub const MAX_EDGE_SCAN_N: usize = 7;

/// Isomorphism-class counts of trees on 1..=12 vertices, used as a self-check.
const TREE_COUNTS: [usize; 12] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];

#[derive(Debug, Error)]
pub enum EnumError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("n = {n} exceeds the cap of {max} for {what}")]
    TooLarge { n: usize, max: usize, what: &'static str },
    #[error("a code of length {len} decodes trees on {} vertices, not {n}", len + 2)]
    BadPruferLength { len: usize, n: usize },
    #[error("code entry {value} at position {pos} is not a vertex of 0..{n}")]
    BadPruferEntry { pos: usize, value: usize, n: usize },
    #[error("no tree on {n} vertices matches the family constraint {family}")]
    EmptyFamily { n: usize, family: String },
    #[error("family {family} is not determined by the degree multiset; enumerate trees instead")]
    NotDegreeDetermined { family: String },
    #[error("sequence {from} is not majorized by {to}")]
    NotMajorized { from: DegreeSequence, to: DegreeSequence },
    #[error("sequences differ in length ({a} vs {b}) or total ({sa} vs {sb})")]
    Incomparable { a: usize, b: usize, sa: usize, sb: usize },
}

/// Decodes a Prüfer code of length n−2 into the labeled tree on n vertices.
pub fn prufer_decode(code: &[usize], n: usize) -> Result<Graph, EnumError> {
    if n < 2 || code.len() != n - 2 {
        return Err(EnumError::BadPruferLength { len: code.len(), n });
    }
    if let Some((pos, &value)) = code.iter().enumerate().find(|&(_, &v)| v >= n) {
        return Err(EnumError::BadPruferEntry { pos, value, n });
    }
    let mut degree = vec![1usize; n];
    for &v in code {
        degree[v] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in code {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("a tree code keeps a leaf available");
        edges.push((leaf.min(v), leaf.max(v)));
        degree[leaf] -= 1;
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(std::cmp::Reverse(v));
        }
    }
    let remaining: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    debug_assert_eq!(remaining.len(), 2);
    edges.push((remaining[0], remaining[1]));
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// Number of labeled trees in which vertex i has degree d\[i\]:
/// (n−2)! / Π (d_i − 1)!.
pub fn labeled_tree_count(degrees: &[usize]) -> Option<u128> {
    let n = degrees.len();
    if n < 2 || degrees.iter().sum::<usize>() != 2 * (n - 1) || degrees.contains(&0) {
        return None;
    }
    let mut num: u128 = 1;
    for k in 2..=(n - 2) {
        num *= k as u128;
    }
    let mut den: u128 = 1;
    for &d in degrees {
        for k in 2..d {
            den *= k as u128;
        }
    }
    Some(num / den)
}

/// Every isomorphism class of trees on n vertices, grown one leaf at a time
/// with canonical-code deduplication at each level. Deterministic order
/// (sorted by canonical code).
pub fn all_trees(n: usize) -> Result<Vec<Graph>, EnumError> {
    if n > MAX_ALL_TREES_N {
        return Err(EnumError::TooLarge { n, max: MAX_ALL_TREES_N, what: "tree enumeration" });
    }
    if n == 0 {
        return Ok(vec![]);
    }
    let trees = grow_trees(n);
    debug_assert_eq!(trees.len(), TREE_COUNTS[n - 1]);
    Ok(trees)
}

fn grow_trees(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::from_edge_list(1, &[]).unwrap()];
    for size in 2..=n {
        let mut seen: BTreeMap<String, Graph> = BTreeMap::new();
        for t in &level {
            for v in 0..t.n() {
                let mut edges: Vec<(usize, usize)> = t.edges().to_vec();
                edges.push((v, size - 1));
                let grown = Graph::from_edge_list(size, &edges).unwrap();
                let code = grown.tree_code().unwrap();
                seen.entry(code).or_insert(grown);
            }
        }
        level = seen.into_values().collect();
    }
    level
}

/// Every isomorphism class of trees realizing the degree multiset, found by
/// decoding each distinct arrangement of the matching Prüfer multiset (vertex
/// i appears d_i − 1 times) and deduplicating by canonical code.
pub fn trees_with_degree_sequence(seq: &DegreeSequence) -> Result<Vec<Graph>, EnumError> {
    let n = seq.len();
    if n > MAX_SEQ_TREES_N {
        return Err(EnumError::TooLarge { n, max: MAX_SEQ_TREES_N, what: "per-sequence trees" });
    }
    if !seq.is_tree_realizable() {
        return Ok(vec![]);
    }
    if n == 1 {
        return Ok(vec![Graph::from_edge_list(1, &[]).unwrap()]);
    }
    if n == 2 {
        return Ok(vec![Graph::from_edge_list(2, &[(0, 1)]).unwrap()]);
    }
    let mut pool: Vec<usize> = Vec::with_capacity(n - 2);
    for (i, &d) in seq.values().iter().enumerate() {
        pool.extend(std::iter::repeat_n(i, d - 1));
    }
    let mut seen: BTreeMap<String, Graph> = BTreeMap::new();
    let mut code = Vec::with_capacity(pool.len());
    multiset_arrangements(&mut pool.clone(), &mut code, &mut |code| {
        let t = prufer_decode(code, n).expect("matching code length");
        let key = t.tree_code().expect("decoded graph is a tree");
        seen.entry(key).or_insert(t);
    });
    Ok(seen.into_values().collect())
}

/// Calls `f` with every distinct arrangement of `pool` (which must be
/// sorted); standard lexicographic multiset permutation recursion.
fn multiset_arrangements(
    pool: &mut Vec<usize>,
    prefix: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if pool.is_empty() {
        f(prefix);
        return;
    }
    let mut last: Option<usize> = None;
    for i in 0..pool.len() {
        if last == Some(pool[i]) {
            continue;
        }
        last = Some(pool[i]);
        let x = pool.remove(i);
        prefix.push(x);
        multiset_arrangements(pool, prefix, f);
        prefix.pop();
        pool.insert(i, x);
    }
}

/// Structural profile of a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeShape {
    pub n: usize,
    /// Vertices of degree 1.
    pub pendants: usize,
    /// Maximal paths whose interior avoids branch vertices:
    /// 1 + Σ_{d(v) ≥ 3} (d(v) − 1) for n ≥ 2.
    pub segments: usize,
    /// Vertices of degree ≥ 3.
    pub branch_vertices: usize,
    pub max_degree: usize,
    /// Size of a maximum matching (exact; greedy leaf matching is optimal
    /// on forests).
    pub matching_number: usize,
    pub has_perfect_matching: bool,
}

pub fn classify_tree(g: &Graph) -> Result<TreeShape, EnumError> {
    g.require_tree()?;
    let degs = g.degrees();
    let n = g.n();
    let pendants = degs.iter().filter(|&&d| d == 1).count();
    let branch_vertices = degs.iter().filter(|&&d| d >= 3).count();
    let segments = if n <= 1 {
        0
    } else {
        1 + degs.iter().filter(|&&d| d >= 3).map(|&d| d - 1).sum::<usize>()
    };
    let matching_number = tree_matching_number(g);
    Ok(TreeShape {
        n,
        pendants,
        segments,
        branch_vertices,
        max_degree: degs.iter().copied().max().unwrap_or(0),
        matching_number,
        has_perfect_matching: 2 * matching_number == n,
    })
}

/// Maximum matching of a forest by leaf peeling: a leaf edge is always safe
/// to take.
fn tree_matching_number(g: &Graph) -> usize {
    let n = g.n();
    let mut deg = g.degrees();
    let mut alive = vec![true; n];
    let mut queue: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut matched = 0;
    while let Some(u) = queue.pop() {
        if !alive[u] || deg[u] == 0 {
            continue;
        }
        let Some(&v) = g.neighbors(u).iter().find(|&&w| alive[w]) else {
            continue;
        };
        matched += 1;
        alive[u] = false;
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    queue.push(w);
                }
            }
        }
    }
    matched
}

/// True when `upper` majorizes `lower`: same length, same total, and every
/// prefix sum of `upper` is at least the matching prefix sum of `lower`.
pub fn majorizes(upper: &DegreeSequence, lower: &DegreeSequence) -> bool {
    if upper.len() != lower.len() || upper.sum() != lower.sum() {
        return false;
    }
    let (mut su, mut sl) = (0usize, 0usize);
    for (u, l) in upper.values().iter().zip(lower.values()) {
        su += u;
        sl += l;
        if su < sl {
            return false;
        }
    }
    true
}

/// A chain from `from` up to `to` in which consecutive sequences differ by a
/// single unit transfer: +1 at position j, −1 at position k, j < k. Both
/// endpoints are included, every link stays non-increasing, and each link is
/// majorized by the next.
pub fn majorization_chain(
    from: &DegreeSequence,
    to: &DegreeSequence,
) -> Result<Vec<DegreeSequence>, EnumError> {
    if from.len() != to.len() || from.sum() != to.sum() {
        return Err(EnumError::Incomparable {
            a: from.len(),
            b: to.len(),
            sa: from.sum(),
            sb: to.sum(),
        });
    }
    if !majorizes(to, from) {
        return Err(EnumError::NotMajorized { from: from.clone(), to: to.clone() });
    }
    let target = to.values();
    let mut cur: Vec<usize> = from.values().to_vec();
    let mut chain = vec![from.clone()];
    while cur != target {
        // j: first deficit. Incrementing keeps the order because everything
        // before j already equals the (sorted) target.
        let j = cur.iter().zip(target).position(|(c, t)| c < t).expect("sums match");
        // k: last surplus. Decrementing keeps the order because everything
        // after k is at or below the target.
        let k = cur.iter().zip(target).rposition(|(c, t)| c > t).expect("sums match");
        cur[j] += 1;
        cur[k] -= 1;
        chain.push(DegreeSequence::new(cur.clone()));
    }
    Ok(chain)
}

/// Tree families the extremal search can restrict to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeFamily {
    All,
    /// Exactly this many degree-1 vertices.
    Pendants(usize),
    /// Exactly this many segments.
    Segments(usize),
    /// Exactly this many vertices of degree ≥ 3.
    BranchVertices(usize),
    /// Trees with a perfect matching.
    PerfectMatching,
}

impl TreeFamily {
    fn label(self) -> String {
        match self {
            TreeFamily::All => "all".into(),
            TreeFamily::Pendants(p) => format!("pendants={p}"),
            TreeFamily::Segments(s) => format!("segments={s}"),
            TreeFamily::BranchVertices(b) => format!("branch-vertices={b}"),
            TreeFamily::PerfectMatching => "perfect-matching".into(),
        }
    }

    /// Whether a tree with this shape belongs to the family.
    pub fn admits_shape(self, shape: &TreeShape) -> bool {
        match self {
            TreeFamily::All => true,
            TreeFamily::Pendants(p) => shape.pendants == p,
            TreeFamily::Segments(s) => shape.segments == s,
            TreeFamily::BranchVertices(b) => shape.branch_vertices == b,
            TreeFamily::PerfectMatching => shape.has_perfect_matching,
        }
    }

    /// Whether membership can be read off the degree multiset alone.
    fn degree_determined(self) -> bool {
        !matches!(self, TreeFamily::PerfectMatching)
    }

    fn admits_multiset(self, d: &DegreeSequence) -> bool {
        let values = d.values();
        match self {
            TreeFamily::All => true,
            TreeFamily::Pendants(p) => values.iter().filter(|&&x| x == 1).count() == p,
            TreeFamily::Segments(s) => {
                let extra: usize = values.iter().filter(|&&x| x >= 3).map(|&x| x - 1).sum();
                1 + extra == s
            }
            TreeFamily::BranchVertices(b) => values.iter().filter(|&&x| x >= 3).count() == b,
            TreeFamily::PerfectMatching => unreachable!("checked by degree_determined"),
        }
    }
}

/// One side of an extremal search result.
#[derive(Clone, Debug)]
pub struct Extremum {
    pub value: f64,
    /// Degree multisets attaining the value, deduplicated, sorted.
    pub witness_degrees: Vec<DegreeSequence>,
    /// Attaining trees (enumeration backend only; empty for the multiset
    /// backend).
    pub witness_trees: Vec<Graph>,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub candidates: usize,
    pub min: Extremum,
    pub max: Extremum,
}

fn witness_tol(best: f64) -> f64 {
    1e-9 * best.abs().max(1.0)
}

/// Scans every isomorphism class of trees on n vertices in the family,
/// optionally restricted to max degree ≤ 4, and reports both extrema of the
/// objective with all attaining witnesses.
pub fn extremal_over_trees(
    n: usize,
    family: TreeFamily,
    chemical: bool,
    objective: impl Fn(&Graph) -> f64,
) -> Result<SearchReport, EnumError> {
    let mut scored: Vec<(f64, Graph)> = Vec::new();
    for t in all_trees(n)? {
        if chemical && t.max_degree() > 4 {
            continue;
        }
        let shape = classify_tree(&t)?;
        if !family.admits_shape(&shape) {
            continue;
        }
        scored.push((objective(&t), t));
    }
    if scored.is_empty() {
        return Err(EnumError::EmptyFamily { n, family: family.label() });
    }
    let candidates = scored.len();
    let min_v = scored.iter().map(|(v, _)| *v).fold(f64::INFINITY, f64::min);
    let max_v = scored.iter().map(|(v, _)| *v).fold(f64::NEG_INFINITY, f64::max);
    let collect = |target: f64| {
        let tol = witness_tol(target);
        let trees: Vec<Graph> = scored
            .iter()
            .filter(|(v, _)| (v - target).abs() <= tol)
            .map(|(_, t)| t.clone())
            .collect();
        let degrees: Vec<DegreeSequence> = trees
            .iter()
            .map(DegreeSequence::from_graph)
            .sorted_by(|a, b| b.values().cmp(a.values()))
            .dedup()
            .collect();
        Extremum { value: target, witness_degrees: degrees, witness_trees: trees }
    };
    Ok(SearchReport { candidates, min: collect(min_v), max: collect(max_v) })
}

/// Scans every tree-realizable degree multiset on n vertices in the family.
/// Exact for degree-determined objectives and families; no graphs are built,
/// so this reaches sizes the tree enumerator cannot.
pub fn extremal_over_multisets(
    n: usize,
    family: TreeFamily,
    chemical: bool,
    objective: impl Fn(&DegreeSequence) -> f64,
) -> Result<SearchReport, EnumError> {
    if !family.degree_determined() {
        return Err(EnumError::NotDegreeDetermined { family: family.label() });
    }
    if n < 2 {
        return Err(EnumError::EmptyFamily { n, family: family.label() });
    }
    let cap = if chemical { 4.min(n - 1) } else { n - 1 };
    let mut parts: Vec<usize> = Vec::with_capacity(n);
    let mut scored: Vec<(f64, DegreeSequence)> = Vec::new();
    partitions_into(2 * (n - 1), n, cap, &mut parts, &mut |parts| {
        let d = DegreeSequence::new(parts.to_vec());
        if family.admits_multiset(&d) {
            scored.push((objective(&d), d));
        }
    });
    if scored.is_empty() {
        return Err(EnumError::EmptyFamily { n, family: family.label() });
    }
    let candidates = scored.len();
    let min_v = scored.iter().map(|(v, _)| *v).fold(f64::INFINITY, f64::min);
    let max_v = scored.iter().map(|(v, _)| *v).fold(f64::NEG_INFINITY, f64::max);
    let collect = |target: f64| {
        let tol = witness_tol(target);
        let degrees: Vec<DegreeSequence> = scored
            .iter()
            .filter(|(v, _)| (v - target).abs() <= tol)
            .map(|(_, d)| d.clone())
            .sorted_by(|a, b| b.values().cmp(a.values()))
            .dedup()
            .collect();
        Extremum { value: target, witness_degrees: degrees, witness_trees: vec![] }
    };
    Ok(SearchReport { candidates, min: collect(min_v), max: collect(max_v) })
}

/// Emits every partition of `total` into exactly `count` parts, each within
/// 1..=cap, non-increasing.
fn partitions_into(
    total: usize,
    count: usize,
    cap: usize,
    acc: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if count == 0 {
        if total == 0 {
            f(acc);
        }
        return;
    }
    // Remaining parts are ≥ 1 and ≤ cap each.
    let hi = cap.min(total.saturating_sub(count - 1));
    for part in (1..=hi).rev() {
        if part * count < total {
            break;
        }
        acc.push(part);
        partitions_into(total - part, count - 1, part, acc, f);
        acc.pop();
    }
}

/// Exact chromatic number by branch and bound over color classes.
pub fn chromatic_number(g: &Graph) -> Result<usize, EnumError> {
    let n = g.n();
    if n > MAX_CHROMATIC_N {
        return Err(EnumError::TooLarge { n, max: MAX_CHROMATIC_N, what: "chromatic number" });
    }
    if n == 0 {
        return Ok(0);
    }
    if g.m() == 0 {
        return Ok(1);
    }
    // Vertices in descending degree order; colors tried up to one past the
    // count already used, which kills color-permutation symmetry.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for k in 2..=n {
        let mut colors = vec![usize::MAX; n];
        if color_rec(g, &order, 0, k, 0, &mut colors) {
            return Ok(k);
        }
    }
    unreachable!("n colors always suffice")
}

fn color_rec(
    g: &Graph,
    order: &[usize],
    pos: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    let limit = k.min(used + 1);
    for c in 0..limit {
        if g.neighbors(v).iter().any(|&w| colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if color_rec(g, order, pos + 1, k, used.max(c + 1), colors) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}

/// Largest Σ d(v)² over every simple graph with n vertices and m edges,
/// found by scanning all edge subsets. Returns the maximum and one witness.
pub fn max_sum_of_squares(n: usize, m: usize) -> Result<(i128, Graph), EnumError> {
    if n > MAX_EDGE_SCAN_N {
        return Err(EnumError::TooLarge { n, max: MAX_EDGE_SCAN_N, what: "edge-subset scan" });
    }
    let slots: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    if m > slots.len() {
        return Err(EnumError::EmptyFamily { n, family: format!("m={m}") });
    }
    let mut best: Option<(i128, Graph)> = None;
    for combo in slots.iter().combinations(m) {
        let mut deg = vec![0i128; n];
        for &&(u, v) in &combo {
            deg[u] += 1;
            deg[v] += 1;
        }
        let score: i128 = deg.iter().map(|&d| d * d).sum();
        if best.as_ref().is_none_or(|(b, _)| score > *b) {
            let edges: Vec<(usize, usize)> = combo.iter().map(|&&e| e).collect();
            best = Some((score, Graph::from_edge_list(n, &edges)?));
        }
    }
    Ok(best.expect("at least the empty edge set exists"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree_indices::{degree_index, IndexKind, IndexParams};
    use crate::generators::{complete, complete_multipartite, cycle, path, star};

    #[test]
    fn prufer_decoding() {
        let g = prufer_decode(&[], 2).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
        // A constant code gives a star at that vertex.
        let g = prufer_decode(&[3, 3, 3], 5).unwrap();
        assert_eq!(g.degree(3), 4);
        assert!(g.is_tree());
        assert!(prufer_decode(&[9], 3).is_err());
        assert!(prufer_decode(&[0, 0], 3).is_err());
    }

    #[test]
    fn tree_catalog_counts() {
        let expect = [1usize, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &want) in expect.iter().enumerate() {
            assert_eq!(all_trees(i + 1).unwrap().len(), want, "n = {}", i + 1);
        }
        assert!(all_trees(13).is_err());
    }

    #[test]
    fn largest_catalog_level() {
        assert_eq!(all_trees(12).unwrap().len(), 551);
    }

    #[test]
    fn trees_by_degree_sequence() {
        let one = |d: &[usize]| trees_with_degree_sequence(&DegreeSequence::new(d.to_vec()));
        assert_eq!(one(&[2, 2, 1, 1]).unwrap().len(), 1);
        assert_eq!(one(&[3, 1, 1, 1]).unwrap().len(), 1);
        // Two spiders share this multiset: leg lengths (3,1,1) and (2,2,1).
        assert_eq!(one(&[3, 2, 2, 1, 1, 1]).unwrap().len(), 2);
        // Not tree-realizable.
        assert!(one(&[2, 2, 2, 2]).unwrap().is_empty());
    }

    #[test]
    fn catalog_agrees_with_per_sequence_enumeration() {
        for n in 3..=7 {
            let catalog = all_trees(n).unwrap();
            let mut multisets: Vec<DegreeSequence> =
                catalog.iter().map(DegreeSequence::from_graph).collect();
            multisets.sort_by(|a, b| a.values().cmp(b.values()));
            multisets.dedup();
            let total: usize = multisets
                .iter()
                .map(|d| trees_with_degree_sequence(d).unwrap().len())
                .sum();
            assert_eq!(total, catalog.len(), "n = {n}");
        }
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(labeled_tree_count(&[2, 2, 1, 1]), Some(2));
        assert_eq!(labeled_tree_count(&[3, 1, 1, 1]), Some(1));
        assert_eq!(labeled_tree_count(&[1, 1]), Some(1));
        assert_eq!(labeled_tree_count(&[2, 2]), None);
    }

    #[test]
    fn tree_shapes() {
        let p6 = classify_tree(&path(6)).unwrap();
        assert_eq!(
            (p6.pendants, p6.segments, p6.branch_vertices, p6.matching_number),
            (2, 1, 0, 3)
        );
        assert!(p6.has_perfect_matching);

        let s5 = classify_tree(&star(5)).unwrap();
        assert_eq!((s5.pendants, s5.segments, s5.branch_vertices), (4, 4, 1));
        assert_eq!(s5.matching_number, 1);
        assert!(!s5.has_perfect_matching);

        let spider = crate::generators::star_like(&[2, 2, 1]).unwrap();
        let shape = classify_tree(&spider).unwrap();
        assert_eq!((shape.pendants, shape.segments, shape.matching_number), (3, 3, 3));
        assert!(shape.has_perfect_matching);
    }

    #[test]
    fn majorization_checks() {
        let path_d = DegreeSequence::new(vec![2, 2, 2, 1, 1]);
        let star_d = DegreeSequence::new(vec![4, 1, 1, 1, 1]);
        let mid = DegreeSequence::new(vec![3, 2, 1, 1, 1]);
        assert!(majorizes(&star_d, &path_d));
        assert!(majorizes(&mid, &path_d));
        assert!(majorizes(&star_d, &mid));
        assert!(!majorizes(&path_d, &star_d));

        let chain = majorization_chain(&path_d, &star_d).unwrap();
        assert_eq!(chain.first().unwrap(), &path_d);
        assert_eq!(chain.last().unwrap(), &star_d);
        for pair in chain.windows(2) {
            assert!(majorizes(&pair[1], &pair[0]));
            let a = pair[0].values();
            let b = pair[1].values();
            let diffs: Vec<(usize, i64)> = a
                .iter()
                .zip(b)
                .enumerate()
                .filter(|(_, (x, y))| x != y)
                .map(|(i, (&x, &y))| (i, y as i64 - x as i64))
                .collect();
            assert_eq!(diffs.len(), 2);
            assert_eq!(diffs[0].1, 1);
            assert_eq!(diffs[1].1, -1);
            assert!(diffs[0].0 < diffs[1].0);
        }

        assert!(majorization_chain(&star_d, &path_d).is_err());
        let short = DegreeSequence::new(vec![1, 1]);
        assert!(majorization_chain(&short, &star_d).is_err());
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number(&cycle(6).unwrap()).unwrap(), 2);
        assert_eq!(chromatic_number(&complete(4)).unwrap(), 4);
        assert_eq!(chromatic_number(&path(5)).unwrap(), 2);
        assert_eq!(chromatic_number(&complete_multipartite(&[3, 3]).unwrap()).unwrap(), 2);
    }

    #[test]
    fn first_zagreb_extremes_over_trees() {
        let m1 = |g: &Graph| {
            degree_index(g, IndexKind::M1, &IndexParams::default()).unwrap().as_f64()
        };
        let report = extremal_over_trees(7, TreeFamily::All, false, m1).unwrap();
        assert_eq!(report.candidates, 11);
        assert_eq!(report.min.value, 22.0);
        assert_eq!(report.min.witness_degrees, vec![DegreeSequence::new(vec![2; 5])
            .values()
            .iter()
            .copied()
            .chain([1, 1])
            .collect::<Vec<_>>()]
            .into_iter()
            .map(DegreeSequence::new)
            .collect::<Vec<_>>());
        assert_eq!(report.max.value, 42.0);
        assert_eq!(report.max.witness_degrees.len(), 1);
        assert_eq!(report.max.witness_degrees[0].values(), &[6, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn backends_agree_on_degree_determined_objectives() {
        let by_tree = extremal_over_trees(8, TreeFamily::Pendants(3), false, |g| {
            degree_index(g, IndexKind::M1, &IndexParams::default()).unwrap().as_f64()
        })
        .unwrap();
        let by_multiset = extremal_over_multisets(8, TreeFamily::Pendants(3), false, |d| {
            d.values().iter().map(|&x| (x * x) as f64).sum()
        })
        .unwrap();
        assert_eq!(by_tree.min.value, by_multiset.min.value);
        assert_eq!(by_tree.max.value, by_multiset.max.value);
        assert_eq!(by_tree.min.witness_degrees, by_multiset.min.witness_degrees);
        assert_eq!(by_tree.max.witness_degrees, by_multiset.max.witness_degrees);
    }

    #[test]
    fn multiset_backend_rejects_matching_family() {
        let err = extremal_over_multisets(8, TreeFamily::PerfectMatching, false, |_| 0.0);
        assert!(matches!(err, Err(EnumError::NotDegreeDetermined { .. })));
    }

    #[test]
    fn empty_family_is_an_error() {
        // No tree on 6 vertices has 6 pendant vertices.
        assert!(matches!(
            extremal_over_trees(6, TreeFamily::Pendants(6), false, |_| 0.0),
            Err(EnumError::EmptyFamily { .. })
        ));
    }

    #[test]
    fn edge_scan_maximum() {
        let (best, witness) = max_sum_of_squares(4, 4).unwrap();
        assert_eq!(best, 18);
        let mut d = witness.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(d, vec![3, 2, 2, 1]);
        assert!(max_sum_of_squares(8, 3).is_err());
    }
}
