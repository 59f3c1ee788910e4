//! Extremal trees: which shapes push a convex vertex invariant to its floor
//! and ceiling, inside various structural families.
//!
//! ```text
//! cargo run --example extremal_trees
//! ```

use topoindex::degree_indices::{degree_index, IndexKind, IndexParams, VertexFn};
use topoindex::enumeration::{extremal_over_multisets, extremal_over_trees, TreeFamily};
use topoindex::generators::greedy_tree;
use topoindex::graph::{DegreeSequence, Graph};

fn hf(params: IndexParams) -> impl Fn(&Graph) -> f64 {
    move |g| degree_index(g, IndexKind::Hf, &params).expect("defined").as_f64()
}

fn show(label: &str, report: &topoindex::enumeration::SearchReport) {
    println!("{label}: {} candidates", report.candidates);
    for (side, ext) in [("min", &report.min), ("max", &report.max)] {
        let degs: Vec<_> = ext.witness_degrees.iter().map(|d| d.values().to_vec()).collect();
        println!("  {side} {:>10.4} at {degs:?}", ext.value);
    }
}

fn main() {
    // The degree-square invariant over all trees on 8 vertices: the path is
    // the unique floor, the flattest non-path degree spread the ceiling among
    // chemical trees.
    let square = IndexParams::default();
    let all = extremal_over_trees(8, TreeFamily::All, false, hf(square))
        .expect("nonempty family");
    show("sum of degree squares, all trees n=8", &all);
    let chem = extremal_over_trees(8, TreeFamily::All, true, hf(square))
        .expect("nonempty family");
    show("same objective, chemical trees only", &chem);

    // Structural families. A convex vertex function is minimized where the
    // degrees even out and maximized where they pile onto few vertices.
    let xlnx = IndexParams { f: VertexFn::XLnX, ..IndexParams::default() };
    for (family, label) in [
        (TreeFamily::Pendants(4), "trees with 4 pendants"),
        (TreeFamily::Segments(5), "trees with 5 segments"),
        (TreeFamily::BranchVertices(2), "trees with 2 branch vertices"),
        (TreeFamily::PerfectMatching, "trees with a perfect matching"),
    ] {
        let report = extremal_over_trees(10, family, false, hf(xlnx))
            .expect("nonempty family");
        show(&format!("x ln x kernel, {label}, n=10"), &report);
    }

    // Degree-determined objectives search multisets instead of trees, which
    // reaches orders the enumerator cannot. Unrestricted, the Lanzhou index
    // bottoms out on the star (its center term d^2 (n-1-d) vanishes); capped
    // at degree 4 the floor moves to the path multiset (2^12, 1^2).
    let n = 14usize;
    let lz = |d: &DegreeSequence| {
        let t = greedy_tree(d).expect("tree-realizable multisets build");
        degree_index(&t.graph, IndexKind::Lz, &IndexParams::default())
            .expect("defined")
            .as_f64()
    };
    let report = extremal_over_multisets(n, TreeFamily::All, false, lz)
        .expect("nonempty family");
    show(&format!("Lanzhou index over degree multisets, n={n}"), &report);
    let report = extremal_over_multisets(n, TreeFamily::All, true, lz)
        .expect("nonempty family");
    show(&format!("same, max degree <= 4, n={n}"), &report);

    // Restricting chemical trees to b branch vertices lifts the floor along
    // a linear-in-b profile attained by spiders of degree-3 hubs.
    for b in 1..=3usize {
        let report = extremal_over_multisets(n, TreeFamily::BranchVertices(b), true, lz)
            .expect("nonempty family");
        show(&format!("Lanzhou floor with {b} branch vertices, max degree <= 4"), &report);
    }
}
