//! Walking the tree catalogue: isomorphism classes, shape statistics,
//! degree-sequence realizations, and majorization chains.
//!
//! ```text
//! cargo run --example enumerate_trees
//! ```

use std::collections::BTreeMap;

use topoindex::enumeration::{
    all_trees, classify_tree, labeled_tree_count, majorization_chain, majorizes,
    trees_with_degree_sequence,
};
use topoindex::graph::DegreeSequence;

fn main() {
    // Isomorphism classes per order; the counts are the classical sequence
    // 1, 1, 1, 2, 3, 6, 11, 23, 47, 106.
    println!("trees by order (isomorphism classes):");
    for n in 1..=10usize {
        let trees = all_trees(n).expect("within the enumerator cap");
        let chemical = trees.iter().filter(|t| t.max_degree() <= 4).count();
        println!("  n={n:2}: {:3} classes, {chemical:3} with max degree <= 4", trees.len());
    }

    // Shape statistics at n = 8: how the classes spread over pendant counts
    // and segment counts.
    let trees = all_trees(8).expect("within the enumerator cap");
    let mut by_pendants: BTreeMap<usize, usize> = BTreeMap::new();
    let mut by_segments: BTreeMap<usize, usize> = BTreeMap::new();
    let mut with_pm = 0usize;
    for t in &trees {
        let shape = classify_tree(t).expect("tree");
        *by_pendants.entry(shape.pendants).or_default() += 1;
        *by_segments.entry(shape.segments).or_default() += 1;
        if shape.has_perfect_matching {
            with_pm += 1;
        }
    }
    println!("\nn=8 classes by pendant count: {by_pendants:?}");
    println!("n=8 classes by segment count: {by_segments:?}");
    println!("n=8 classes with a perfect matching: {with_pm}");

    // One degree sequence, all its tree realizations, and the labeled count
    // from the multinomial formula.
    let seq = DegreeSequence::new(vec![3, 3, 2, 1, 1, 1, 1]);
    let reals = trees_with_degree_sequence(&seq).expect("realizable");
    println!("\ndegree sequence {:?}:", seq.values());
    println!("  {} isomorphism classes", reals.len());
    for t in &reals {
        let shape = classify_tree(t).expect("tree");
        println!("    edges {:?} (segments {})", t.edges(), shape.segments);
    }
    println!(
        "  {} labeled trees by the multinomial count",
        labeled_tree_count(seq.values()).expect("realizable")
    );

    // Majorization: the path sequence sits at the bottom, the star at the
    // top, and a chain of single unit transfers connects any comparable pair.
    let path = DegreeSequence::new(vec![2, 2, 2, 2, 2, 1, 1]);
    let star = DegreeSequence::new(vec![6, 1, 1, 1, 1, 1, 1]);
    let mid = DegreeSequence::new(vec![3, 3, 2, 1, 1, 1, 1]);
    println!("\nmajorization on 7 vertices:");
    println!("  star majorizes mid:  {}", majorizes(&star, &mid));
    println!("  mid majorizes path:  {}", majorizes(&mid, &path));
    println!("  path majorizes star: {}", majorizes(&path, &star));
    let chain = majorization_chain(&path, &star).expect("path is majorized by star");
    println!("  chain path -> star in {} unit transfers:", chain.len() - 1);
    for d in &chain {
        println!("    {:?}", d.values());
    }
}
