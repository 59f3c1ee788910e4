//! Thorny graphs: attach pendant vertices and watch the Sombor index obey
//! its exact split identity and its strict sandwich.
//!
//! ```text
//! cargo run --example thorny_sombor
//! ```

use topoindex::degree_indices::{degree_index, IndexKind, IndexParams};
use topoindex::dsl::parse_graph;
use topoindex::generators::{thorny, thorny_uniform};

fn so(g: &topoindex::graph::Graph) -> f64 {
    degree_index(g, IndexKind::So, &IndexParams::default()).expect("defined").as_f64()
}

fn main() {
    let base = parse_graph("cycle:5").expect("well-formed");
    let thorns = [2, 0, 1, 3, 0];
    let star = thorny(&base, &thorns).expect("one count per vertex");
    println!(
        "base cycle:5 with thorn counts {:?} -> {} vertices, {} edges",
        thorns,
        star.n(),
        star.m()
    );

    // Exact split: old edges at raised degrees plus one term per pendant.
    let d = base.degrees();
    let raised = |i: usize| (d[i] + thorns[i]) as f64;
    let old_part: f64 = base
        .edges()
        .iter()
        .map(|&(u, v)| (raised(u).powi(2) + raised(v).powi(2)).sqrt())
        .sum();
    let new_part: f64 =
        (0..base.n()).map(|i| thorns[i] as f64 * (raised(i).powi(2) + 1.0).sqrt()).sum();
    println!("SO direct {:.9}", so(&star));
    println!("SO split  {:.9} (old edges {:.4} + pendants {:.4})", old_part + new_part, old_part, new_part);

    // Strict sandwich around B = M1 + 2 sum p_i d_i + sum p_i (p_i + 1),
    // which is the first Zagreb index of the thorny graph itself.
    let m1_base = degree_index(&base, IndexKind::M1, &IndexParams::default())
        .expect("defined")
        .as_f64();
    let cross: f64 = (0..base.n()).map(|i| (thorns[i] * d[i]) as f64).sum();
    let quad: f64 = thorns.iter().map(|&p| (p * (p + 1)) as f64).sum();
    let b = m1_base + 2.0 * cross + quad;
    let m1_star =
        degree_index(&star, IndexKind::M1, &IndexParams::default()).expect("defined").as_f64();
    println!("B {b} (= M1 of the thorny graph: {m1_star})");
    println!("B/sqrt(2) {:.4} < SO {:.4} < B {:.4}", b / 2f64.sqrt(), so(&star), b);

    // Uniform thorns on a regular base collapse to a closed form.
    for (spec, p) in [("cycle:6", 2usize), ("complete:4", 1), ("kpartite:3,3", 3)] {
        let base = parse_graph(spec).expect("well-formed");
        let r = base.degrees()[0] as f64;
        let (n, m) = (base.n() as f64, base.m() as f64);
        let pf = p as f64;
        let closed = 2f64.sqrt() * m * (r + pf) + n * pf * ((r + pf).powi(2) + 1.0).sqrt();
        println!(
            "{spec} with {p} thorns per vertex: SO {:.6}, closed form {closed:.6}",
            so(&thorny_uniform(&base, p))
        );
    }
}
