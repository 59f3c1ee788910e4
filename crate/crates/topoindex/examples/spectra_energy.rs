//! Adjacency spectra, graph energy, and the Sombor matrix.
//!
//! ```text
//! cargo run --example spectra_energy
//! ```

use topoindex::degree_indices::{degree_index, IndexKind, IndexParams};
use topoindex::dsl::parse_graph;
use topoindex::generators::subdivision;
use topoindex::spectral::{
    adjacency_spectrum, charpoly, frobenius_norm, sombor_matrix, subdivision_charpoly,
    symmetric_eigen, vertex_energies, walk_counts_exact, walk_counts_spectral,
};

fn main() {
    // Subdividing the complete graph gives a fully explicit spectrum; the
    // energy collapses to a surd expression in n.
    println!("energy of subdivided complete graphs:");
    for n in 2..=8usize {
        let g = subdivision(&parse_graph(&format!("complete:{n}")).expect("well-formed"));
        let nf = n as f64;
        let closed = 2.0 * ((nf - 1.0) * (nf - 2.0).sqrt() + (2.0 * (nf - 1.0)).sqrt());
        let spectral = adjacency_spectrum(&g).expect("solver converges").energy();
        println!(
            "  S(complete:{n}): {} vertices ({} + {} subdividers), energy {spectral:.8}, surd form {closed:.8}, gap {:.2e}",
            g.n(),
            n,
            n * (n - 1) / 2,
            (spectral - closed).abs()
        );
    }

    // For an r-regular base, the subdivision's characteristic polynomial is a
    // rescaling of the base polynomial evaluated at x^2 - r.
    let base = parse_graph("cycle:6").expect("well-formed");
    let phi = charpoly(&base).expect("integral coefficients");
    let lifted = subdivision_charpoly(&phi, base.n(), base.m(), 2);
    let direct = charpoly(&subdivision(&base)).expect("integral coefficients");
    println!("\nsubdivision charpoly of cycle:6 (leading coefficient first):");
    println!("  lifted from the base polynomial: {lifted:?}");
    println!("  computed on the subdivision:     {direct:?}");
    assert_eq!(lifted, direct);

    // The Sombor matrix weighs each edge by sqrt(du^2 + dv^2); its Frobenius
    // norm squared is exactly twice the forgotten index.
    let g = parse_graph("greedy:4,3,2,2,1,1,1,1,1").expect("well-formed");
    let mat = sombor_matrix(&g);
    let frob2 = frobenius_norm(&mat).powi(2);
    let f = degree_index(&g, IndexKind::F, &IndexParams::default()).expect("defined").as_f64();
    println!("\nSombor matrix on greedy:4,3,2,2,1,1,1,1,1:");
    println!("  ||A_SO||_F^2 {frob2:.9}  vs  2F {:.9}", 2.0 * f);
    let so_spec = symmetric_eigen(&mat).expect("solver converges");
    println!("  Sombor energy {:.9}, spread {:.9}", so_spec.energy(), so_spec.spread());

    // Graph energy decomposes into per-vertex shares, and closed-walk counts
    // agree between the spectral route and integer matrix powers.
    let per_vertex = vertex_energies(&g).expect("solver converges");
    let adj = adjacency_spectrum(&g).expect("solver converges");
    println!("  adjacency energy {:.9}", adj.energy());
    println!("  sum of vertex energies {:.9}", per_vertex.iter().sum::<f64>());
    let shares: Vec<String> = per_vertex.iter().map(|e| format!("{e:.4}")).collect();
    println!("  per vertex: [{}]", shares.join(", "));

    for k in [2u32, 4, 6] {
        let exact = walk_counts_exact(&g, k);
        let spectral = walk_counts_spectral(&g, k).expect("solver converges");
        let worst = exact
            .iter()
            .zip(&spectral)
            .map(|(&e, &s)| (e as f64 - s).abs())
            .fold(0.0f64, f64::max);
        println!("  closed {k}-walks per vertex {exact:?} (spectral route within {worst:.2e})");
    }
}
