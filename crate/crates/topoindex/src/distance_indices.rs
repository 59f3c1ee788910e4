//! Distance-based graph invariants: Wiener, Szeged, Mostar, and the Gutman
//! (degree-distance) family. All of them need every pairwise distance to be
//! finite, so a disconnected input is an error naming the offending pair.

use serde::Serialize;
use thiserror::Error;

use crate::degree_indices::IndexValue;
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum DistanceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("unknown distance kind {0:?}")]
    UnknownKind(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DistanceKind {
    /// Σ over unordered pairs of d(u, v).
    Wiener,
    /// Σ over edges uv of n_u(e)·n_v(e), counting strictly closer vertices.
    Szeged,
    /// Σ over edges uv of |n_u(e) − n_v(e)|.
    Mostar,
    /// Σ over unordered pairs of d(u)d(v)·d(u, v).
    Gutman,
    /// Σ over unordered pairs of (d(u)d(v))^a · d(u, v)^b.
    GutmanGeneral,
}

impl DistanceKind {
    pub fn name(self) -> &'static str {
        match self {
            DistanceKind::Wiener => "W",
            DistanceKind::Szeged => "Sz",
            DistanceKind::Mostar => "Mostar",
            DistanceKind::Gutman => "Gut",
            DistanceKind::GutmanGeneral => "Gut_ab",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct DistanceParams {
    /// Degree-product exponent of the general Gutman index.
    pub a: f64,
    /// Distance exponent of the general Gutman index.
    pub b: f64,
}

impl Default for DistanceParams {
    fn default() -> Self {
        DistanceParams { a: 1.0, b: 1.0 }
    }
}

pub fn distance_index(
    g: &Graph,
    kind: DistanceKind,
    p: &DistanceParams,
) -> Result<IndexValue, DistanceError> {
    match kind {
        DistanceKind::Wiener => {
            let d = g.all_pairs_distances()?;
            let mut total: i128 = 0;
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    total += d[u][v] as i128;
                }
            }
            Ok(IndexValue::Int(total))
        }
        DistanceKind::Szeged => {
            let splits = g.edge_splits()?;
            Ok(IndexValue::Int(
                splits.iter().map(|s| s.nearer_u as i128 * s.nearer_v as i128).sum(),
            ))
        }
        DistanceKind::Mostar => {
            let splits = g.edge_splits()?;
            Ok(IndexValue::Int(
                splits
                    .iter()
                    .map(|s| (s.nearer_u as i128 - s.nearer_v as i128).abs())
                    .sum(),
            ))
        }
        DistanceKind::Gutman => {
            let d = g.all_pairs_distances()?;
            let degs = g.degrees();
            let mut total: i128 = 0;
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    total += (degs[u] * degs[v]) as i128 * d[u][v] as i128;
                }
            }
            Ok(IndexValue::Int(total))
        }
        DistanceKind::GutmanGeneral => {
            let d = g.all_pairs_distances()?;
            let degs = g.degrees();
            let mut total = 0.0;
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    total += ((degs[u] * degs[v]) as f64).powf(p.a)
                        * (d[u][v] as f64).powf(p.b);
                }
            }
            Ok(IndexValue::Real(total))
        }
    }
}

/// Closed form of the general Gutman index on the complete graph:
/// n(n−1)^{2a+1}/2.
pub fn gutman_general_complete(n: usize, a: f64, _b: f64) -> f64 {
    let nf = n as f64;
    nf * (nf - 1.0).powf(2.0 * a + 1.0) / 2.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, star};
    use approx::assert_relative_eq;

    fn val(g: &Graph, kind: DistanceKind) -> i128 {
        distance_index(g, kind, &DistanceParams::default()).unwrap().as_int().unwrap()
    }

    #[test]
    fn wiener_values() {
        assert_eq!(val(&path(4), DistanceKind::Wiener), 10);
        assert_eq!(val(&cycle(5).unwrap(), DistanceKind::Wiener), 15);
        assert_eq!(val(&complete(4), DistanceKind::Wiener), 6);
    }

    #[test]
    fn szeged_matches_wiener_on_trees() {
        for g in [path(7), star(6)] {
            assert_eq!(val(&g, DistanceKind::Wiener), val(&g, DistanceKind::Szeged));
        }
    }

    #[test]
    fn szeged_exceeds_wiener_on_an_even_cycle() {
        let c4 = cycle(4).unwrap();
        assert_eq!(val(&c4, DistanceKind::Wiener), 8);
        assert_eq!(val(&c4, DistanceKind::Szeged), 16);
    }

    #[test]
    fn mostar_values() {
        assert_eq!(val(&cycle(4).unwrap(), DistanceKind::Mostar), 0);
        assert_eq!(val(&path(4), DistanceKind::Mostar), 4);
    }

    #[test]
    fn gutman_values() {
        assert_eq!(val(&path(4), DistanceKind::Gutman), 19);
        assert_eq!(val(&complete(4), DistanceKind::Gutman), 54);
    }

    #[test]
    fn general_form_specializes() {
        let g = path(6);
        let w = distance_index(
            &g,
            DistanceKind::GutmanGeneral,
            &DistanceParams { a: 0.0, b: 1.0 },
        )
        .unwrap()
        .as_f64();
        assert_relative_eq!(w, val(&g, DistanceKind::Wiener) as f64, epsilon = 1e-12);
        let gut = distance_index(&g, DistanceKind::GutmanGeneral, &DistanceParams::default())
            .unwrap()
            .as_f64();
        assert_relative_eq!(gut, val(&g, DistanceKind::Gutman) as f64, epsilon = 1e-12);
    }

    #[test]
    fn complete_graph_closed_form() {
        for n in 2..=7 {
            let g = complete(n);
            for (a, b) in [(1.0, 1.0), (0.5, 1.0), (-1.0, 0.5)] {
                let got = distance_index(&g, DistanceKind::GutmanGeneral, &DistanceParams { a, b })
                    .unwrap()
                    .as_f64();
                assert_relative_eq!(got, gutman_general_complete(n, a, b), epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn disconnected_graphs_are_rejected() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(distance_index(&g, DistanceKind::Wiener, &DistanceParams::default()).is_err());
        assert!(distance_index(&g, DistanceKind::Szeged, &DistanceParams::default()).is_err());
    }
}
