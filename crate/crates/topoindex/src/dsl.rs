//! Compact generator strings for the command line and for corpus
//! fingerprints.
//!
//! A spec names a family and its arguments, colon-separated:
//!
//! ```text
//! path:10            cycle:7              star:6            complete:5
//! double_star:3      spider:2,2,1         kpartite:3,3
//! greedy:4,4,3,1,1,1 greedy:@degrees.txt
//! cat:d1=3,k=98      cat:d1=3,k=98,n=100
//! thorn:cycle:5:p=2  thorn:path:4:p=1,2,0,3
//! subdiv:complete:4  line:star:5
//! gnp:n=30,p=0.2,seed=7    rand_conn:n=20,p=0.15,seed=7    rand_tree:n=12,seed=7
//! @edges.txt
//! ```
//!
//! `thorn`, `subdiv`, and `line` wrap an inner spec, so they nest. A random
//! spec carries its own seed, which makes the string a complete, replayable
//! fingerprint of the graph it produced. The `edges` form
//! (`edges:5:0-1,1-2,2-3,3-4`) spells a graph out literally; [`fingerprint`]
//! emits it, so any graph at all can be reported in a replayable way.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::generators::{self, GenError};
use crate::graph::{DegreeSequence, Graph, GraphError};
use crate::io::{self, IoError};
use crate::random::{self, RandomError};

#[derive(Debug, Error)]
pub enum DslError {
    #[error("empty generator spec")]
    Empty,
    #[error("unknown generator {0:?}")]
    UnknownKind(String),
    #[error("generator {kind}: {msg}")]
    BadArgs { kind: String, msg: String },
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Random(#[from] RandomError),
}

fn bad(kind: &str, msg: impl Into<String>) -> DslError {
    DslError::BadArgs { kind: kind.into(), msg: msg.into() }
}

fn parse_usize(kind: &str, s: &str) -> Result<usize, DslError> {
    s.trim().parse().map_err(|_| bad(kind, format!("expected an integer, got {s:?}")))
}

fn parse_usize_list(kind: &str, s: &str) -> Result<Vec<usize>, DslError> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| parse_usize(kind, t))
        .collect()
}

/// `k1=v1,k2=v2` argument style.
fn parse_kv(kind: &str, s: &str) -> Result<BTreeMap<String, String>, DslError> {
    let mut map = BTreeMap::new();
    for item in s.split(',').filter(|t| !t.trim().is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| bad(kind, format!("expected key=value, got {item:?}")))?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

fn kv_usize(kind: &str, map: &BTreeMap<String, String>, key: &str) -> Result<usize, DslError> {
    let v = map.get(key).ok_or_else(|| bad(kind, format!("missing {key}=")))?;
    parse_usize(kind, v)
}

fn kv_f64(kind: &str, map: &BTreeMap<String, String>, key: &str) -> Result<f64, DslError> {
    let v = map.get(key).ok_or_else(|| bad(kind, format!("missing {key}=")))?;
    v.parse().map_err(|_| bad(kind, format!("expected a number for {key}, got {v:?}")))
}

fn kv_u64(kind: &str, map: &BTreeMap<String, String>, key: &str) -> Result<u64, DslError> {
    let v = map.get(key).ok_or_else(|| bad(kind, format!("missing {key}=")))?;
    v.parse().map_err(|_| bad(kind, format!("expected a seed for {key}, got {v:?}")))
}

/// Resolves degrees either inline (`4,4,3`) or from a file (`@degrees.txt`).
fn degrees_arg(kind: &str, s: &str) -> Result<DegreeSequence, DslError> {
    if let Some(path) = s.strip_prefix('@') {
        Ok(io::read_degree_sequence_file(path)?)
    } else {
        Ok(DegreeSequence::new(parse_usize_list(kind, s)?))
    }
}

/// Builds the graph a spec describes.
pub fn parse_graph(spec: &str) -> Result<Graph, DslError> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(DslError::Empty);
    }
    if let Some(path) = spec.strip_prefix('@') {
        return Ok(io::read_graph_file(path)?);
    }
    let (kind, rest) = spec.split_once(':').unwrap_or((spec, ""));
    match kind {
        "path" => Ok(generators::path(parse_usize(kind, rest)?)),
        "cycle" => Ok(generators::cycle(parse_usize(kind, rest)?)?),
        "star" => Ok(generators::star(parse_usize(kind, rest)?)),
        "complete" => Ok(generators::complete(parse_usize(kind, rest)?)),
        "double_star" => Ok(generators::double_star(parse_usize(kind, rest)?)),
        "spider" => Ok(generators::star_like(&parse_usize_list(kind, rest)?)?),
        "kpartite" => Ok(generators::complete_multipartite(&parse_usize_list(kind, rest)?)?),
        "greedy" => Ok(generators::greedy_tree(&degrees_arg(kind, rest)?)?.graph),
        "cat" => {
            let kv = parse_kv(kind, rest)?;
            let d1 = kv_usize(kind, &kv, "d1")?;
            let k = kv_usize(kind, &kv, "k")?;
            let expect_n = kv.get("n").map(|v| parse_usize(kind, v)).transpose()?;
            Ok(generators::caterpillar(d1, k, expect_n)?.graph)
        }
        "thorn" => {
            // thorn:<inner>:p=...; the thorn list is the final segment.
            let (inner, p_part) = rest
                .rsplit_once(':')
                .ok_or_else(|| bad(kind, "expected thorn:<inner>:p=<counts>"))?;
            let p_spec = p_part
                .strip_prefix("p=")
                .ok_or_else(|| bad(kind, format!("expected p=<counts>, got {p_part:?}")))?;
            let base = parse_graph(inner)?;
            let counts = parse_usize_list(kind, p_spec)?;
            if counts.len() == 1 {
                Ok(generators::thorny_uniform(&base, counts[0]))
            } else {
                Ok(generators::thorny(&base, &counts)?)
            }
        }
        "subdiv" => Ok(generators::subdivision(&parse_graph(rest)?)),
        "line" => Ok(generators::line_graph(&parse_graph(rest)?)),
        "edges" => {
            let (n_part, list) = rest.split_once(':').unwrap_or((rest, ""));
            let n = parse_usize(kind, n_part)?;
            let mut edges = Vec::new();
            if !list.is_empty() {
                for pair in list.split(',') {
                    let (u, v) = pair
                        .split_once('-')
                        .ok_or_else(|| bad(kind, format!("expected u-v, got {pair:?}")))?;
                    edges.push((parse_usize(kind, u)?, parse_usize(kind, v)?));
                }
            }
            Ok(Graph::from_edge_list(n, &edges)?)
        }
        "gnp" => {
            let kv = parse_kv(kind, rest)?;
            let mut rng = random::derive_rng(kv_u64(kind, &kv, "seed")?, 0);
            Ok(random::gnp(kv_usize(kind, &kv, "n")?, kv_f64(kind, &kv, "p")?, &mut rng)?)
        }
        "rand_conn" => {
            let kv = parse_kv(kind, rest)?;
            let mut rng = random::derive_rng(kv_u64(kind, &kv, "seed")?, 0);
            Ok(random::random_connected_graph(
                kv_usize(kind, &kv, "n")?,
                kv_f64(kind, &kv, "p")?,
                &mut rng,
            )?)
        }
        "rand_tree" => {
            let kv = parse_kv(kind, rest)?;
            let mut rng = random::derive_rng(kv_u64(kind, &kv, "seed")?, 0);
            Ok(random::random_tree(kv_usize(kind, &kv, "n")?, &mut rng)?)
        }
        other => Err(DslError::UnknownKind(other.to_string())),
    }
}

/// Literal `edges:` spec for a graph, suitable for replaying a reported
/// instance that did not come from a named family.
pub fn fingerprint(g: &Graph) -> String {
    let list: Vec<String> = g.edges().iter().map(|&(u, v)| format!("{u}-{v}")).collect();
    format!("edges:{}:{}", g.n(), list.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_families() {
        assert_eq!(parse_graph("path:10").unwrap().n(), 10);
        assert_eq!(parse_graph("cycle:7").unwrap().m(), 7);
        assert_eq!(parse_graph("star:6").unwrap().max_degree(), 5);
        assert_eq!(parse_graph("complete:5").unwrap().m(), 10);
        assert_eq!(parse_graph("kpartite:3,3").unwrap().m(), 9);
        assert_eq!(parse_graph("double_star:3").unwrap().n(), 8);
        assert_eq!(parse_graph("spider:2,2,1").unwrap().n(), 6);
    }

    #[test]
    fn edge_list_specs_round_trip() {
        let g = parse_graph("edges:5:0-1,1-2,2-3,3-4,4-0").unwrap();
        assert_eq!((g.n(), g.m()), (5, 5));
        let again = parse_graph(&fingerprint(&g)).unwrap();
        assert_eq!(again.edges(), g.edges());
        // An isolated-vertex graph still prints and parses.
        let lone = parse_graph("edges:3:0-1").unwrap();
        assert_eq!(fingerprint(&lone), "edges:3:0-1");
        assert!(parse_graph("edges:4:0-1,2x3").is_err());
    }

    #[test]
    fn nested_wrappers() {
        let g = parse_graph("thorn:cycle:5:p=2").unwrap();
        assert_eq!(g.n(), 15);
        assert_eq!(g.degree(0), 4);

        let g = parse_graph("thorn:path:4:p=1,2,0,3").unwrap();
        assert_eq!(g.n(), 10);

        assert_eq!(parse_graph("subdiv:complete:4").unwrap().n(), 10);
        assert_eq!(parse_graph("line:star:5").unwrap().m(), 6);
        // Doubly nested: the thorned triangle has 6 vertices and 6 edges.
        assert_eq!(parse_graph("subdiv:thorn:cycle:3:p=1").unwrap().n(), 12);
    }

    #[test]
    fn greedy_and_caterpillar() {
        let g = parse_graph("greedy:4,4,3,3,3,3,3,2,1,1,1,1,1,1,1,1,1,1,1").unwrap();
        assert_eq!(g.n(), 19);
        assert_eq!(parse_graph("cat:d1=3,k=2").unwrap().n(), 12);
        assert!(parse_graph("cat:d1=3,k=98,n=100").is_err());
    }

    #[test]
    fn seeded_random_specs_replay() {
        let a = parse_graph("rand_conn:n=20,p=0.15,seed=7").unwrap();
        let b = parse_graph("rand_conn:n=20,p=0.15,seed=7").unwrap();
        assert_eq!(a.edges(), b.edges());
        assert!(a.is_connected());
        let t = parse_graph("rand_tree:n=12,seed=3").unwrap();
        assert!(t.is_tree());
        let g = parse_graph("gnp:n=16,p=0.3,seed=11").unwrap();
        assert_eq!(g.n(), 16);
    }

    #[test]
    fn file_specs() {
        let dir = tempfile::tempdir().unwrap();
        let gpath = dir.path().join("g.txt");
        crate::io::write_graph_file(&generators::path(6), &gpath).unwrap();
        let g = parse_graph(&format!("@{}", gpath.display())).unwrap();
        assert_eq!(g.n(), 6);

        let dpath = dir.path().join("d.txt");
        std::fs::write(&dpath, "3,1,1,1\n").unwrap();
        let g = parse_graph(&format!("greedy:@{}", dpath.display())).unwrap();
        assert_eq!(g.max_degree(), 3);
    }

    #[test]
    fn errors_are_specific() {
        assert!(matches!(parse_graph(""), Err(DslError::Empty)));
        assert!(matches!(parse_graph("blob:4"), Err(DslError::UnknownKind(_))));
        assert!(matches!(parse_graph("path:x"), Err(DslError::BadArgs { .. })));
        assert!(matches!(parse_graph("cat:d1=3"), Err(DslError::BadArgs { .. })));
        assert!(matches!(parse_graph("thorn:cycle:5"), Err(DslError::BadArgs { .. })));
    }
}
