//! Plain-text graph and degree-sequence files.
//!
//! Graph format: `#` starts a comment, the first data line is the vertex
//! count, and every following data line is one edge `u v` with 0-based
//! endpoints. Writing then reading a graph reproduces the exact edge list.
//!
//! Degree files are whitespace- or comma-separated non-negative integers
//! with the same comment rule.

use std::fs;
use std::io::{BufRead, Write};
use std::path::Path;

use thiserror::Error;

use crate::graph::{DegreeSequence, Graph, GraphError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn data_of(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

pub fn read_graph<R: BufRead>(reader: R) -> Result<Graph, IoError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let data = data_of(&line);
        if data.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let fields: Vec<&str> = data.split_whitespace().collect();
        match n {
            None => {
                if fields.len() != 1 {
                    return Err(IoError::Parse {
                        line: lineno,
                        msg: format!("expected the vertex count alone, got {data:?}"),
                    });
                }
                n = Some(fields[0].parse().map_err(|_| IoError::Parse {
                    line: lineno,
                    msg: format!("bad vertex count {:?}", fields[0]),
                })?);
            }
            Some(_) => {
                if fields.len() != 2 {
                    return Err(IoError::Parse {
                        line: lineno,
                        msg: format!("expected an edge `u v`, got {data:?}"),
                    });
                }
                let parse = |s: &str| {
                    s.parse::<usize>().map_err(|_| IoError::Parse {
                        line: lineno,
                        msg: format!("bad vertex id {s:?}"),
                    })
                };
                edges.push((parse(fields[0])?, parse(fields[1])?));
            }
        }
    }
    let n = n.ok_or(IoError::Parse { line: 0, msg: "empty graph file".into() })?;
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<Graph, IoError> {
    read_graph(std::io::BufReader::new(fs::File::open(path)?))
}

pub fn write_graph<W: Write>(g: &Graph, mut writer: W) -> std::io::Result<()> {
    writeln!(writer, "# {} vertices, {} edges", g.n(), g.m())?;
    writeln!(writer, "{}", g.n())?;
    for &(u, v) in g.edges() {
        writeln!(writer, "{u} {v}")?;
    }
    Ok(())
}

pub fn write_graph_file(g: &Graph, path: impl AsRef<Path>) -> Result<(), IoError> {
    let mut out = Vec::new();
    write_graph(g, &mut out)?;
    fs::write(path, out)?;
    Ok(())
}

/// Parses integers separated by whitespace and/or commas; `#` comments run
/// to end of line.
pub fn parse_degree_list(text: &str) -> Result<Vec<usize>, IoError> {
    let mut values = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        for token in data_of(line).split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            values.push(token.parse::<usize>().map_err(|_| IoError::Parse {
                line: idx + 1,
                msg: format!("bad degree {token:?}"),
            })?);
        }
    }
    Ok(values)
}

pub fn read_degree_sequence_file(path: impl AsRef<Path>) -> Result<DegreeSequence, IoError> {
    Ok(DegreeSequence::new(parse_degree_list(&fs::read_to_string(path)?)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{path, thorny_uniform};

    #[test]
    fn graph_round_trip_preserves_edges() {
        let g = thorny_uniform(&path(5), 2);
        let mut buf = Vec::new();
        write_graph(&g, &mut buf).unwrap();
        let back = read_graph(&buf[..]).unwrap();
        assert_eq!(back.n(), g.n());
        assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let text = "# a path\n\n4 # vertex count\n0 1\n1 2 # middle\n2 3\n";
        let g = read_graph(text.as_bytes()).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn malformed_lines_are_located() {
        let err = read_graph("3\n0 1 2\n".as_bytes()).unwrap_err();
        assert!(matches!(err, IoError::Parse { line: 2, .. }));
        assert!(read_graph("".as_bytes()).is_err());
        assert!(read_graph("x\n".as_bytes()).is_err());
    }

    #[test]
    fn degree_lists() {
        assert_eq!(parse_degree_list("4, 4 3\n# tail\n3,2").unwrap(), vec![4, 4, 3, 3, 2]);
        assert!(parse_degree_list("4 x").is_err());
    }
}
