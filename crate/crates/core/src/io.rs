//! Plain-text graph and solution files.
//!
//! Graph files hold a header `p <n> <m>`, then `m` lines `e <u> <v>`, then
//! any number of `t <v>` lines marking terminals. Lines starting with `c`
//! are comments. Vertices are 1-indexed in files and 0-indexed in memory.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn vertex(token: Option<&str>, n: usize, line: usize) -> Result<usize> {
    let token = token.ok_or_else(|| parse_error(line, "missing vertex"))?;
    let v: usize = token
        .parse()
        .map_err(|_| parse_error(line, format!("bad vertex {token:?}")))?;
    if v == 0 || v > n {
        return Err(parse_error(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

fn no_trailing<'a>(mut tokens: impl Iterator<Item = &'a str>, line: usize) -> Result<()> {
    match tokens.next() {
        Some(extra) => Err(parse_error(line, format!("unexpected {extra:?}"))),
        None => Ok(()),
    }
}

/// Reads a graph and its terminal set.
pub fn parse_graph(text: &str) -> Result<(Graph, VertexSet)> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut terminals: Vec<usize> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let mut tokens = raw.split_whitespace();
        let Some(kind) = tokens.next() else { continue };
        if kind == "c" {
            continue;
        }
        match (kind, header) {
            ("p", None) => {
                let mut count = |what: &str| -> Result<usize> {
                    let tok = tokens
                        .next()
                        .ok_or_else(|| parse_error(line, format!("missing {what}")))?;
                    tok.parse()
                        .map_err(|_| parse_error(line, format!("bad {what} {tok:?}")))
                };
                let n = count("vertex count")?;
                let m = count("edge count")?;
                no_trailing(tokens, line)?;
                header = Some((n, m));
            }
            ("p", Some(_)) => return Err(parse_error(line, "second header")),
            (_, None) => return Err(parse_error(line, "expected header `p <n> <m>`")),
            ("e", Some((n, _))) => {
                if !terminals.is_empty() {
                    return Err(parse_error(line, "edge after terminal lines"));
                }
                let u = vertex(tokens.next(), n, line)?;
                let v = vertex(tokens.next(), n, line)?;
                no_trailing(tokens, line)?;
                if u == v {
                    return Err(parse_error(line, format!("self-loop at vertex {}", u + 1)));
                }
                let key = (u.min(v), u.max(v));
                if edges.contains(&key) {
                    return Err(parse_error(
                        line,
                        format!("repeated edge {} {}", key.0 + 1, key.1 + 1),
                    ));
                }
                edges.push(key);
            }
            ("t", Some((n, _))) => {
                let v = vertex(tokens.next(), n, line)?;
                no_trailing(tokens, line)?;
                terminals.push(v);
            }
            (other, Some(_)) => {
                return Err(parse_error(line, format!("unknown line type {other:?}")))
            }
        }
    }
    let (n, m) = header.ok_or_else(|| parse_error(last_line.max(1), "missing header"))?;
    if edges.len() != m {
        return Err(parse_error(
            last_line.max(1),
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    let graph = Graph::from_edges(n, edges)?;
    Ok((graph, VertexSet::from_vertices(n, terminals)))
}

/// Writes a graph with edges sorted by endpoints and terminals ascending.
pub fn write_graph(graph: &Graph, terminals: &VertexSet) -> String {
    let mut out = format!("p {} {}\n", graph.order(), graph.size());
    let mut edges: Vec<(usize, usize)> = graph.edges().collect();
    edges.sort_unstable();
    for (u, v) in edges {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a string");
    }
    for v in terminals.iter() {
        writeln!(out, "t {}", v + 1).expect("writing to a string");
    }
    out
}

/// Reads a solution file: one 1-indexed vertex per line, blank lines and
/// `c` comments allowed.
pub fn parse_solution(text: &str, n: usize) -> Result<VertexSet> {
    let mut set = VertexSet::new(n);
    for (i, raw) in text.lines().enumerate() {
        let mut tokens = raw.split_whitespace();
        match tokens.next() {
            None | Some("c") => continue,
            Some(tok) => {
                set.insert(vertex(Some(tok), n, i + 1)?);
                no_trailing(tokens, i + 1)?;
            }
        }
    }
    Ok(set)
}

pub fn write_solution(set: &VertexSet) -> String {
    set.iter().map(|v| format!("{}\n", v + 1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Graph::cycle(5);
        let t = VertexSet::from_vertices(5, [0, 3]);
        let text = write_graph(&g, &t);
        assert!(text.starts_with("p 5 5\ne 1 2\n"));
        assert!(text.ends_with("t 1\nt 4\n"));
        let (g2, t2) = parse_graph(&text).unwrap();
        assert_eq!(g2, g);
        assert_eq!(t2, t);
    }

    #[test]
    fn comments_and_blank_lines() {
        let (g, t) = parse_graph("c hello\n\np 3 1\nc mid\ne 1 3\nt 2").unwrap();
        assert!(g.has_edge(0, 2));
        assert_eq!(t.to_vec(), vec![1]);
    }

    #[test]
    fn self_loop_names_the_line() {
        let err = parse_graph("p 3 1\ne 2 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        assert!(err.to_string().contains("self-loop"));
    }

    #[test]
    fn rejects_bad_input() {
        for bad in [
            "",
            "e 1 2\n",
            "p 2 1\ne 1 3\n",
            "p 2 2\ne 1 2\n",
            "p 2 1\ne 1 2\ne 2 1\n",
            "p 2 0\nx 1\n",
            "p 2 0\nt 0\n",
            "p 2 1 7\n",
        ] {
            assert!(parse_graph(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn solutions() {
        let s = parse_solution("3\n\n1\n", 4).unwrap();
        assert_eq!(s.to_vec(), vec![0, 2]);
        assert_eq!(write_solution(&s), "1\n3\n");
        assert!(parse_solution("5\n", 4).is_err());
    }
}
