//! Edge-list and DIMACS readers and writers.
//!
//! Edge-list: a header line `n m`, then `m` lines `u v` with 0-based ids.
//! DIMACS: `c ...` comments, one `p edge n m` line, then `e u v` lines with
//! 1-based ids. Blank lines are ignored in both.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("empty input")]
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Auto,
    Edgelist,
    Dimacs,
}

pub fn parse(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Edgelist => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
        Format::Auto => match detect(text) {
            Some(Format::Dimacs) => parse_dimacs(text),
            Some(_) => parse_edge_list(text),
            None => Err(ParseError::Empty),
        },
    }
}

/// DIMACS if the first meaningful token is `c` or `p`, edge-list otherwise.
pub fn detect(text: &str) -> Option<Format> {
    let token = text.split_whitespace().next()?;
    Some(if token == "c" || token == "p" {
        Format::Dimacs
    } else {
        Format::Edgelist
    })
}

fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, toks)| !toks.is_empty())
}

fn number(line: usize, tok: &str) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| ParseError::Syntax {
        line,
        msg: format!("expected a non-negative integer, found {tok:?}"),
    })
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut it = lines(text);
    let (hline, header) = it.next().ok_or(ParseError::Empty)?;
    if header.len() != 2 {
        return Err(syntax(hline, "header must be \"n m\""));
    }
    let n = number(hline, header[0])?;
    let m = number(hline, header[1])?;
    let mut edges = Vec::with_capacity(m);
    let mut last = hline;
    for (line, toks) in it {
        if toks.len() != 2 {
            return Err(syntax(line, "edge line must be \"u v\""));
        }
        if edges.len() == m {
            return Err(syntax(line, format!("more than the declared {m} edges")));
        }
        edges.push((line, number(line, toks[0])?, number(line, toks[1])?));
        last = line;
    }
    if edges.len() != m {
        return Err(syntax(
            last,
            format!("declared {m} edges but found {}", edges.len()),
        ));
    }
    build(n, edges)
}

pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last = 0;
    for (line, toks) in lines(text) {
        last = line;
        match toks[0] {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(syntax(line, "duplicate problem line"));
                }
                if toks.len() != 4 || toks[1] != "edge" {
                    return Err(syntax(line, "problem line must be \"p edge n m\""));
                }
                header = Some((number(line, toks[2])?, number(line, toks[3])?));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| syntax(line, "edge before problem line"))?;
                if toks.len() != 3 {
                    return Err(syntax(line, "edge line must be \"e u v\""));
                }
                let u = number(line, toks[1])?;
                let v = number(line, toks[2])?;
                if u == 0 || v == 0 {
                    return Err(syntax(line, "DIMACS vertex ids are 1-based"));
                }
                if u > n || v > n {
                    return Err(ParseError::Graph {
                        line,
                        source: GraphError::VertexOutOfRange {
                            vertex: u.max(v) - 1,
                            n,
                        },
                    });
                }
                edges.push((line, u - 1, v - 1));
            }
            other => return Err(syntax(line, format!("unknown line type {other:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| syntax(last, "missing problem line"))?;
    if edges.len() != m {
        return Err(syntax(
            last,
            format!("declared {m} edges but found {}", edges.len()),
        ));
    }
    build(n, edges)
}

// Re-validates edge by edge so that errors carry the offending line.
fn build(n: usize, edges: Vec<(usize, usize, usize)>) -> Result<Graph, ParseError> {
    let mut seen = std::collections::HashSet::with_capacity(edges.len());
    for &(line, u, v) in &edges {
        let err = if u >= n || v >= n {
            Some(GraphError::VertexOutOfRange { vertex: u.max(v), n })
        } else if u == v {
            Some(GraphError::SelfLoop(u))
        } else if !seen.insert((u.min(v), u.max(v))) {
            Some(GraphError::ParallelEdge(u.min(v), u.max(v)))
        } else {
            None
        };
        if let Some(source) = err {
            return Err(ParseError::Graph { line, source });
        }
    }
    Graph::from_edges(n, edges.into_iter().map(|(_, u, v)| (u, v)))
        .map_err(|source| ParseError::Graph { line: 0, source })
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
