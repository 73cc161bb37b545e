//! Generic algebraic path problems over edge-list graphs.
//!
//! One closure routine answers many questions: the semiring choice
//! decides whether entry (u,v) of A* is the shortest distance
//! (min-plus), the longest path (max-plus, acyclic inputs only), plain
//! reachability (boolean), the widest bottleneck (max-min), or the most
//! reliable probability (max-times). Graphs arrive as edge lists with
//! raw decimal weights; weights are checked against the chosen carrier
//! only when the matrix is built, so the same parsed graph can be
//! solved under several semirings.

use crate::error::Error;
use crate::matrix::{OpCount, SemiringMatrix};
use crate::semiring::{RawWeight, Semiring};

/// One directed edge with its raw (not yet carrier-checked) weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphEdge {
    pub source: usize,
    pub target: usize,
    pub weight: RawWeight,
}

/// A directed graph as a vertex count plus an edge list. Parallel edges
/// are permitted; they fold with ⊕ when the matrix is built.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphEdgeList {
    pub vertex_count: usize,
    pub edges: Vec<GraphEdge>,
}

impl GraphEdgeList {
    pub fn new(vertex_count: usize, edges: Vec<GraphEdge>) -> Self {
        Self {
            vertex_count,
            edges,
        }
    }
}

/// Parse the graph file format: a `N M` header line, then exactly M
/// lines `u v w` with 0-indexed vertices and a decimal weight. Blank
/// lines and `#` comments are skipped. Positions in errors are 1-based.
pub fn parse_graph(input: &str) -> Result<GraphEdgeList, Error> {
    let mut data_lines = input.lines().enumerate().filter_map(|(lineno, raw)| {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if line.trim().is_empty() {
            None
        } else {
            Some((lineno + 1, line))
        }
    });

    let (header_line, header) = data_lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "missing `N M` header line".to_string()))?;
    let mut header_fields = fields(header);
    let vertex_count = parse_count(&mut header_fields, header_line, "vertex count N")?;
    let edge_count = parse_count(&mut header_fields, header_line, "edge count M")?;
    if let Some((col, tok)) = header_fields.next() {
        return Err(Error::parse(
            header_line,
            col,
            format!("unexpected token `{tok}` after `N M` header"),
        ));
    }

    let mut edges = Vec::with_capacity(edge_count);
    let mut last_line = header_line;
    for _ in 0..edge_count {
        let (lineno, line) = data_lines.next().ok_or_else(|| {
            Error::parse(
                last_line,
                1,
                format!("expected {edge_count} edge lines, found {}", edges.len()),
            )
        })?;
        last_line = lineno;
        let mut f = fields(line);
        let source = parse_count(&mut f, lineno, "source vertex")?;
        let target = parse_count(&mut f, lineno, "target vertex")?;
        let (wcol, wtok) = f
            .next()
            .ok_or_else(|| Error::parse(lineno, 1, "missing edge weight".to_string()))?;
        let weight = parse_weight(wtok)
            .ok_or_else(|| Error::parse(lineno, wcol, format!("invalid weight `{wtok}`")))?;
        if let Some((col, tok)) = f.next() {
            return Err(Error::parse(
                lineno,
                col,
                format!("unexpected token `{tok}` after edge"),
            ));
        }
        edges.push(GraphEdge {
            source,
            target,
            weight,
        });
    }
    if let Some((lineno, line)) = data_lines.next() {
        return Err(Error::parse(
            lineno,
            1,
            format!("unexpected extra line `{}` after {edge_count} edges", line.trim()),
        ));
    }
    Ok(GraphEdgeList::new(vertex_count, edges))
}

/// Whitespace-separated fields of one line with 1-based columns.
fn fields(line: &str) -> impl Iterator<Item = (usize, &str)> + '_ {
    line.split_whitespace().map(move |tok| {
        let start = tok.as_ptr() as usize - line.as_ptr() as usize;
        (start + 1, tok)
    })
}

fn parse_count<'a>(
    f: &mut impl Iterator<Item = (usize, &'a str)>,
    lineno: usize,
    what: &str,
) -> Result<usize, Error> {
    let (col, tok) = f
        .next()
        .ok_or_else(|| Error::parse(lineno, 1, format!("missing {what}")))?;
    tok.parse::<usize>()
        .map_err(|_| Error::parse(lineno, col, format!("invalid {what} `{tok}`")))
}

/// Integer weights stay exact; anything else must be a finite real.
fn parse_weight(token: &str) -> Option<RawWeight> {
    if let Ok(v) = token.parse::<i64>() {
        return Some(RawWeight::Int(v));
    }
    match token.parse::<f64>() {
        Ok(v) if v.is_finite() => Some(RawWeight::Real(v)),
        _ => None,
    }
}

/// Adjacency matrix of the graph over the chosen semiring: entry (u,v)
/// is the ⊕-fold of all u→v edge weights, φ where no edge exists.
pub fn graph_to_matrix<S: Semiring>(
    g: &GraphEdgeList,
    semiring: S,
) -> Result<SemiringMatrix<S>, Error> {
    let n = g.vertex_count;
    let mut m = SemiringMatrix::zeros(semiring, n, n);
    for edge in &g.edges {
        for v in [edge.source, edge.target] {
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count: n,
                });
            }
        }
        let w = semiring.element_from_weight(edge.weight)?;
        let folded = semiring.oplus(m.get(edge.source, edge.target), w);
        m.set(edge.source, edge.target, folded);
    }
    Ok(m)
}

/// Build the adjacency matrix and close it: entry (u,v) of the result
/// is the optimal path value u→v, with e on the diagonal for the empty
/// path. Divergence is reported with the offending pivot vertex.
pub fn solve_path_problem<S: Semiring>(
    g: &GraphEdgeList,
    semiring: S,
) -> Result<SemiringMatrix<S>, Error> {
    Ok(solve_path_problem_counted(g, semiring)?.0)
}

pub fn solve_path_problem_counted<S: Semiring>(
    g: &GraphEdgeList,
    semiring: S,
) -> Result<(SemiringMatrix<S>, OpCount), Error> {
    graph_to_matrix(g, semiring)?.closure_general_counted()
}
