//! Simple undirected graphs with sorted adjacency lists, plus the edge-list
//! text format used by the command-line tools.
//!
//! Format: UTF-8 text, lines starting with `#` are ignored, the first
//! non-comment line is `n m`, followed by exactly `m` lines `u v` with
//! `0 <= u < v < n`, single-space separated, LF line endings.

use std::fmt;

/// Immutable simple undirected graph. Vertex ids are `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
    min_degree: usize,
    max_degree: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { id: usize, n: usize },
    SelfLoop { id: usize },
    DuplicateEdge { u: usize, v: usize },
    EmptyGraph,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { id, n } => {
                write!(f, "vertex id {id} out of range for graph on {n} vertices")
            }
            GraphError::SelfLoop { id } => write!(f, "self-loop at vertex {id}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {u} {v}"),
            GraphError::EmptyGraph => write!(f, "graph has no vertices"),
        }
    }
}

impl std::error::Error for GraphError {}

impl Graph {
    /// Builds a graph from an explicit edge list, validating simplicity.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { id: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { id: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { id: u });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge { u: key.0, v: key.1 });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        Ok(Graph::from_sorted_adj(adj, edges.len()))
    }

    fn from_sorted_adj(adj: Vec<Vec<usize>>, m: usize) -> Graph {
        let n = adj.len();
        let (mut min_degree, mut max_degree) = (0, 0);
        if n > 0 {
            min_degree = adj.iter().map(Vec::len).min().unwrap();
            max_degree = adj.iter().map(Vec::len).max().unwrap();
        }
        Graph {
            n,
            m,
            adj,
            min_degree,
            max_degree,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn min_degree(&self) -> usize {
        self.min_degree
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.n > 0 && self.min_degree == d && self.max_degree == d
    }

    /// Edges as `(u, v)` pairs with `u < v`, lexicographically ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Canonical text form; `parse_graph(g.to_text())` reproduces `g` exactly.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} {}\n", self.n, self.m));
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Minimum and maximum vertex degree of a nonempty graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeStats {
    pub min_degree: usize,
    pub max_degree: usize,
}

pub fn degree_stats(g: &Graph) -> Result<DegreeStats, GraphError> {
    if g.vertex_count() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    Ok(DegreeStats {
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    MalformedHeader,
    MalformedEdge,
    NonCanonicalEdge { u: usize, v: usize },
    VertexOutOfRange { id: usize, n: usize },
    SelfLoop { id: usize },
    DuplicateEdge { u: usize, v: usize },
    TooManyEdges { expected: usize },
    TooFewEdges { expected: usize, found: usize },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: ", self.line)?;
        match &self.kind {
            ParseErrorKind::MissingHeader => write!(f, "missing `n m` header"),
            ParseErrorKind::MalformedHeader => write!(f, "malformed header, expected `n m`"),
            ParseErrorKind::MalformedEdge => write!(f, "malformed edge line, expected `u v`"),
            ParseErrorKind::NonCanonicalEdge { u, v } => {
                write!(f, "edge {u} {v} must be written with u < v")
            }
            ParseErrorKind::VertexOutOfRange { id, n } => {
                write!(f, "vertex id {id} out of range (n = {n})")
            }
            ParseErrorKind::SelfLoop { id } => write!(f, "self-loop at vertex {id}"),
            ParseErrorKind::DuplicateEdge { u, v } => write!(f, "duplicate edge {u} {v}"),
            ParseErrorKind::TooManyEdges { expected } => {
                write!(f, "more edge lines than the {expected} declared in the header")
            }
            ParseErrorKind::TooFewEdges { expected, found } => {
                write!(f, "header declared {expected} edges but only {found} were given")
            }
        }
    }
}

impl std::error::Error for ParseError {}

fn parse_two_fields(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split(' ');
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

/// Parses the edge-list format. Every error carries a 1-based line number.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut adj: Vec<Vec<usize>> = Vec::new();
    let mut edges_seen = 0usize;
    let mut last_line = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        if raw.starts_with('#') {
            continue;
        }
        match header {
            None => {
                let (n, m) = parse_two_fields(raw).ok_or(ParseError {
                    line: line_no,
                    kind: ParseErrorKind::MalformedHeader,
                })?;
                adj = vec![Vec::new(); n];
                header = Some((n, m));
            }
            Some((n, m)) => {
                if edges_seen == m {
                    return Err(ParseError {
                        line: line_no,
                        kind: ParseErrorKind::TooManyEdges { expected: m },
                    });
                }
                let (u, v) = parse_two_fields(raw).ok_or(ParseError {
                    line: line_no,
                    kind: ParseErrorKind::MalformedEdge,
                })?;
                if u == v {
                    return Err(ParseError {
                        line: line_no,
                        kind: ParseErrorKind::SelfLoop { id: u },
                    });
                }
                if u > v {
                    return Err(ParseError {
                        line: line_no,
                        kind: ParseErrorKind::NonCanonicalEdge { u, v },
                    });
                }
                if v >= n {
                    return Err(ParseError {
                        line: line_no,
                        kind: ParseErrorKind::VertexOutOfRange { id: v, n },
                    });
                }
                if adj[u].contains(&v) {
                    return Err(ParseError {
                        line: line_no,
                        kind: ParseErrorKind::DuplicateEdge { u, v },
                    });
                }
                adj[u].push(v);
                adj[v].push(u);
                edges_seen += 1;
            }
        }
    }

    let (_, m) = header.ok_or(ParseError {
        line: last_line.max(1),
        kind: ParseErrorKind::MissingHeader,
    })?;
    if edges_seen < m {
        return Err(ParseError {
            line: last_line.max(1),
            kind: ParseErrorKind::TooFewEdges {
                expected: m,
                found: edges_seen,
            },
        });
    }
    for list in adj.iter_mut() {
        list.sort_unstable();
    }
    Ok(Graph::from_sorted_adj(adj, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_two_edge_path() {
        let g = parse_graph("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        let degs: Vec<_> = (0..3).map(|v| g.degree(v)).collect();
        assert_eq!(degs, vec![1, 2, 1]);
    }

    #[test]
    fn parse_complete_graph() {
        let mut text = String::from("6 15\n");
        for u in 0..6 {
            for v in (u + 1)..6 {
                text.push_str(&format!("{u} {v}\n"));
            }
        }
        let g = parse_graph(&text).unwrap();
        assert!(g.is_regular(5));
        let stats = degree_stats(&g).unwrap();
        assert_eq!((stats.min_degree, stats.max_degree), (5, 5));
    }

    #[test]
    fn degree_stats_examples() {
        let mut edges = Vec::new();
        for a in 0..5 {
            for b in 5..10 {
                edges.push((a, b));
            }
        }
        let k55 = Graph::from_edges(10, &edges).unwrap();
        let stats = degree_stats(&k55).unwrap();
        assert_eq!((stats.min_degree, stats.max_degree), (5, 5));

        let p3 = parse_graph("3 2\n0 1\n1 2\n").unwrap();
        let stats = degree_stats(&p3).unwrap();
        assert_eq!((stats.min_degree, stats.max_degree), (1, 2));
    }

    #[test]
    fn duplicate_edge_reports_line() {
        let err = parse_graph("2 2\n0 1\n0 1\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(err.kind, ParseErrorKind::DuplicateEdge { u: 0, v: 1 });
    }

    #[test]
    fn self_loop_and_range_errors() {
        let err = parse_graph("3 1\n1 1\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::SelfLoop { id: 1 });
        let err = parse_graph("3 1\n0 3\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::VertexOutOfRange { id: 3, n: 3 });
        let err = parse_graph("3 1\n1 0\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::NonCanonicalEdge { u: 1, v: 0 });
    }

    #[test]
    fn edge_count_must_match_header() {
        let err = parse_graph("3 2\n0 1\n").unwrap_err();
        assert_eq!(
            err.kind,
            ParseErrorKind::TooFewEdges {
                expected: 2,
                found: 1
            }
        );
        let err = parse_graph("3 1\n0 1\n1 2\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::TooManyEdges { expected: 1 });
    }

    #[test]
    fn comments_are_ignored() {
        let g = parse_graph("# a path\n3 2\n# edges follow\n0 1\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn empty_graph_degree_stats_rejected() {
        let g = parse_graph("0 0\n").unwrap();
        assert_eq!(degree_stats(&g), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn text_round_trip() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 3)]).unwrap();
        let again = parse_graph(&g.to_text()).unwrap();
        assert_eq!(g, again);
    }
}
