//! Line-based graph file format.
//!
//! ```text
//! # comment
//! vertex v1
//! vertex v2
//! edge e1 a v1 v2
//! base v1
//! frontier v2
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use super::{GraphError, LabeledGraph, VertexId};
use crate::word::Letter;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unknown directive `{0}`")]
    UnknownDirective(String),
    #[error("`{directive}` expects {expected} argument(s), found {found}")]
    Arity {
        directive: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("label `{0}` is not a single lowercase letter")]
    BadLabel(String),
    #[error("duplicate `base` directive")]
    DuplicateBase,
    #[error("vertex `{0}` listed twice as frontier")]
    DuplicateFrontier(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A parsed graph file together with its optional directives.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GraphFile {
    pub graph: LabeledGraph,
    pub base: Option<VertexId>,
    pub frontier: Vec<VertexId>,
}

pub fn parse_graph(text: &str) -> Result<GraphFile, ParseError> {
    let mut out = GraphFile::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |kind| ParseError { line, kind };
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let arity = |directive: &'static str, expected: usize| {
            if tokens.len() - 1 == expected {
                Ok(())
            } else {
                Err(err(ParseErrorKind::Arity {
                    directive,
                    expected,
                    found: tokens.len() - 1,
                }))
            }
        };
        let lookup = |g: &LabeledGraph, name: &str| {
            g.require_vertex(name)
                .map_err(|e| err(ParseErrorKind::Graph(e)))
        };
        match tokens[0] {
            "vertex" => {
                arity("vertex", 1)?;
                out.graph
                    .add_vertex(tokens[1])
                    .map_err(|e| err(e.into()))?;
            }
            "edge" => {
                arity("edge", 4)?;
                let letter: Letter = tokens[2]
                    .parse()
                    .map_err(|_| err(ParseErrorKind::BadLabel(tokens[2].to_string())))?;
                let src = lookup(&out.graph, tokens[3])?;
                let dst = lookup(&out.graph, tokens[4])?;
                out.graph
                    .add_edge(tokens[1], letter, src, dst)
                    .map_err(|e| err(e.into()))?;
            }
            "base" => {
                arity("base", 1)?;
                if out.base.is_some() {
                    return Err(err(ParseErrorKind::DuplicateBase));
                }
                out.base = Some(lookup(&out.graph, tokens[1])?);
            }
            "frontier" => {
                arity("frontier", 1)?;
                let v = lookup(&out.graph, tokens[1])?;
                if out.frontier.contains(&v) {
                    return Err(err(ParseErrorKind::DuplicateFrontier(tokens[1].to_string())));
                }
                out.frontier.push(v);
            }
            other => return Err(err(ParseErrorKind::UnknownDirective(other.to_string()))),
        }
    }
    Ok(out)
}

/// Serialize vertices, then edges, then `base` and `frontier` lines, each
/// group in natural id order.
pub fn write_graph(g: &LabeledGraph, base: Option<VertexId>, frontier: &[VertexId]) -> String {
    let mut s = String::new();
    for v in g.vertices_sorted() {
        let _ = writeln!(s, "vertex {}", g.vertex_name(v));
    }
    for e in g.edges_sorted() {
        let edge = g.edge(e);
        let _ = writeln!(
            s,
            "edge {} {} {} {}",
            edge.name,
            edge.letter,
            g.vertex_name(edge.src),
            g.vertex_name(edge.dst)
        );
    }
    if let Some(b) = base {
        let _ = writeln!(s, "base {}", g.vertex_name(b));
    }
    let mut frontier = frontier.to_vec();
    frontier.sort_by(|&a, &b| super::natural_cmp(g.vertex_name(a), g.vertex_name(b)));
    for v in frontier {
        let _ = writeln!(s, "frontier {}", g.vertex_name(v));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG3: &str = "\
# four vertices, six positive edges
vertex v1
vertex v2
vertex v3
vertex v4
edge e1 a v1 v4
edge e2 a v2 v3
edge e3 a v3 v2
edge e4 a v4 v1
edge e5 b v1 v2
edge e6 b v4 v3
base v1
";

    #[test]
    fn single_vertex() {
        let f = parse_graph("vertex v\n").unwrap();
        assert_eq!(f.graph.vertex_count(), 1);
        assert_eq!(f.graph.edge_count(), 0);
        assert_eq!(f.base, None);
    }

    #[test]
    fn figure_three_file() {
        let f = parse_graph(FIG3).unwrap();
        assert_eq!(f.graph.vertex_count(), 4);
        assert_eq!(f.graph.edge_count(), 6);
        assert_eq!(f.base, f.graph.vertex_by_name("v1"));
        assert!(f.graph.is_deterministic());
        assert_eq!(write_graph(&f.graph, f.base, &f.frontier), FIG3.split_once('\n').unwrap().1);
    }

    #[test]
    fn errors_are_positional() {
        let e = parse_graph("edge e a v w\n").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(matches!(e.kind, ParseErrorKind::Graph(GraphError::UnknownVertex(_))));

        let e = parse_graph("vertex v\nvertex w\nedge e a v w\nedge e a w v\n").unwrap_err();
        assert_eq!(e.line, 4);
        assert!(matches!(e.kind, ParseErrorKind::Graph(GraphError::DuplicateEdge(_))));

        let e = parse_graph("vertex v\nedge e A v v\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::BadLabel("A".into()));
        let e = parse_graph("vertex v\nedge e ab v v\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::BadLabel("ab".into()));

        let e = parse_graph("vertex v\nbase v\n\n# x\nbase v\n").unwrap_err();
        assert_eq!(e.line, 5);
        assert_eq!(e.kind, ParseErrorKind::DuplicateBase);

        let e = parse_graph("vertices v\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::UnknownDirective(_)));
        let e = parse_graph("vertex\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Arity { .. }));
    }

    #[test]
    fn frontier_directive_round_trips() {
        let text = "vertex v\nvertex v.a\nedge v.a a v v.a\nfrontier v.a\n";
        let f = parse_graph(text).unwrap();
        assert_eq!(f.frontier.len(), 1);
        assert_eq!(write_graph(&f.graph, f.base, &f.frontier), text);
    }
}
