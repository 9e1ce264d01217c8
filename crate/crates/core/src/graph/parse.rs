//! Edge-list text format.
//!
//! ```text
//! # comment
//! 4          <- vertex count
//! 0 1        <- one edge per line
//! 1 2
//! ```
//! Blank lines are ignored. Edges are unordered and must be unique.

use super::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        Self { line, message: message.into() }
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut m: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        match m {
            None => {
                let count = fields.next().unwrap_or_default();
                let count = count
                    .parse::<usize>()
                    .map_err(|_| ParseError::at(line_no, format!("expected vertex count, found `{line}`")))?;
                if fields.next().is_some() {
                    return Err(ParseError::at(line_no, "vertex count line must hold a single integer"));
                }
                m = Some(count);
            }
            Some(count) => {
                let parse_vertex = |tok: Option<&str>| -> Result<usize, ParseError> {
                    let tok = tok.ok_or_else(|| ParseError::at(line_no, "expected `u v`"))?;
                    tok.parse::<usize>()
                        .map_err(|_| ParseError::at(line_no, format!("`{tok}` is not a vertex index")))
                };
                let u = parse_vertex(fields.next())?;
                let v = parse_vertex(fields.next())?;
                if fields.next().is_some() {
                    return Err(ParseError::at(line_no, "trailing data after edge"));
                }
                for w in [u, v] {
                    if w >= count {
                        return Err(ParseError::at(line_no, format!("vertex {w} out of range (m = {count})")));
                    }
                }
                if u == v {
                    return Err(ParseError::at(line_no, format!("self-loop at vertex {u}")));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(ParseError::at(line_no, format!("duplicate edge {u} {v}")));
                }
                edges.push((u, v));
            }
        }
    }

    let m = m.ok_or_else(|| ParseError::at(last_line.max(1), "missing vertex count"))?;
    Graph::new(m, edges).map_err(|e: GraphError| ParseError::at(last_line, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_named, NAMED_GRAPHS};

    #[test]
    fn reads_path() {
        let g = parse_graph("3\n0 1\n1 2").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn comments_and_blanks() {
        let g = parse_graph("# a triangle\n\n3\n# edges\n2 1\n0 2\n\n1 0\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn forbidden_inputs_name_the_line() {
        let e = parse_graph("2\n0 0").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("self-loop"));
        let e = parse_graph("4\n0 1\n0 1").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("duplicate"));
        let e = parse_graph("4\n0 1\n1 0").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_graph("3\n0 3").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("out of range"));
        assert_eq!(parse_graph("x\n").unwrap_err().line, 1);
        assert_eq!(parse_graph("3\n0 1 2\n").unwrap_err().line, 2);
        assert_eq!(parse_graph("3\n0\n").unwrap_err().line, 2);
        assert!(parse_graph("# nothing\n").is_err());
    }

    #[test]
    fn render_round_trips_named_graphs() {
        for &(name, params) in NAMED_GRAPHS {
            let g = generate_named(name, params).unwrap();
            assert_eq!(parse_graph(&g.render()).unwrap(), g, "{name}");
        }
    }
}
