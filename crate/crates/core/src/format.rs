//! Plain-text graph format.
//!
//! ```text
//! # optional comments
//! n m
//! a b c
//! ...
//! ```
//!
//! The header gives the vertex count and the number of edge lines; each edge
//! line holds three 0-based vertex indices separated by spaces.

use thiserror::Error;

use crate::graph::{GraphError, LinearThreeGraph, Vertex};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("missing `n m` header line")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("header announces {expected} edges but {found} edge lines follow")]
    EdgeCount { expected: usize, found: usize },
    #[error("{}{error}", lines_prefix(.lines))]
    Graph {
        lines: Vec<usize>,
        error: GraphError,
    },
}

fn lines_prefix(lines: &[usize]) -> String {
    match lines {
        [] => String::new(),
        [l] => format!("line {l}: "),
        ls => format!(
            "lines {}: ",
            ls.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        ),
    }
}

pub fn parse_graph(text: &str) -> Result<LinearThreeGraph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let [n, m] = parse_numbers::<usize, 2>(header_line, header)?;

    let mut triples: Vec<[Vertex; 3]> = Vec::with_capacity(m);
    let mut line_of = Vec::with_capacity(m);
    for (line, content) in lines {
        triples.push(parse_numbers::<Vertex, 3>(line, content)?);
        line_of.push(line);
    }
    if triples.len() != m {
        return Err(FormatError::EdgeCount {
            expected: m,
            found: triples.len(),
        });
    }
    LinearThreeGraph::build(n, triples).map_err(|error| FormatError::Graph {
        lines: error.edge_positions().iter().map(|&i| line_of[i]).collect(),
        error,
    })
}

fn parse_numbers<T: std::str::FromStr, const K: usize>(
    line: usize,
    content: &str,
) -> Result<[T; K], FormatError> {
    let fields: Vec<&str> = content.split_whitespace().collect();
    if fields.len() != K {
        return Err(FormatError::Syntax {
            line,
            message: format!("expected {K} integers, found {} fields", fields.len()),
        });
    }
    let mut parsed = Vec::with_capacity(K);
    for field in fields {
        parsed.push(field.parse::<T>().map_err(|_| FormatError::Syntax {
            line,
            message: format!("`{field}` is not a non-negative integer"),
        })?);
    }
    Ok(parsed.try_into().ok().expect("length checked above"))
}

pub fn write_graph(g: &LinearThreeGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        let [a, b, c] = e.vertices();
        out.push_str(&format!("{a} {b} {c}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_graph("# crown\n9 4\n0 1 2\n# pendants\n0 3 4\n1 5 6\n2 7 8").unwrap();
        assert_eq!((g.n(), g.edge_count()), (9, 4));
        assert_eq!(write_graph(&g), "9 4\n0 1 2\n0 3 4\n1 5 6\n2 7 8\n");
    }

    #[test]
    fn empty_edge_list() {
        let g = parse_graph("5 0\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 0));
    }

    #[test]
    fn reports_lines() {
        let err = parse_graph("4 2\n0 1 2\n# c\n0 1 3\n").unwrap_err();
        match &err {
            FormatError::Graph { lines, .. } => assert_eq!(lines, &vec![2, 4]),
            other => panic!("unexpected {other:?}"),
        }
        assert!(err.to_string().starts_with("lines 2, 4: "));

        assert!(matches!(
            parse_graph("4 1\n0 1 x\n"),
            Err(FormatError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("4 2\n0 1 2\n"),
            Err(FormatError::EdgeCount {
                expected: 2,
                found: 1
            })
        ));
        assert!(matches!(
            parse_graph("# nothing\n"),
            Err(FormatError::MissingHeader)
        ));
    }
}
