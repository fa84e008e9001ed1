//! Signed edge-list text format.
//!
//! ```text
//! # optional comments
//! n 4
//! 0 1 +
//! 0 3 -
//! ```
//!
//! The first non-comment, non-blank line is the header `n <count>`. Each
//! remaining line is `u v s` with `0 <= u < v < n` and `s` one of `+`/`-`.
//! Duplicate edges are rejected. [`write_edge_list`] emits the canonical
//! form: header, then edges sorted by `(u, v)`, no comments.

use std::collections::HashSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<SignedGraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let Some(order) = n else {
            match tokens.as_slice() {
                ["n", count] => {
                    let count = count.parse::<usize>().map_err(|_| {
                        parse_err(line_no, format!("invalid vertex count {count:?}"))
                    })?;
                    n = Some(count);
                    continue;
                }
                _ => return Err(parse_err(line_no, "expected header `n <count>`")),
            }
        };
        let [u, v, s] = tokens.as_slice() else {
            return Err(parse_err(line_no, "expected `u v s`"));
        };
        let vertex = |tok: &str| {
            tok.parse::<usize>()
                .map_err(|_| parse_err(line_no, format!("invalid vertex id {tok:?}")))
        };
        let (u, v) = (vertex(u)?, vertex(v)?);
        let sign = match *s {
            "+" => Sign::Plus,
            "-" => Sign::Minus,
            other => return Err(parse_err(line_no, format!("invalid sign {other:?}"))),
        };
        if u >= v {
            return Err(parse_err(
                line_no,
                format!("edge must satisfy u < v, got {u} {v}"),
            ));
        }
        if v >= order {
            return Err(parse_err(
                line_no,
                format!("vertex {v} out of range for n = {order}"),
            ));
        }
        if !seen.insert((u, v)) {
            return Err(parse_err(line_no, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v, sign));
    }
    let Some(order) = n else {
        return Err(parse_err(last_line.max(1), "missing header `n <count>`"));
    };
    SignedGraph::new(order, edges)
}

pub fn write_edge_list(g: &SignedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.order()).expect("writing to a String");
    for e in g.edges() {
        writeln!(out, "{} {} {}", e.u, e.v, e.sign).expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blank_lines() {
        let g = parse_edge_list("# square\n\nn 4\n0 1 +\n1 2 +\n  # mid\n2 3 -\n0 3 +\n").unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 4);
        assert_eq!(g.sign(2, 3), Some(Sign::Minus));
    }

    #[test]
    fn writes_canonical_form() {
        let g = parse_edge_list("n 3\n1 2 -\n0 1 +\n").unwrap();
        assert_eq!(write_edge_list(&g), "n 3\n0 1 +\n1 2 -\n");
        assert_eq!(write_edge_list(&SignedGraph::empty(2)), "n 2\n");
    }

    #[test]
    fn rejects_bad_input() {
        let line_of = |text: &str| match parse_edge_list(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line_of("n 2\n0 1 *\n"), 2);
        assert_eq!(line_of("n 3\n0 1 +\n0 1 -\n"), 3);
        assert_eq!(line_of("n 3\n1 0 +\n"), 2);
        assert_eq!(line_of("n 3\n1 1 +\n"), 2);
        assert_eq!(line_of("n 3\n0 3 +\n"), 2);
        assert_eq!(line_of("0 1 +\n"), 1);
        assert_eq!(line_of("n x\n"), 1);
        assert_eq!(line_of("n 3\n0 1\n"), 2);
        assert_eq!(line_of("# only a comment\n"), 1);
        assert_eq!(line_of(""), 1);
    }
}
