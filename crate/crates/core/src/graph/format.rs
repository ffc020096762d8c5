//! Edge-list and graph6 text encodings.
//!
//! Edge list: a header line `n m` followed by `m` lines `u v` (0-indexed).
//! Blank lines and lines starting with `#` are skipped.
//!
//! graph6: the usual printable encoding of the upper triangle of the
//! adjacency matrix, six bits per byte offset by 63. An optional
//! `>>graph6<<` header is accepted on input and never written.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{edge, Edge, Graph};
use crate::error::{Error, Location, ParseErrorKind, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[serde(rename = "edgelist")]
    EdgeList,
    Graph6,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "edgelist" | "edge-list" | "txt" => Ok(Format::EdgeList),
            "graph6" | "g6" => Ok(Format::Graph6),
            other => Err(format!("unknown graph format '{other}'")),
        }
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => parse_graph6(text),
    }
}

pub fn serialize_graph(graph: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => write_edge_list(graph),
        Format::Graph6 => write_graph6(graph),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let header_err = |line| Error::parse(Location::Line(line), ParseErrorKind::MalformedHeader);
    let (hline, header) = lines.next().ok_or_else(|| header_err(1))?;
    let (n, m) = two_numbers(header).ok_or_else(|| header_err(hline))?;

    let mut edges: Vec<Edge> = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut last_line = hline;
    for (line, body) in lines {
        last_line = line;
        let at = Location::Line(line);
        let (u, v) =
            two_numbers(body).ok_or_else(|| Error::parse(at, ParseErrorKind::MalformedEdge))?;
        for w in [u, v] {
            if w >= n {
                return Err(Error::parse(
                    at,
                    ParseErrorKind::VertexOutOfRange { vertex: w, n },
                ));
            }
        }
        if u == v {
            return Err(Error::parse(at, ParseErrorKind::SelfLoop(u)));
        }
        let e = edge(u, v);
        if !seen.insert(e) {
            return Err(Error::parse(at, ParseErrorKind::DuplicateEdge(e.0, e.1)));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(Error::parse(
            Location::Line(last_line),
            ParseErrorKind::EdgeCountMismatch {
                expected: m,
                found: edges.len(),
            },
        ));
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted(n, edges))
}

fn two_numbers(s: &str) -> Option<(usize, usize)> {
    let mut it = s.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

fn write_edge_list(graph: &Graph) -> String {
    let mut out = format!("{} {}", graph.order(), graph.size());
    for &(u, v) in graph.edges() {
        out.push_str(&format!("\n{u} {v}"));
    }
    out
}

const HEADER: &str = ">>graph6<<";

fn parse_graph6(text: &str) -> Result<Graph> {
    let start = if text.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let bytes = text.trim_end().as_bytes();
    let mut pos = start;

    let next = |pos: &mut usize| -> Result<u64> {
        let b = *bytes.get(*pos).ok_or(Error::parse(
            Location::Byte(*pos),
            ParseErrorKind::Truncated,
        ))?;
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                Location::Byte(*pos),
                ParseErrorKind::InvalidChar(b),
            ));
        }
        *pos += 1;
        Ok((b - 63) as u64)
    };

    let first = next(&mut pos)?;
    let n = if first < 63 {
        first as usize
    } else {
        let wide = bytes.get(pos) == Some(&126);
        if wide {
            pos += 1;
        }
        let k = if wide { 6 } else { 3 };
        let mut n = 0u64;
        for _ in 0..k {
            n = (n << 6) | next(&mut pos)?;
        }
        n as usize
    };

    let bits = n * n.saturating_sub(1) / 2;
    let nbytes = bits.div_ceil(6);
    let body_start = pos;
    let mut data = Vec::with_capacity(nbytes);
    for _ in 0..nbytes {
        data.push(next(&mut pos)?);
    }
    if pos != bytes.len() {
        return Err(Error::parse(
            Location::Byte(pos),
            ParseErrorKind::TrailingData,
        ));
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if data[nbytes - 1] & ((1 << pad) - 1) != 0 {
            return Err(Error::parse(
                Location::Byte(body_start + nbytes - 1),
                ParseErrorKind::NonZeroPadding,
            ));
        }
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if (data[k / 6] >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted(n, edges))
}

fn write_graph6(graph: &Graph) -> String {
    let n = graph.order();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push(((n as u64 >> s) & 63) as u8 + 63);
        }
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if graph.has_edge(i, j) {
                data[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    out.extend(data.into_iter().map(|b| b + 63));
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures;

    #[test]
    fn edge_list_triangle() {
        let g = parse_graph("3 3\n0 1\n0 2\n1 2", Format::EdgeList).unwrap();
        assert_eq!(g, fixtures::triangle());
        assert_eq!(serialize_graph(&g, Format::EdgeList), "3 3\n0 1\n0 2\n1 2");
    }

    #[test]
    fn edge_list_empty_graph() {
        let g = Graph::empty(0);
        assert_eq!(serialize_graph(&g, Format::EdgeList), "0 0");
        assert_eq!(parse_graph("0 0", Format::EdgeList).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_carry_line() {
        let err = parse_graph("2 1\n0 0", Format::EdgeList).unwrap_err();
        assert!(matches!(
            err,
            Error::Parse {
                location: Location::Line(2),
                kind: ParseErrorKind::SelfLoop(0)
            }
        ));
        let err = parse_graph("# c\n3 2\n0 1\n\n1 0", Format::EdgeList).unwrap_err();
        assert!(matches!(
            err,
            Error::Parse {
                location: Location::Line(5),
                kind: ParseErrorKind::DuplicateEdge(0, 1)
            }
        ));
        let err = parse_graph("3 1\n0 3", Format::EdgeList).unwrap_err();
        assert!(matches!(
            err,
            Error::Parse {
                kind: ParseErrorKind::VertexOutOfRange { vertex: 3, n: 3 },
                ..
            }
        ));
        assert!(matches!(
            parse_graph("3\n0 1", Format::EdgeList).unwrap_err(),
            Error::Parse {
                location: Location::Line(1),
                kind: ParseErrorKind::MalformedHeader
            }
        ));
        assert!(matches!(
            parse_graph("3 2\n0 1", Format::EdgeList).unwrap_err(),
            Error::Parse {
                kind: ParseErrorKind::EdgeCountMismatch {
                    expected: 2,
                    found: 1
                },
                ..
            }
        ));
        assert!(parse_graph("", Format::EdgeList).is_err());
    }

    #[test]
    fn graph6_triangle() {
        let f1 = fixtures::triangle();
        assert_eq!(serialize_graph(&f1, Format::Graph6), "Bw");
        assert_eq!(parse_graph("Bw", Format::Graph6).unwrap(), f1);
        assert_eq!(parse_graph(">>graph6<<Bw\n", Format::Graph6).unwrap(), f1);
    }

    #[test]
    fn graph6_known_strings() {
        // Encoded by hand from the upper-triangle bit order.
        assert_eq!(serialize_graph(&fixtures::p4(), Format::Graph6), "Ch");
        assert_eq!(serialize_graph(&fixtures::c5(), Format::Graph6), "Dhc");
        assert_eq!(serialize_graph(&Graph::empty(0), Format::Graph6), "?");
        assert_eq!(serialize_graph(&Graph::empty(1), Format::Graph6), "@");
    }

    #[test]
    fn graph6_long_header() {
        let g = Graph::new(70, [(0, 69), (3, 4)]).unwrap();
        let s = serialize_graph(&g, Format::Graph6);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 63 + 6]);
        assert_eq!(parse_graph(&s, Format::Graph6).unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(
            parse_graph("B", Format::Graph6).unwrap_err(),
            Error::Parse {
                location: Location::Byte(1),
                kind: ParseErrorKind::Truncated
            }
        ));
        assert!(matches!(
            parse_graph("Bww", Format::Graph6).unwrap_err(),
            Error::Parse {
                location: Location::Byte(2),
                kind: ParseErrorKind::TrailingData
            }
        ));
        // 'x' = 63 + 0b111001 sets a padding bit.
        assert!(matches!(
            parse_graph("Bx", Format::Graph6).unwrap_err(),
            Error::Parse {
                kind: ParseErrorKind::NonZeroPadding,
                ..
            }
        ));
        assert!(matches!(
            parse_graph("B\x01", Format::Graph6).unwrap_err(),
            Error::Parse {
                kind: ParseErrorKind::InvalidChar(1),
                ..
            }
        ));
    }

    #[test]
    fn fixtures_round_trip() {
        for (name, g) in fixtures::all() {
            for fmt in [Format::EdgeList, Format::Graph6] {
                let text = serialize_graph(&g, fmt);
                assert_eq!(parse_graph(&text, fmt).unwrap(), g, "{name} {fmt:?}");
            }
        }
    }
}
