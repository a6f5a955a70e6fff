//! Line-oriented text formats for graphs and digraphs.
//!
//! `.ecg` (edge-colored graph):
//!
//! ```text
//! ecg <n> <m>
//! <u> <v> <c>      # one line per edge, 0 <= u,v < n, u != v, c >= 0
//! ```
//!
//! `.dcg` (directed bipartite graph):
//!
//! ```text
//! dcg <|A|> <|B|> <arcs>
//! <u> <v>          # arc u -> v; A ids are 0..|A|, B ids are |A|..|A|+|B|
//! ```
//!
//! Both formats are UTF-8 with LF newlines. Lines beginning with `#` are
//! comments; blank lines are ignored. Parsing is strict otherwise and every
//! error names the offending line. Serialization writes edges in canonical
//! `(min endpoint, max endpoint)` order (arcs by ordered pair), so
//! `parse . serialize` is the identity on canonical form.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::EdgeColoredGraph;
use crate::hunt::Digraph;

/// Hard cap on header counts so untrusted input cannot force huge
/// allocations before any edge line is validated.
pub const MAX_HEADER_COUNT: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("missing '{0} <counts>' header")]
    MissingHeader(&'static str),
    #[error("malformed header, expected '{0}'")]
    MalformedHeader(&'static str),
    #[error("vertex count must be at least 1")]
    NoVertices,
    #[error("count exceeds limit {MAX_HEADER_COUNT}")]
    CountTooLarge,
    #[error("malformed line, expected '{0}'")]
    MalformedLine(&'static str),
    #[error("negative color")]
    NegativeColor,
    #[error("color does not fit in 32 bits")]
    ColorTooLarge,
    #[error("vertex id {id} out of range (n = {n})")]
    VertexOutOfRange { id: u64, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(u64),
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: u32, v: u32 },
    #[error("duplicate arc {u}->{v}")]
    DuplicateArc { u: u32, v: u32 },
    #[error("arc {u}->{v} does not cross the bipartition")]
    ArcWithinPart { u: u32, v: u32 },
    #[error("more lines than the declared {expected}")]
    TooManyLines { expected: usize },
    #[error("expected {expected} lines, found {found}")]
    TooFewLines { expected: usize, found: usize },
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Content lines with their 1-based physical line numbers; comments and
/// blank lines dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_count(tok: &str, line: usize) -> Result<usize, ParseError> {
    let value: usize = tok
        .parse()
        .map_err(|_| err(line, ParseErrorKind::MalformedHeader("nonnegative counts")))?;
    if value > MAX_HEADER_COUNT {
        return Err(err(line, ParseErrorKind::CountTooLarge));
    }
    Ok(value)
}

fn parse_vertex(tok: &str, n: usize, line: usize, shape: &'static str) -> Result<u32, ParseError> {
    let id: u64 = tok
        .parse()
        .map_err(|_| err(line, ParseErrorKind::MalformedLine(shape)))?;
    if id >= n as u64 {
        return Err(err(line, ParseErrorKind::VertexOutOfRange { id, n }));
    }
    Ok(id as u32)
}

/// Parses `.ecg` text into a graph.
pub fn parse_ecg(text: &str) -> Result<EdgeColoredGraph, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(1, ParseErrorKind::MissingHeader("ecg")))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 || fields[0] != "ecg" {
        return Err(err(
            header_line,
            ParseErrorKind::MalformedHeader("ecg <n> <m>"),
        ));
    }
    let n = parse_count(fields[1], header_line)?;
    if n == 0 {
        return Err(err(header_line, ParseErrorKind::NoVertices));
    }
    let m = parse_count(fields[2], header_line)?;

    let mut edges: Vec<(u32, u32, u32)> = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut last_line = header_line;
    for (line, content) in lines {
        if edges.len() == m {
            return Err(err(line, ParseErrorKind::TooManyLines { expected: m }));
        }
        last_line = line;
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(err(line, ParseErrorKind::MalformedLine("<u> <v> <c>")));
        }
        let u = parse_vertex(fields[0], n, line, "<u> <v> <c>")?;
        let v = parse_vertex(fields[1], n, line, "<u> <v> <c>")?;
        if u == v {
            return Err(err(line, ParseErrorKind::SelfLoop(u as u64)));
        }
        let color = parse_color(fields[2], line)?;
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(err(
                line,
                ParseErrorKind::DuplicateEdge { u: key.0, v: key.1 },
            ));
        }
        edges.push((u, v, color));
    }
    if edges.len() < m {
        return Err(err(
            last_line + 1,
            ParseErrorKind::TooFewLines {
                expected: m,
                found: edges.len(),
            },
        ));
    }
    // Range, loop and duplicate checks already ran line by line.
    Ok(EdgeColoredGraph::new(n, &edges).expect("validated while parsing"))
}

fn parse_color(tok: &str, line: usize) -> Result<u32, ParseError> {
    if tok.starts_with('-') && tok[1..].parse::<u64>().is_ok() {
        return Err(err(line, ParseErrorKind::NegativeColor));
    }
    let value: u64 = tok
        .parse()
        .map_err(|_| err(line, ParseErrorKind::MalformedLine("<u> <v> <c>")))?;
    u32::try_from(value).map_err(|_| err(line, ParseErrorKind::ColorTooLarge))
}

/// Serializes a graph in canonical edge order.
pub fn serialize_ecg(g: &EdgeColoredGraph) -> String {
    let mut out = String::new();
    writeln!(out, "ecg {} {}", g.n(), g.m()).unwrap();
    for &(u, v, c) in g.edges() {
        writeln!(out, "{} {} {}", u, v, c).unwrap();
    }
    out
}

/// Parses `.dcg` text into a directed bipartite graph.
pub fn parse_dcg(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(1, ParseErrorKind::MissingHeader("dcg")))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 4 || fields[0] != "dcg" {
        return Err(err(
            header_line,
            ParseErrorKind::MalformedHeader("dcg <|A|> <|B|> <arcs>"),
        ));
    }
    let a_size = parse_count(fields[1], header_line)?;
    let b_size = parse_count(fields[2], header_line)?;
    let arc_count = parse_count(fields[3], header_line)?;
    let n = a_size + b_size;

    let mut arcs: Vec<(u32, u32)> = Vec::with_capacity(arc_count);
    let mut seen = std::collections::HashSet::with_capacity(arc_count);
    let mut last_line = header_line;
    for (line, content) in lines {
        if arcs.len() == arc_count {
            return Err(err(
                line,
                ParseErrorKind::TooManyLines {
                    expected: arc_count,
                },
            ));
        }
        last_line = line;
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(line, ParseErrorKind::MalformedLine("<u> <v>")));
        }
        let u = parse_vertex(fields[0], n, line, "<u> <v>")?;
        let v = parse_vertex(fields[1], n, line, "<u> <v>")?;
        let u_in_a = (u as usize) < a_size;
        let v_in_a = (v as usize) < a_size;
        if u_in_a == v_in_a {
            return Err(err(line, ParseErrorKind::ArcWithinPart { u, v }));
        }
        if !seen.insert((u, v)) {
            return Err(err(line, ParseErrorKind::DuplicateArc { u, v }));
        }
        arcs.push((u, v));
    }
    if arcs.len() < arc_count {
        return Err(err(
            last_line + 1,
            ParseErrorKind::TooFewLines {
                expected: arc_count,
                found: arcs.len(),
            },
        ));
    }
    Ok(Digraph::new(a_size, b_size, &arcs).expect("validated while parsing"))
}

/// Serializes a digraph with arcs sorted by ordered pair.
pub fn serialize_dcg(d: &Digraph) -> String {
    let mut out = String::new();
    writeln!(out, "dcg {} {} {}", d.a_size(), d.b_size(), d.arc_count()).unwrap();
    for &(u, v) in d.arcs() {
        writeln!(out, "{} {}", u, v).unwrap();
    }
    out
}
