//! Reading and writing graphs: a plain edge-list text format and the
//! standard graph6 short form.
//!
//! Edge lists look like
//!
//! ```text
//! 4 3
//! 0 1
//! 0 2
//! 0 3
//! ```
//!
//! (`n m` header, then `m` edges). graph6 packs the upper triangle
//! column-by-column into 6-bit chunks offset by 63; the short form covers
//! orders up to 62. Parse errors name the offending line or byte.

use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Where a graph comes from and how it is encoded.
#[derive(Clone, Debug)]
pub struct GraphInput {
    pub source: GraphSource,
    pub format: GraphFormat,
}

#[derive(Clone, Debug)]
pub enum GraphSource {
    /// Read the file at this path.
    Path(PathBuf),
    /// Use the string as-is.
    Inline(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl GraphInput {
    pub fn parse(&self) -> Result<Graph> {
        let text = match &self.source {
            GraphSource::Inline(s) => s.clone(),
            GraphSource::Path(p) => std::fs::read_to_string(p).map_err(|e| {
                Error::parse(p.display().to_string(), format!("cannot read file: {e}"))
            })?,
        };
        match self.format {
            GraphFormat::EdgeList => parse_edgelist(&text),
            GraphFormat::Graph6 => parse_graph6(text.trim()),
        }
    }
}

// ---------------------------------------------------------------------------
// edge list
// ---------------------------------------------------------------------------

/// Parses the `n m` / `u v` edge-list format. Blank lines are ignored;
/// duplicate edges, self-loops, and count mismatches are errors naming the
/// 1-based line.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| Error::parse("line 1", "empty input, expected `n m` header"))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(format!("line {header_no}"), "bad vertex count"))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(format!("line {header_no}"), "bad edge count"))?;
    if it.next().is_some() {
        return Err(Error::parse(
            format!("line {header_no}"),
            "header must be exactly `n m`",
        ));
    }
    if n == 0 {
        return Err(Error::parse(
            format!("line {header_no}"),
            "graph must have at least one vertex",
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut count = 0;
    for (line_no, line) in lines {
        let loc = format!("line {line_no}");
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::parse(&loc, "bad endpoint"))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::parse(&loc, "bad endpoint"))?;
        if it.next().is_some() {
            return Err(Error::parse(&loc, "edge line must be exactly `u v`"));
        }
        if u >= n || v >= n {
            return Err(Error::parse(
                &loc,
                format!("vertex out of range 0..{n} in edge {u} {v}"),
            ));
        }
        if u == v {
            return Err(Error::parse(&loc, format!("self-loop at vertex {u}")));
        }
        if g.has_edge(u, v) {
            return Err(Error::parse(&loc, format!("duplicate edge {u} {v}")));
        }
        count += 1;
        if count > m {
            return Err(Error::parse(&loc, format!("more than {m} edges listed")));
        }
        g = g.with_edge(u, v)?;
    }
    if count != m {
        return Err(Error::parse(
            "end of input",
            format!("header promised {m} edges, found {count}"),
        ));
    }
    Ok(g)
}

/// Writes the edge-list form, one trailing newline.
pub fn format_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

/// Decodes the graph6 short form (ASCII, orders 1 through 62).
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse("byte 0", "empty graph6 string"));
    }
    if bytes[0] == 126 {
        return Err(Error::UnsupportedOrder(
            "long-form graph6 (order above 62) is not supported".into(),
        ));
    }
    if !(63..=125).contains(&bytes[0]) {
        return Err(Error::parse(
            "byte 0",
            format!("bad order byte {}", bytes[0]),
        ));
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        return Err(Error::parse(
            "byte 0",
            "graph must have at least one vertex",
        ));
    }
    let bit_count = n * (n - 1) / 2;
    let body_len = bit_count.div_ceil(6);
    if bytes.len() != 1 + body_len {
        return Err(Error::parse(
            format!("byte {}", bytes.len().min(1 + body_len)),
            format!(
                "order {n} needs {} bytes total, got {}",
                1 + body_len,
                bytes.len()
            ),
        ));
    }
    let mut bits = Vec::with_capacity(body_len * 6);
    for (i, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                format!("byte {}", i + 1),
                format!("bad byte {b}"),
            ));
        }
        let v = b - 63;
        for shift in (0..6).rev() {
            bits.push((v >> shift) & 1 == 1);
        }
    }
    if bits[bit_count..].iter().any(|&b| b) {
        return Err(Error::parse(
            format!("byte {body_len}"),
            "nonzero padding bits",
        ));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Encodes into the graph6 short form; orders above 62 are refused.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n > 62 {
        return Err(Error::UnsupportedOrder(format!(
            "graph6 short form covers orders up to 62, got {n}"
        )));
    }
    let mut bits = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for &b in chunk {
            v = (v << 1) | b as u8;
        }
        out.push((v + 63) as char);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------
