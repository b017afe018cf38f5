//! Text formats.
//!
//! Embedded graphs (`pmg`):
//!
//! ```text
//! pmg 1
//! v 3
//! E 0 1
//! E 1 2
//! E 2 0
//! R 0: 0 2
//! R 1: 0 1
//! R 2: 1 2
//! ```
//!
//! Edge lists: one `u v` pair per line, embedded on read. Colorings: `k
//! <palette>` then `c <edge> <color>` per colored edge. `#` starts a comment
//! everywhere.

use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::{Color, ColoringError, PartialColoring, MAX_PALETTE};
use crate::graph::{embed_edge_list, EdgeId, GraphError, PlaneMultigraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    SyntaxError { line: usize, message: String },
    #[error("line {line}: edge {edge} has color {color} outside 1..={palette}")]
    ColorOutOfRange {
        line: usize,
        edge: EdgeId,
        color: u64,
        palette: u8,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

fn syntax(line: usize, message: impl Into<String>) -> IoError {
    IoError::SyntaxError {
        line,
        message: message.into(),
    }
}

/// Nonblank lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap().trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn number<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T, IoError> {
    tok.parse()
        .map_err(|_| syntax(line, format!("expected a nonnegative integer, found {tok:?}")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Pmg,
    EdgeList,
}

/// Guesses the format from the first content line.
pub fn detect_format(text: &str) -> GraphFormat {
    match content_lines(text).next() {
        Some((_, l)) if l.split_whitespace().next() == Some("pmg") => GraphFormat::Pmg,
        _ => GraphFormat::EdgeList,
    }
}

pub fn parse_graph(text: &str) -> Result<PlaneMultigraph, IoError> {
    match detect_format(text) {
        GraphFormat::Pmg => parse_pmg(text),
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

pub fn parse_pmg(text: &str) -> Result<PlaneMultigraph, IoError> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, "pmg 1")) => {}
        Some((n, l)) => return Err(syntax(n, format!("expected header \"pmg 1\", found {l:?}"))),
        None => return Err(syntax(1, "empty input")),
    }
    let mut vertex_count: Option<usize> = None;
    let mut edges = Vec::new();
    let mut rotations: Vec<Option<Vec<EdgeId>>> = Vec::new();
    for (n, l) in lines {
        let mut toks = l.split_whitespace();
        let tag = toks.next().unwrap();
        match tag {
            "v" => {
                if vertex_count.is_some() {
                    return Err(syntax(n, "repeated vertex count"));
                }
                let [c] = take::<1>(n, &mut toks)?;
                let c: usize = number(n, c)?;
                vertex_count = Some(c);
                rotations = vec![None; c];
            }
            "E" => {
                if vertex_count.is_none() {
                    return Err(syntax(n, "edge before vertex count"));
                }
                let [a, b] = take::<2>(n, &mut toks)?;
                edges.push((number::<VertexId>(n, a)?, number::<VertexId>(n, b)?));
            }
            "R" => {
                let Some(nv) = vertex_count else {
                    return Err(syntax(n, "rotation before vertex count"));
                };
                let v = toks.next().ok_or_else(|| syntax(n, "missing vertex"))?;
                let v: VertexId = number(
                    n,
                    v.strip_suffix(':')
                        .ok_or_else(|| syntax(n, "expected \"R <v>:\""))?,
                )?;
                if v >= nv {
                    return Err(syntax(n, format!("vertex {v} out of range")));
                }
                if rotations[v].is_some() {
                    return Err(syntax(n, format!("repeated rotation for vertex {v}")));
                }
                rotations[v] = Some(toks.map(|t| number(n, t)).collect::<Result<_, _>>()?);
            }
            other => return Err(syntax(n, format!("unknown record {other:?}"))),
        }
    }
    let vertex_count = vertex_count.ok_or_else(|| syntax(1, "missing vertex count"))?;
    let rotations = rotations.into_iter().map(Option::unwrap_or_default).collect();
    Ok(PlaneMultigraph::new(vertex_count, edges, rotations)?)
}

fn take<'a, const N: usize>(
    line: usize,
    toks: &mut impl Iterator<Item = &'a str>,
) -> Result<[&'a str; N], IoError> {
    let got: Vec<&str> = toks.collect();
    got.try_into()
        .map_err(|g: Vec<&str>| syntax(line, format!("expected {N} fields, found {}", g.len())))
}

pub fn parse_edge_list(text: &str) -> Result<PlaneMultigraph, IoError> {
    let mut edges = Vec::new();
    for (n, l) in content_lines(text) {
        let mut toks = l.split_whitespace();
        let [a, b] = take::<2>(n, &mut toks)?;
        edges.push((number::<VertexId>(n, a)?, number::<VertexId>(n, b)?));
    }
    let vertex_count = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
    Ok(embed_edge_list(vertex_count, &edges)?)
}

pub fn serialize_pmg(g: &PlaneMultigraph) -> String {
    let mut out = format!("pmg 1\nv {}\n", g.vertex_count());
    for &(a, b) in g.edges() {
        writeln!(out, "E {a} {b}").unwrap();
    }
    for v in 0..g.vertex_count() {
        out.push_str(&format!("R {v}:"));
        for e in g.rotation(v) {
            write!(out, " {e}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Isolated vertices past the last edge endpoint are lost in this format.
pub fn serialize_edge_list(g: &PlaneMultigraph) -> String {
    g.edges().iter().map(|(a, b)| format!("{a} {b}\n")).collect()
}

pub fn serialize_coloring(c: &PartialColoring) -> String {
    let mut out = format!("k {}\n", c.palette());
    for (e, col) in c.colors().iter().enumerate() {
        if let Some(col) = col {
            writeln!(out, "c {e} {col}").unwrap();
        }
    }
    out
}

/// The coloring covers edges `0..=max listed id`; use
/// [`PartialColoring::resized`] to match a graph.
pub fn parse_coloring(text: &str) -> Result<PartialColoring, IoError> {
    let mut lines = content_lines(text);
    let palette: u8 = match lines.next() {
        Some((n, l)) => {
            let mut toks = l.split_whitespace();
            if toks.next() != Some("k") {
                return Err(syntax(n, format!("expected \"k <palette>\", found {l:?}")));
            }
            let [k] = take::<1>(n, &mut toks)?;
            let k: u64 = number(n, k)?;
            if k > u64::from(MAX_PALETTE) {
                return Err(syntax(n, format!("palette {k} exceeds {MAX_PALETTE}")));
            }
            k as u8
        }
        None => return Err(syntax(1, "empty input")),
    };
    let mut colors: Vec<Option<Color>> = Vec::new();
    for (n, l) in lines {
        let mut toks = l.split_whitespace();
        if toks.next() != Some("c") {
            return Err(syntax(n, format!("expected \"c <edge> <color>\", found {l:?}")));
        }
        let [e, c] = take::<2>(n, &mut toks)?;
        let e: EdgeId = number(n, e)?;
        let c: u64 = number(n, c)?;
        if c == 0 || c > u64::from(palette) {
            return Err(IoError::ColorOutOfRange {
                line: n,
                edge: e,
                color: c,
                palette,
            });
        }
        if colors.len() <= e {
            colors.resize(e + 1, None);
        }
        if colors[e].is_some() {
            return Err(syntax(n, format!("edge {e} colored twice")));
        }
        colors[e] = Some(c as Color);
    }
    Ok(PartialColoring::from_colors(palette, colors)?)
}
