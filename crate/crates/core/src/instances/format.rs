//! Text formats. Vertex ids are 1-based in files and 0-based in memory.
//!
//! * graphs: DIMACS edge format (`c` comments, `p edge n m`, `e u v`);
//! * hypergraphs: `p hs n m d`, then `h v1 ... vj` lines;
//! * points: one `x y` pair per line, `#` starts a comment;
//! * tournaments: `p tour n`, then `a u v` lines.

use std::fmt::Write as _;

use super::{Graph, Hypergraph, Point, PointSet, ProblemInstance, ProblemKind, Tournament};
use crate::{Error, Result, Vertex};

/// Non-empty, non-comment lines with their 1-based line numbers.
fn content_lines<'a>(
    text: &'a str,
    comment: &'a str,
) -> impl Iterator<Item = (usize, Vec<&'a str>)> + 'a {
    text.lines().enumerate().filter_map(move |(i, raw)| {
        let line = raw.trim();
        if line.is_empty() || line.starts_with(comment) {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

fn number<T: std::str::FromStr>(line: usize, token: Option<&&str>, what: &str) -> Result<T> {
    let token = token.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("cannot parse {what} `{token}`")))
}

fn vertex(line: usize, token: Option<&&str>, n: usize) -> Result<Vertex> {
    let v: usize = number(line, token, "vertex")?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

fn expect_len(line: usize, tokens: &[&str], len: usize) -> Result<()> {
    if tokens.len() != len {
        return Err(Error::parse(
            line,
            format!("expected {len} fields, found {}", tokens.len()),
        ));
    }
    Ok(())
}

fn rewrap(line: usize, err: Error) -> Error {
    match err {
        Error::InvalidInstance(message) => Error::parse(line, message),
        other => other,
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut last_line = 0;
    for (line, tokens) in content_lines(text, "c") {
        last_line = line;
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return Err(Error::parse(line, "duplicate problem line"));
                }
                expect_len(line, &tokens, 4)?;
                if tokens[1] != "edge" {
                    return Err(Error::parse(line, format!("expected `p edge`, found `p {}`", tokens[1])));
                }
                let n = number(line, tokens.get(2), "vertex count")?;
                let m = number(line, tokens.get(3), "edge count")?;
                header = Some((line, n, m));
            }
            "e" => {
                let (_, n, _) = header.ok_or_else(|| Error::parse(line, "edge before `p edge` header"))?;
                expect_len(line, &tokens, 3)?;
                let u = vertex(line, tokens.get(1), n)?;
                let v = vertex(line, tokens.get(2), n)?;
                if u == v {
                    return Err(Error::parse(line, format!("self-loop on vertex {}", u + 1)));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(Error::parse(line, format!("duplicate edge {{{}, {}}}", u + 1, v + 1)));
                }
                edges.push((u, v));
            }
            other => return Err(Error::parse(line, format!("unexpected line type `{other}`"))),
        }
    }
    let (header_line, n, m) = header.ok_or_else(|| Error::parse(last_line.max(1), "missing `p edge` header"))?;
    if edges.len() != m {
        return Err(Error::parse(
            header_line,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges).map_err(|e| rewrap(header_line, e))
}

pub fn write_graph(graph: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", graph.n(), graph.edge_count());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut header: Option<(usize, usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (line, tokens) in content_lines(text, "c") {
        last_line = line;
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return Err(Error::parse(line, "duplicate problem line"));
                }
                expect_len(line, &tokens, 5)?;
                if tokens[1] != "hs" {
                    return Err(Error::parse(line, format!("expected `p hs`, found `p {}`", tokens[1])));
                }
                let n = number(line, tokens.get(2), "vertex count")?;
                let m = number(line, tokens.get(3), "hyperedge count")?;
                let d = number(line, tokens.get(4), "arity bound")?;
                header = Some((line, n, m, d));
            }
            "h" => {
                let (_, n, _, d) =
                    header.ok_or_else(|| Error::parse(line, "hyperedge before `p hs` header"))?;
                if tokens.len() < 2 {
                    return Err(Error::parse(line, "empty hyperedge"));
                }
                if tokens.len() - 1 > d {
                    return Err(Error::parse(line, format!("hyperedge exceeds arity bound {d}")));
                }
                let edge = tokens[1..]
                    .iter()
                    .map(|t| vertex(line, Some(t), n))
                    .collect::<Result<Vec<_>>>()?;
                Hypergraph::new(n, d, vec![edge.clone()]).map_err(|e| rewrap(line, e))?;
                edges.push(edge);
            }
            other => return Err(Error::parse(line, format!("unexpected line type `{other}`"))),
        }
    }
    let (header_line, n, m, d) =
        header.ok_or_else(|| Error::parse(last_line.max(1), "missing `p hs` header"))?;
    if edges.len() != m {
        return Err(Error::parse(
            header_line,
            format!("header announces {m} hyperedges, found {}", edges.len()),
        ));
    }
    Hypergraph::new(n, d, edges).map_err(|e| rewrap(header_line, e))
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("p hs {} {} {}\n", h.n(), h.edges().len(), h.d());
    for edge in h.edges() {
        out.push('h');
        for v in edge {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    out
}

pub fn parse_points(text: &str) -> Result<PointSet> {
    let mut points = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        expect_len(line, &tokens, 2)?;
        let p = Point::new(
            number(line, tokens.first(), "x coordinate")?,
            number(line, tokens.get(1), "y coordinate")?,
        );
        if !seen.insert(p) {
            return Err(Error::parse(line, format!("duplicate point ({}, {})", p.x, p.y)));
        }
        points.push(p);
    }
    PointSet::new(points)
}

pub fn write_points(points: &PointSet) -> String {
    let mut out = String::new();
    for p in points.points() {
        let _ = writeln!(out, "{} {}", p.x, p.y);
    }
    out
}

pub fn parse_tournament(text: &str) -> Result<Tournament> {
    let mut header: Option<(usize, usize)> = None;
    let mut arcs: Vec<(Vertex, Vertex)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut last_line = 0;
    for (line, tokens) in content_lines(text, "c") {
        last_line = line;
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return Err(Error::parse(line, "duplicate problem line"));
                }
                expect_len(line, &tokens, 3)?;
                if tokens[1] != "tour" {
                    return Err(Error::parse(line, format!("expected `p tour`, found `p {}`", tokens[1])));
                }
                header = Some((line, number(line, tokens.get(2), "vertex count")?));
            }
            "a" => {
                let (_, n) = header.ok_or_else(|| Error::parse(line, "arc before `p tour` header"))?;
                expect_len(line, &tokens, 3)?;
                let u = vertex(line, tokens.get(1), n)?;
                let v = vertex(line, tokens.get(2), n)?;
                if u == v {
                    return Err(Error::parse(line, format!("self-loop on vertex {}", u + 1)));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(Error::parse(line, format!("pair {{{}, {}}} already has an arc", u + 1, v + 1)));
                }
                arcs.push((u, v));
            }
            other => return Err(Error::parse(line, format!("unexpected line type `{other}`"))),
        }
    }
    let (header_line, n) = header.ok_or_else(|| Error::parse(last_line.max(1), "missing `p tour` header"))?;
    Tournament::new(n, arcs).map_err(|e| rewrap(header_line, e))
}

pub fn write_tournament(t: &Tournament) -> String {
    let mut out = format!("p tour {}\n", t.n());
    for (u, v) in t.arcs() {
        let _ = writeln!(out, "a {} {}", u + 1, v + 1);
    }
    out
}

/// Parses an input instance of the given kind.
pub fn parse_instance(kind: ProblemKind, text: &str) -> Result<ProblemInstance> {
    Ok(match kind {
        ProblemKind::Vc => ProblemInstance::vertex_cover(parse_graph(text)?),
        ProblemKind::Hs => ProblemInstance::hitting_set(parse_hypergraph(text)?),
        ProblemKind::Plc => ProblemInstance::point_line_cover(parse_points(text)?)?,
        ProblemKind::Fast => ProblemInstance::feedback_arc_set(parse_tournament(text)?),
    })
}

/// Writes the underlying structure of an instance. Element labels, candidate
/// line lists and fixed-arc markers are not part of the file formats.
pub fn write_instance(instance: &ProblemInstance) -> String {
    match instance {
        ProblemInstance::VertexCover { graph, .. } => write_graph(graph),
        ProblemInstance::HittingSet { hypergraph, .. } => write_hypergraph(hypergraph),
        ProblemInstance::PointLineCover { points, .. } => write_points(points),
        ProblemInstance::FeedbackArcSet(arcs) => write_tournament(arcs.tournament()),
    }
}
