use std::fmt::Write as _;

use super::RootedTreeDecomposition;
use crate::{Error, Result, Vertex};

/// Parses a PACE `.td` file. Bag `i` becomes node `i - 1`; a fresh empty root
/// is appended and attached to bag 1. Returns the decomposition and the
/// declared vertex count.
pub fn parse_td(text: &str) -> Result<(RootedTreeDecomposition, usize)> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<Vertex>>> = Vec::new();
    let mut edges = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let number = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(line, format!("expected a nonnegative integer, got {s:?}")))
        };
        match tokens[0] {
            "s" => {
                if header.is_some() {
                    return Err(Error::parse(line, "second solution line"));
                }
                if tokens.len() != 5 || tokens[1] != "td" {
                    return Err(Error::parse(line, "expected `s td N w+1 n`"));
                }
                let h = (number(tokens[2])?, number(tokens[3])?, number(tokens[4])?);
                bags = vec![None; h.0];
                header = Some(h);
            }
            "b" => {
                let (count, _, n) = header.ok_or_else(|| Error::parse(line, "bag before `s td` line"))?;
                if tokens.len() < 2 {
                    return Err(Error::parse(line, "bag line without an index"));
                }
                let id = number(tokens[1])?;
                if id == 0 || id > count {
                    return Err(Error::parse(line, format!("bag index {id} out of range")));
                }
                if bags[id - 1].is_some() {
                    return Err(Error::parse(line, format!("bag {id} declared twice")));
                }
                let mut bag = Vec::with_capacity(tokens.len() - 2);
                for token in &tokens[2..] {
                    let v = number(token)?;
                    if v == 0 || v > n {
                        return Err(Error::parse(line, format!("vertex {v} out of range")));
                    }
                    bag.push(v - 1);
                }
                bags[id - 1] = Some(bag);
            }
            _ => {
                let (count, _, _) = header.ok_or_else(|| Error::parse(line, "edge before `s td` line"))?;
                if tokens.len() != 2 {
                    return Err(Error::parse(line, "expected a tree edge `i j`"));
                }
                let (a, b) = (number(tokens[0])?, number(tokens[1])?);
                if a == 0 || b == 0 || a > count || b > count {
                    return Err(Error::parse(line, format!("tree edge ({a}, {b}) out of range")));
                }
                edges.push((a - 1, b - 1));
            }
        }
    }
    let (count, declared_size, n) = header.ok_or_else(|| Error::parse(0, "missing `s td` line"))?;
    let mut bags: Vec<Vec<Vertex>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, bag)| bag.ok_or_else(|| Error::parse(0, format!("bag {} missing", i + 1))))
        .collect::<Result<_>>()?;
    let largest = bags.iter().map(Vec::len).max().unwrap_or(0);
    if count > 0 && largest != declared_size {
        return Err(Error::parse(
            0,
            format!("declared bag size {declared_size} but largest bag has {largest}"),
        ));
    }
    let root = bags.len();
    bags.push(Vec::new());
    if count > 0 {
        edges.push((root, 0));
    }
    let td = RootedTreeDecomposition::from_tree_edges(bags, &edges, root)?;
    Ok((td, n))
}

/// Serializes every node (including the empty root) as a PACE `.td` file.
pub fn write_td(td: &RootedTreeDecomposition, n: usize) -> String {
    let mut out = String::new();
    let largest = (0..td.len()).map(|t| td.bag(t).len()).max().unwrap_or(0);
    let _ = writeln!(out, "s td {} {} {}", td.len(), largest, n);
    for t in 0..td.len() {
        let _ = write!(out, "b {}", t + 1);
        for v in td.bag(t) {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    for t in 0..td.len() {
        if let Some(p) = td.parent(t) {
            let _ = writeln!(out, "{} {}", p + 1, t + 1);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::validate;
    use crate::instances::Graph;

    const PATH_TD: &str = "c path on four vertices\ns td 3 2 4\nb 1 1 2\nb 2 2 3\nb 3 3 4\n1 2\n2 3\n";

    #[test]
    fn parses_and_reroots() {
        let (td, n) = parse_td(PATH_TD).unwrap();
        assert_eq!(n, 4);
        assert_eq!(td.len(), 4);
        assert_eq!(td.root(), 3);
        assert!(td.bag(3).is_empty());
        assert_eq!(td.parent(0), Some(3));
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(validate(&g, &td).is_empty());
    }

    #[test]
    fn written_files_parse_back() {
        let (td, n) = parse_td(PATH_TD).unwrap();
        let (again, m) = parse_td(&write_td(&td, n)).unwrap();
        assert_eq!(m, n);
        assert_eq!(again.width(), td.width());
        assert_eq!(again.len(), td.len() + 1);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(parse_td("b 1 1\n").is_err());
        assert!(parse_td("s td 2 1 2\nb 1 1\nb 2 3\n1 2\n").is_err());
        assert!(parse_td("s td 2 1 2\nb 1 1\nb 2 2\n").is_err());
        assert!(parse_td("s td 1 3 2\nb 1 1 2\n").is_err());
        assert!(parse_td("s td 2 1 2\nb 1 1\nb 1 2\n1 2\n").is_err());
    }

    #[test]
    fn empty_decomposition() {
        let (td, n) = parse_td("s td 0 0 0\n").unwrap();
        assert_eq!((td.len(), n), (1, 0));
    }
}
