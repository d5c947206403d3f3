//! Edge-list text format.
//!
//! ```text
//! M
//! u v          one directed arc u -> v per line, 1-based
//! ...
//! #undirected  optional: the arc set is symmetric and means undirected edges
//! #coords      optional: followed by M lines "x y"
//! ```
//!
//! Lines are LF-terminated and fields are separated by a single space.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::Graph;
use crate::{Error, Result};

const UNDIRECTED_MARKER: &str = "#undirected";
const COORDS_MARKER: &str = "#coords";

/// Render `g` in edge-list format.
pub fn write_edgelist(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", g.vertex_count());
    for (u, v) in g.arcs() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    if !g.is_directed() {
        out.push_str(UNDIRECTED_MARKER);
        out.push('\n');
    }
    if let Some(coords) = g.coords() {
        out.push_str(COORDS_MARKER);
        out.push('\n');
        for [x, y] in coords {
            let _ = writeln!(out, "{x} {y}");
        }
    }
    out
}

pub fn save_edgelist(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, write_edgelist(g))?;
    Ok(())
}

pub fn load_edgelist(path: impl AsRef<Path>) -> Result<Graph> {
    parse_edgelist(&fs::read_to_string(path)?)
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

enum Section {
    Arcs,
    Coords,
}

pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (first_no, first) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let m: usize = first
        .trim()
        .parse()
        .map_err(|_| parse_err(first_no, format!("expected vertex count, found {first:?}")))?;
    if m == 0 {
        return Err(parse_err(first_no, "vertex count must be positive"));
    }

    let mut arcs = BTreeSet::new();
    let mut directed = true;
    let mut marker_line = first_no;
    let mut coords: Option<Vec<[f64; 2]>> = None;
    let mut section = Section::Arcs;

    for (no, raw) in lines {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        if line == UNDIRECTED_MARKER {
            if !matches!(section, Section::Arcs) || !directed {
                return Err(parse_err(no, "misplaced #undirected marker"));
            }
            directed = false;
            marker_line = no;
            continue;
        }
        if line == COORDS_MARKER {
            if coords.is_some() {
                return Err(parse_err(no, "repeated #coords block"));
            }
            coords = Some(Vec::with_capacity(m));
            section = Section::Coords;
            continue;
        }
        if line.starts_with('#') {
            return Err(parse_err(no, format!("unknown metadata line {line:?}")));
        }
        let mut fields = line.split_whitespace();
        let (a, b) = match (fields.next(), fields.next(), fields.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(parse_err(no, format!("expected two fields, found {line:?}"))),
        };
        match section {
            Section::Arcs => {
                if !directed {
                    return Err(parse_err(no, "arc after #undirected marker"));
                }
                let parse_id = |s: &str| -> Result<usize> {
                    let id: usize =
                        s.parse().map_err(|_| parse_err(no, format!("bad vertex id {s:?}")))?;
                    if id == 0 || id > m {
                        return Err(parse_err(no, format!("vertex id {id} out of range 1..={m}")));
                    }
                    Ok(id - 1)
                };
                let (u, v) = (parse_id(a)?, parse_id(b)?);
                if u == v {
                    return Err(parse_err(no, format!("self-loop at vertex {}", u + 1)));
                }
                if !arcs.insert((u, v)) {
                    return Err(parse_err(no, format!("duplicate edge {} {}", u + 1, v + 1)));
                }
            }
            Section::Coords => {
                let c = coords.as_mut().expect("coords section is open");
                if c.len() == m {
                    return Err(parse_err(no, format!("more than {m} coordinate lines")));
                }
                let parse_f = |s: &str| -> Result<f64> {
                    s.parse().map_err(|_| parse_err(no, format!("bad coordinate {s:?}")))
                };
                c.push([parse_f(a)?, parse_f(b)?]);
            }
        }
    }

    let g = Graph::from_parts(m, arcs, directed).map_err(|e| parse_err(marker_line, e.to_string()))?;
    match coords {
        Some(c) if c.len() != m => {
            Err(parse_err(text.lines().count(), format!("expected {m} coordinate lines, found {}", c.len())))
        }
        Some(c) => g.with_coords(c),
        None => Ok(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{random_orientation, spatial, watts_strogatz, Seed};

    #[test]
    fn parses_format_example() {
        let g = parse_edgelist("3\n1 2\n2 3\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert!(g.is_directed());
        assert_eq!(g.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn errors_cite_line_numbers() {
        let cases = [
            ("3\n1 4\n", 2),
            ("3\n1 2\n1 2\n", 3),
            ("3\n1 2\n2 2\n", 3),
            ("3\n1 2 3\n", 2),
            ("3\n1 x\n", 2),
            ("x\n", 1),
            ("3\n1 2\n#coords\n0 0\n", 4),
        ];
        for (text, line) in cases {
            match parse_edgelist(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn undirected_marker_requires_symmetry() {
        assert!(parse_edgelist("2\n1 2\n#undirected\n").is_err());
        let g = parse_edgelist("2\n1 2\n2 1\n#undirected\n").unwrap();
        assert!(!g.is_directed());
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn round_trips_with_coordinates() {
        let g = spatial(20, 0.4, Seed(8)).unwrap();
        let back = parse_edgelist(&write_edgelist(&g)).unwrap();
        assert_eq!(back, g);
        let d = random_orientation(&watts_strogatz(12, 0.3, 2, Seed(1)).unwrap(), Seed(2)).unwrap();
        assert_eq!(parse_edgelist(&write_edgelist(&d)).unwrap(), d);
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.el");
        let g = crate::graphs::zachary();
        save_edgelist(&g, &path).unwrap();
        assert_eq!(load_edgelist(&path).unwrap(), g);
    }
}
