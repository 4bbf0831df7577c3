//! File formats: the text decoration format, the text dart format for plane
//! graphs, and binary planar code.
//!
//! Writers renumber darts canonically first, so isomorphic inputs produce
//! identical bytes.

use std::collections::HashMap;

use thiserror::Error;

use crate::decoration::{Decoration, DecorationError};
use crate::planar_map::{Dart, MapError, PlaneGraph};

pub const DECO_HEADER: &str = "lopsp-deco 1";
pub const GRAPH_HEADER: &str = "lopsp-graph 1";
pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("planar code: {0}")]
    PlanarCode(String),
    #[error("planar code cannot store a loop at vertex {0}")]
    Loop(usize),
    #[error("planar code cannot store parallel edges between {0} and {1}")]
    MultiEdge(usize, usize),
    #[error("planar code holds at most 255 vertices, got {0}")]
    TooLarge(usize),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Decoration(#[from] DecorationError),
}

impl IoError {
    /// Whether the input was readable but describes an invalid object.
    pub fn is_invalid(&self) -> bool {
        matches!(self, IoError::Map(_) | IoError::Decoration(_))
    }
}

fn syntax(line: usize, message: impl Into<String>) -> IoError {
    IoError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-empty lines that are not comments, with 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, words)| !words.is_empty() && !words[0].starts_with('#'))
}

fn number(line: usize, word: &str) -> Result<usize, IoError> {
    word.parse()
        .map_err(|_| syntax(line, format!("expected a number, found {word:?}")))
}

struct Rows {
    sigma: Vec<Dart>,
    theta: Vec<Dart>,
    extra: Vec<usize>,
}

/// Reads `darts m` and `m` rows `id sigma theta [extra]`.
fn read_rows<'a>(
    it: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    with_extra: bool,
    last_line: usize,
) -> Result<Rows, IoError> {
    let (line, words) = it
        .next()
        .ok_or_else(|| syntax(last_line, "missing \"darts m\""))?;
    if words.len() != 2 || words[0] != "darts" {
        return Err(syntax(line, "expected \"darts m\""));
    }
    let m = number(line, words[1])?;
    let width = if with_extra { 4 } else { 3 };
    let mut sigma = vec![usize::MAX; m];
    let mut theta = vec![usize::MAX; m];
    let mut extra = vec![0; m];
    for _ in 0..m {
        let (line, words) = it
            .next()
            .ok_or_else(|| syntax(last_line, format!("expected {m} dart rows")))?;
        if words.len() != width {
            return Err(syntax(line, format!("expected {width} fields")));
        }
        let id = number(line, words[0])?;
        if id >= m {
            return Err(syntax(line, format!("dart {id} out of range")));
        }
        if sigma[id] != usize::MAX {
            return Err(syntax(line, format!("dart {id} listed twice")));
        }
        sigma[id] = number(line, words[1])?;
        theta[id] = number(line, words[2])?;
        if with_extra {
            extra[id] = number(line, words[3])?;
        }
    }
    Ok(Rows {
        sigma,
        theta,
        extra,
    })
}

fn last_line(text: &str) -> usize {
    text.lines().count().max(1)
}

/// Parses and validates a decoration file.
pub fn read_decoration(text: &str) -> Result<Decoration, IoError> {
    let end = last_line(text);
    let mut it = lines(text);
    match it.next() {
        Some((_, words)) if words.join(" ") == DECO_HEADER => {}
        Some((line, _)) => return Err(syntax(line, format!("expected {DECO_HEADER:?}"))),
        None => return Err(syntax(1, "empty file")),
    }
    let rows = read_rows(&mut it, true, end)?;
    let (line, words) = it
        .next()
        .ok_or_else(|| syntax(end, "missing \"marks d0 d1 d2\""))?;
    if words.len() != 4 || words[0] != "marks" {
        return Err(syntax(line, "expected \"marks d0 d1 d2\""));
    }
    let mut marks = [0; 3];
    for (k, w) in words[1..].iter().enumerate() {
        marks[k] = number(line, w)?;
        if marks[k] >= rows.sigma.len() {
            return Err(syntax(line, format!("mark dart {} out of range", marks[k])));
        }
    }
    if let Some((line, _)) = it.next() {
        return Err(syntax(line, "trailing content"));
    }
    let mut dart_type = Vec::with_capacity(rows.extra.len());
    for (d, &t) in rows.extra.iter().enumerate() {
        dart_type.push(u8::try_from(t).map_err(|_| DecorationError::TypeOutOfRange(d))?);
    }
    let graph = PlaneGraph::from_permutations(rows.sigma, rows.theta)?;
    let marks = marks.map(|d| graph.vertex_of(d));
    Ok(Decoration::new(graph, dart_type, marks)?)
}

pub fn write_decoration(d: &Decoration) -> String {
    let d = d.canonical_relabel();
    let g = d.graph();
    let mut out = format!("{DECO_HEADER}\ndarts {}\n", g.dart_count());
    for x in 0..g.dart_count() {
        out += &format!("{x} {} {} {}\n", g.sigma(x), g.theta(x), d.dart_type(x));
    }
    let [v0, v1, v2] = d.marks().map(|v| g.vertex_dart(v));
    out += &format!("marks {v0} {v1} {v2}\n");
    out
}

/// Parses one or more graphs in the dart format.
pub fn read_graphs(text: &str) -> Result<Vec<PlaneGraph>, IoError> {
    let end = last_line(text);
    let mut it = lines(text).peekable();
    let mut out = Vec::new();
    while let Some((line, words)) = it.next() {
        if words.join(" ") != GRAPH_HEADER {
            return Err(syntax(line, format!("expected {GRAPH_HEADER:?}")));
        }
        let rows = read_rows(&mut it, false, end)?;
        out.push(PlaneGraph::from_permutations(rows.sigma, rows.theta)?);
    }
    Ok(out)
}

pub fn write_graph(g: &PlaneGraph) -> String {
    let g = g.canonical_relabel();
    let mut out = format!("{GRAPH_HEADER}\ndarts {}\n", g.dart_count());
    for x in 0..g.dart_count() {
        out += &format!("{x} {} {}\n", g.sigma(x), g.theta(x));
    }
    out
}

/// Whether `g` has no loops and no parallel edges.
pub fn is_simple(g: &PlaneGraph) -> bool {
    simple_check(g).is_ok()
}

fn simple_check(g: &PlaneGraph) -> Result<(), IoError> {
    let mut seen = HashMap::new();
    for x in 0..g.dart_count() {
        let (u, w) = (g.vertex_of(x), g.target(x));
        if u == w {
            return Err(IoError::Loop(u));
        }
        if let Some(&y) = seen.get(&(u, w)) {
            if y != x {
                return Err(IoError::MultiEdge(u.min(w), u.max(w)));
            }
        }
        seen.insert((u, w), x);
    }
    Ok(())
}

/// One graph in planar code, without the file header.
pub fn encode_planar_code(g: &PlaneGraph) -> Result<Vec<u8>, IoError> {
    simple_check(g)?;
    let n = g.vertex_count();
    if n > 255 {
        return Err(IoError::TooLarge(n));
    }
    let g = g.canonical_relabel();
    let mut out = vec![n as u8];
    for v in 0..n {
        out.extend(g.rotation(v).iter().map(|&x| g.target(x) as u8 + 1));
        out.push(0);
    }
    Ok(out)
}

/// A planar code file with header.
pub fn write_planar_code(graphs: &[PlaneGraph]) -> Result<Vec<u8>, IoError> {
    let mut out = PLANAR_CODE_HEADER.to_vec();
    for g in graphs {
        out.extend(encode_planar_code(g)?);
    }
    Ok(out)
}

/// Reads every graph of a planar code stream; the header is optional.
pub fn read_planar_code(bytes: &[u8]) -> Result<Vec<PlaneGraph>, IoError> {
    let mut pos = if bytes.starts_with(PLANAR_CODE_HEADER) {
        PLANAR_CODE_HEADER.len()
    } else {
        0
    };
    let mut out = Vec::new();
    while pos < bytes.len() {
        let n = bytes[pos] as usize;
        pos += 1;
        if n == 0 {
            return Err(IoError::PlanarCode(format!(
                "graph {} has no vertices",
                out.len()
            )));
        }
        let mut neighbours = Vec::with_capacity(n);
        for v in 0..n {
            let mut list = Vec::new();
            loop {
                let &b = bytes.get(pos).ok_or_else(|| {
                    IoError::PlanarCode(format!("graph {} is truncated", out.len()))
                })?;
                pos += 1;
                if b == 0 {
                    break;
                }
                let w = b as usize - 1;
                if w >= n {
                    return Err(IoError::PlanarCode(format!(
                        "vertex {v} has neighbour {b} out of range"
                    )));
                }
                if w == v {
                    return Err(IoError::Loop(v));
                }
                if list.contains(&w) {
                    return Err(IoError::MultiEdge(v.min(w), v.max(w)));
                }
                list.push(w);
            }
            neighbours.push(list);
        }
        let mut ids = HashMap::new();
        let lists: Vec<Vec<(usize, usize)>> = neighbours
            .iter()
            .enumerate()
            .map(|(v, list)| {
                list.iter()
                    .map(|&w| {
                        let next = ids.len();
                        (w, *ids.entry((v.min(w), v.max(w))).or_insert(next))
                    })
                    .collect()
            })
            .collect();
        out.push(PlaneGraph::from_rotation_lists(&lists)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decoration::{catalog, goldberg, CATALOG_NAMES};
    use crate::fixtures;

    #[test]
    fn decoration_round_trip() {
        for name in CATALOG_NAMES {
            let d = catalog::catalog(name).unwrap();
            let text = write_decoration(&d);
            let back = read_decoration(&text).unwrap();
            assert!(back.is_isomorphic(&d), "{name}");
            assert_eq!(write_decoration(&back), text);
        }
        let g = goldberg(2, 1).unwrap();
        assert_eq!(
            write_decoration(&read_decoration(&write_decoration(&g)).unwrap()),
            write_decoration(&g)
        );
    }

    #[test]
    fn isomorphic_decorations_write_equal_bytes() {
        assert_eq!(
            write_decoration(&goldberg(1, 0).unwrap()),
            write_decoration(&catalog::identity())
        );
    }

    #[test]
    fn decoration_errors() {
        let text = write_decoration(&catalog::identity());
        assert!(matches!(
            read_decoration(""),
            Err(IoError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            read_decoration(&text.replace("lopsp-deco 1", "lopsp-deco 2")),
            Err(IoError::Syntax { .. })
        ));
        let short: String = text.lines().take(4).map(|l| format!("{l}\n")).collect();
        assert!(matches!(
            read_decoration(&short),
            Err(IoError::Syntax { .. })
        ));
        // a type flipped on one dart only
        let mut rows: Vec<String> = text.lines().map(String::from).collect();
        let last = rows[2].rsplit_once(' ').unwrap().0.to_string();
        rows[2] = format!("{last} 7");
        let err = read_decoration(&(rows.join("\n") + "\n")).unwrap_err();
        assert!(err.is_invalid());
    }

    #[test]
    fn graph_round_trip() {
        let all: Vec<PlaneGraph> = fixtures::corpus().into_iter().map(|(_, g)| g).collect();
        let text: String = all.iter().map(write_graph).collect();
        let back = read_graphs(&text).unwrap();
        assert_eq!(back.len(), all.len());
        for (g, h) in all.iter().zip(&back) {
            assert!(g.is_isomorphic(h));
        }
        // multigraphs too
        let multi = fixtures::cycle4().dual();
        assert!(read_graphs(&write_graph(&multi)).unwrap()[0].is_isomorphic(&multi));
    }

    #[test]
    fn planar_code_round_trip() {
        let all: Vec<PlaneGraph> = fixtures::corpus().into_iter().map(|(_, g)| g).collect();
        let bytes = write_planar_code(&all).unwrap();
        let back = read_planar_code(&bytes).unwrap();
        for (g, h) in all.iter().zip(&back) {
            assert!(g.is_isomorphic(h));
        }
        // without header
        let one = encode_planar_code(&fixtures::cube()).unwrap();
        assert!(read_planar_code(&one).unwrap()[0].is_isomorphic(&fixtures::cube()));
    }

    #[test]
    fn planar_code_known_bytes() {
        // K4 as plantri writes it
        let k4 = [4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0];
        let g = &read_planar_code(&k4).unwrap()[0];
        assert!(
            g.is_isomorphic(&fixtures::tetrahedron())
                || g.is_isomorphic(&fixtures::tetrahedron().mirror())
        );
        assert_eq!(g.counts().faces, 4);
    }

    #[test]
    fn planar_code_rejects_multigraphs() {
        assert!(matches!(
            encode_planar_code(&fixtures::cycle4().dual()),
            Err(IoError::MultiEdge(0, 1))
        ));
        assert!(matches!(
            read_planar_code(&[2, 2, 2, 0, 1, 1, 0]),
            Err(IoError::MultiEdge(0, 1))
        ));
        assert!(matches!(
            read_planar_code(&[2, 1, 0, 0]),
            Err(IoError::Loop(0))
        ));
        assert!(matches!(
            read_planar_code(&[3, 2, 0]),
            Err(IoError::PlanarCode(_))
        ));
    }
}
