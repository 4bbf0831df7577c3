//! Double chamber decorations: typed sphere triangulations with three marked
//! vertices `v0`, `v1`, `v2`, each describing one lopsp operation.

use std::fmt;

use thiserror::Error;

use crate::canon;
use crate::chamber::{check_triangulation, missing_types, ChamberError, ChamberSystem};
use crate::planar_map::{Dart, MapError, PlaneGraph};

pub mod catalog;
mod connectivity;
mod goldberg;
mod patch;
mod path;

pub use catalog::{catalog, CatalogError, CATALOG_NAMES};
pub use goldberg::goldberg;
pub use patch::{cut_open, Patch};
pub use path::{enumerate_cut_paths, find_cut_path, CutPath, PathError};

/// A clause of the characterization of decorations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Clause {
    /// The types of an edge and its two ends are 0, 1 and 2 in some order.
    EdgeCondition,
    /// Edge types alternate around every vertex.
    Alternation,
    /// An unmarked type-1 vertex has degree 4.
    UnmarkedType1Degree,
    /// An unmarked vertex of type 0 or 2 has degree more than 4.
    UnmarkedDegree,
    /// `v0` and `v2` do not have type 1.
    MarkedType,
    /// `v0` and `v2` have degree at least 2.
    MarkedDegree,
    /// `v1` has degree 2 if it has type 1 and at least 4 otherwise.
    V1Degree,
    /// The three marks are different vertices.
    DistinctMarks,
}

impl Clause {
    pub fn name(self) -> &'static str {
        match self {
            Clause::EdgeCondition => "edge-condition",
            Clause::Alternation => "alternation",
            Clause::UnmarkedType1Degree => "type1-degree",
            Clause::UnmarkedDegree => "degree",
            Clause::MarkedType => "marked-type",
            Clause::MarkedDegree => "marked-degree",
            Clause::V1Degree => "v1-degree",
            Clause::DistinctMarks => "distinct-marks",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Location {
    Vertex(usize),
    /// An edge, given by one of its darts.
    Edge(Dart),
    Marks,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub clause: Clause,
    pub location: Location,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.clause)?;
        match self.location {
            Location::Vertex(v) => write!(f, "vertex {v}")?,
            Location::Edge(d) => write!(f, "edge of dart {d}")?,
            Location::Marks => write!(f, "marks")?,
        }
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

fn join(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecorationError {
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("not a triangulation: face {face} has size {size}")]
    NotTriangulation { face: usize, size: usize },
    #[error("expected {expected} dart types, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("type of dart {0} is not 0, 1 or 2")]
    TypeOutOfRange(Dart),
    #[error("dart {0} and its reverse have different types")]
    AsymmetricType(Dart),
    #[error("marked vertex {0} does not exist")]
    MarkOutOfRange(usize),
    #[error("{}", join(.0))]
    Invalid(Vec<Violation>),
}

impl DecorationError {
    pub fn violations(&self) -> &[Violation] {
        match self {
            DecorationError::Invalid(v) => v,
            _ => &[],
        }
    }
}

/// A validated double chamber decoration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoration {
    graph: PlaneGraph,
    dart_type: Vec<u8>,
    vertex_type: Vec<u8>,
    marks: [usize; 3],
}

/// Checks every clause of the characterization and reports all failures.
///
/// Structural problems (wrong lengths, types out of range, faces that are
/// not triangles) are reported on their own before any clause is looked at.
pub fn validate_decoration(
    graph: &PlaneGraph,
    dart_type: &[u8],
    marks: [usize; 3],
) -> Result<Vec<u8>, DecorationError> {
    let m = graph.dart_count();
    if dart_type.len() != m {
        return Err(DecorationError::LengthMismatch {
            expected: m,
            found: dart_type.len(),
        });
    }
    check_triangulation(graph).map_err(|e| match e {
        ChamberError::NotTriangulation { face, size } => {
            DecorationError::NotTriangulation { face, size }
        }
        other => unreachable!("{other}"),
    })?;
    for d in 0..m {
        if dart_type[d] > 2 {
            return Err(DecorationError::TypeOutOfRange(d));
        }
        if dart_type[d] != dart_type[graph.theta(d)] {
            return Err(DecorationError::AsymmetricType(d));
        }
    }
    if let Some(&v) = marks.iter().find(|&&v| v >= graph.vertex_count()) {
        return Err(DecorationError::MarkOutOfRange(v));
    }

    let mut out = Vec::new();
    let mut push = |clause, location, detail: String| {
        out.push(Violation {
            clause,
            location,
            detail,
        })
    };
    let derived = missing_types(graph, dart_type);
    for (v, t) in derived.iter().enumerate() {
        if t.is_none() {
            let present: Vec<u8> = (0..3)
                .filter(|&t| graph.rotation(v).iter().any(|&d| dart_type[d] == t))
                .collect();
            if present.len() == 3 {
                push(
                    Clause::EdgeCondition,
                    Location::Vertex(v),
                    "edges of all three types".into(),
                );
            } else {
                push(
                    Clause::Alternation,
                    Location::Vertex(v),
                    format!("all edges have type {}", present[0]),
                );
            }
        }
    }
    for d in 0..m {
        if d > graph.theta(d) {
            continue;
        }
        let (v, w) = (graph.vertex_of(d), graph.target(d));
        if let (Some(a), Some(b)) = (derived[v], derived[w]) {
            let t = dart_type[d];
            if a == b || t == a || t == b {
                push(
                    Clause::EdgeCondition,
                    Location::Edge(d),
                    format!("{v}-{w} types {a},{t},{b}"),
                );
            }
        }
    }
    for v in 0..graph.vertex_count() {
        if derived[v].is_some()
            && graph
                .rotation(v)
                .iter()
                .any(|&d| dart_type[d] == dart_type[graph.sigma(d)])
        {
            push(Clause::Alternation, Location::Vertex(v), String::new());
        }
    }
    let [v0, v1, v2] = marks;
    if v0 == v1 || v1 == v2 || v0 == v2 {
        push(
            Clause::DistinctMarks,
            Location::Marks,
            format!("{v0}, {v1}, {v2}"),
        );
    }
    for v in 0..graph.vertex_count() {
        if marks.contains(&v) {
            continue;
        }
        let (deg, t) = (graph.degree(v), derived[v]);
        match t {
            Some(1) if deg != 4 => push(
                Clause::UnmarkedType1Degree,
                Location::Vertex(v),
                format!("degree {deg}"),
            ),
            Some(0 | 2) if deg <= 4 => push(
                Clause::UnmarkedDegree,
                Location::Vertex(v),
                format!("degree {deg}"),
            ),
            _ => {}
        }
    }
    for v in [v0, v2] {
        if derived[v] == Some(1) {
            push(Clause::MarkedType, Location::Vertex(v), "type 1".into());
        }
        if graph.degree(v) < 2 {
            push(
                Clause::MarkedDegree,
                Location::Vertex(v),
                format!("degree {}", graph.degree(v)),
            );
        }
    }
    let deg1 = graph.degree(v1);
    match derived[v1] {
        Some(1) if deg1 != 2 => push(
            Clause::V1Degree,
            Location::Vertex(v1),
            format!("type 1, degree {deg1}"),
        ),
        Some(0 | 2) if deg1 < 4 => push(
            Clause::V1Degree,
            Location::Vertex(v1),
            format!("degree {deg1}"),
        ),
        _ => {}
    }
    if out.is_empty() {
        Ok(derived
            .into_iter()
            .map(|t| t.expect("types derived"))
            .collect())
    } else {
        Err(DecorationError::Invalid(out))
    }
}

impl Decoration {
    /// Validates and wraps a candidate; `marks` are the vertices `v0, v1, v2`.
    pub fn new(
        graph: PlaneGraph,
        dart_type: Vec<u8>,
        marks: [usize; 3],
    ) -> Result<Self, DecorationError> {
        let vertex_type = validate_decoration(&graph, &dart_type, marks)?;
        Ok(Decoration {
            graph,
            dart_type,
            vertex_type,
            marks,
        })
    }

    /// Builds a decoration from clockwise `(neighbour, edge id)` lists and a
    /// type for each edge id.
    pub fn from_rotation_lists<L: AsRef<[(usize, usize)]>>(
        lists: &[L],
        edge_types: &[u8],
        marks: [usize; 3],
    ) -> Result<Self, DecorationError> {
        let graph = PlaneGraph::from_rotation_lists(lists)?;
        let mut dart_type = Vec::with_capacity(graph.dart_count());
        for &(_, id) in lists.iter().flat_map(|l| l.as_ref()) {
            dart_type.push(*edge_types.get(id).ok_or(DecorationError::LengthMismatch {
                expected: id + 1,
                found: edge_types.len(),
            })?);
        }
        // darts are numbered list by list, so vertex `i` is list `i`
        Self::new(graph, dart_type, marks)
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn dart_type(&self, d: Dart) -> u8 {
        self.dart_type[d]
    }

    pub fn dart_types(&self) -> &[u8] {
        &self.dart_type
    }

    pub fn vertex_type(&self, v: usize) -> u8 {
        self.vertex_type[v]
    }

    pub fn vertex_types(&self) -> &[u8] {
        &self.vertex_type
    }

    /// `[v0, v1, v2]`.
    pub fn marks(&self) -> [usize; 3] {
        self.marks
    }

    pub fn v0(&self) -> usize {
        self.marks[0]
    }

    pub fn v1(&self) -> usize {
        self.marks[1]
    }

    pub fn v2(&self) -> usize {
        self.marks[2]
    }

    pub fn face_count(&self) -> usize {
        self.graph.face_count()
    }

    /// Edges of the result per edge of the input graph: half the number of
    /// faces.
    pub fn inflation_factor(&self) -> usize {
        self.graph.face_count() / 2
    }

    pub fn chamber_system(&self) -> ChamberSystem {
        ChamberSystem::new(
            self.graph.clone(),
            self.dart_type.clone(),
            self.vertex_type.clone(),
        )
        .expect("a decoration is a chamber system")
    }

    /// Same darts and types with every rotation reversed.
    pub fn mirror(&self) -> Decoration {
        let graph = self.graph.mirror();
        let marks = self
            .marks
            .map(|v| graph.vertex_of(self.graph.vertex_dart(v)));
        Decoration::new(graph, self.dart_type.clone(), marks).expect("mirror of a decoration")
    }

    /// Per-dart labels combining the type and the mark of the source vertex.
    pub(crate) fn labels(&self) -> Vec<u32> {
        (0..self.graph.dart_count())
            .map(|d| {
                let v = self.graph.vertex_of(d);
                let mark = self.marks.iter().position(|&x| x == v).unwrap_or(3) as u32;
                self.dart_type[d] as u32 * 4 + mark
            })
            .collect()
    }

    /// Canonical form respecting types and marks.
    pub fn canonical_form(&self) -> Vec<u8> {
        canon::canonical_form(&self.graph, Some(&self.labels()))
    }

    pub fn is_isomorphic(&self, other: &Decoration) -> bool {
        self.graph.dart_count() == other.graph.dart_count()
            && self.canonical_form() == other.canonical_form()
    }

    /// Not isomorphic to its mirror image with marks kept.
    pub fn is_chiral(&self) -> bool {
        !self.is_isomorphic(&self.mirror())
    }

    /// Renumbers darts; `perm[old] = new`.
    pub fn relabel(&self, perm: &[Dart]) -> Decoration {
        let graph = self.graph.relabel(perm);
        let mut dart_type = vec![0; perm.len()];
        for (old, &new) in perm.iter().enumerate() {
            dart_type[new] = self.dart_type[old];
        }
        let marks = self
            .marks
            .map(|v| graph.vertex_of(perm[self.graph.vertex_dart(v)]));
        Decoration::new(graph, dart_type, marks).expect("relabeling preserves validity")
    }

    /// Equal for isomorphic decorations.
    pub fn canonical_relabel(&self) -> Decoration {
        self.relabel(&canon::canonical_permutation(
            &self.graph,
            Some(&self.labels()),
        ))
    }

    /// Vertex connectivity guaranteed for the results of this operation.
    pub fn connectivity(&self) -> u8 {
        connectivity::decoration_connectivity(self)
    }
}

pub use connectivity::decoration_connectivity;

/// Half the number of faces.
pub fn inflation_factor(d: &Decoration) -> usize {
    d.inflation_factor()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_dual_validate() {
        let id = catalog("identity").unwrap();
        assert_eq!(
            (
                id.graph().vertex_count(),
                id.graph().edge_count(),
                id.face_count()
            ),
            (3, 3, 2)
        );
        assert_eq!(id.vertex_types(), &[0, 1, 2]);
        assert_eq!(id.inflation_factor(), 1);
        let dual = catalog("dual").unwrap();
        assert_eq!(
            [dual.vertex_type(dual.v0()), dual.vertex_type(dual.v2())],
            [2, 0]
        );
    }

    #[test]
    fn type1_vertex_of_degree_6() {
        // The chamber system of a triangle with types 1 and 2 swapped: the two
        // face centres become type-1 vertices of degree 6.
        let c = crate::chamber::barycentric(&crate::fixtures::triangle());
        let swap = |t: &u8| [0, 2, 1][*t as usize];
        let dart_type: Vec<u8> = c.dart_types().iter().map(swap).collect();
        let g = c.graph().clone();
        // v0, v2 original vertices; v1 the third, of type 0 and degree 4
        let err = Decoration::new(g.clone(), dart_type, [0, 1, 2]).unwrap_err();
        let found: Vec<_> = err
            .violations()
            .iter()
            .filter(|v| v.clause == Clause::UnmarkedType1Degree)
            .collect();
        assert_eq!(found.len(), 2);
        assert!(found
            .iter()
            .all(|v| matches!(v.location, Location::Vertex(x) if g.degree(x) == 6)));
    }

    #[test]
    fn structural_errors_come_first() {
        let g = crate::fixtures::cube();
        let err = Decoration::new(g.clone(), vec![0; 24], [0, 1, 2]).unwrap_err();
        assert!(matches!(
            err,
            DecorationError::NotTriangulation { size: 4, .. }
        ));
        let t = crate::fixtures::tetrahedron();
        assert!(matches!(
            Decoration::new(t.clone(), vec![0; 5], [0, 1, 2]),
            Err(DecorationError::LengthMismatch { .. })
        ));
        assert!(matches!(
            Decoration::new(t, vec![0; 12], [0, 1, 9]),
            Err(DecorationError::MarkOutOfRange(9))
        ));
    }

    #[test]
    fn violation_display() {
        let v = Violation {
            clause: Clause::EdgeCondition,
            location: Location::Edge(4),
            detail: String::new(),
        };
        assert_eq!(v.to_string(), "edge-condition: edge of dart 4");
    }

    #[test]
    fn mirror_round_trip() {
        for name in CATALOG_NAMES {
            let d = catalog(name).unwrap();
            assert_eq!(d.mirror().mirror(), d);
            assert!(d.canonical_relabel().is_isomorphic(&d));
        }
    }
}
