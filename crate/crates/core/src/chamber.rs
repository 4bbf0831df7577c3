//! Chamber systems: typed triangulations whose vertex types 0, 1, 2 stand
//! for vertices, edge midpoints and face centres of some plane graph.

use std::collections::{BTreeSet, HashMap, VecDeque};

use thiserror::Error;

use crate::planar_map::{Dart, MapError, PlaneGraph, RotationSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChamberError {
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("expected {expected} types, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("type of dart {0} is not 0, 1 or 2")]
    TypeOutOfRange(Dart),
    #[error("dart {0} and its reverse have different types")]
    AsymmetricType(Dart),
    #[error("not a triangulation: face {face} has size {size}")]
    NotTriangulation { face: usize, size: usize },
    #[error("edge condition fails on dart {0}")]
    EdgeCondition(Dart),
    #[error("edge types do not alternate around vertex {0}")]
    Alternation(usize),
    #[error("cannot derive a type for vertex {0}")]
    AmbiguousVertexType(usize),
    #[error("not a chamber system of a plane graph: type-1 vertex {vertex} has degree {degree}")]
    Type1Degree { vertex: usize, degree: usize },
}

/// Checks the triangle condition on every face.
pub(crate) fn check_triangulation(map: &RotationSystem) -> Result<(), ChamberError> {
    for f in 0..map.face_count() {
        let size = map.face_darts(f).len();
        if size != 3 {
            return Err(ChamberError::NotTriangulation { face: f, size });
        }
    }
    Ok(())
}

/// Type of each vertex as the one type missing among its incident edges, or
/// `None` when that is not unique.
pub(crate) fn missing_types(map: &RotationSystem, dart_type: &[u8]) -> Vec<Option<u8>> {
    (0..map.vertex_count())
        .map(|v| {
            let mut present = [false; 3];
            for d in map.rotation(v) {
                present[dart_type[d] as usize] = true;
            }
            let absent: Vec<u8> = (0..3).filter(|&t| !present[t as usize]).collect();
            (absent.len() == 1).then(|| absent[0])
        })
        .collect()
}

/// A typed triangulation of the sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberSystem {
    graph: PlaneGraph,
    dart_type: Vec<u8>,
    vertex_type: Vec<u8>,
}

impl ChamberSystem {
    pub fn new(
        graph: PlaneGraph,
        dart_type: Vec<u8>,
        vertex_type: Vec<u8>,
    ) -> Result<Self, ChamberError> {
        if dart_type.len() != graph.dart_count() {
            return Err(ChamberError::LengthMismatch {
                expected: graph.dart_count(),
                found: dart_type.len(),
            });
        }
        if vertex_type.len() != graph.vertex_count() {
            return Err(ChamberError::LengthMismatch {
                expected: graph.vertex_count(),
                found: vertex_type.len(),
            });
        }
        check_triangulation(&graph)?;
        for d in 0..graph.dart_count() {
            if dart_type[d] > 2 {
                return Err(ChamberError::TypeOutOfRange(d));
            }
            if dart_type[d] != dart_type[graph.theta(d)] {
                return Err(ChamberError::AsymmetricType(d));
            }
        }
        for d in 0..graph.dart_count() {
            let (a, b) = (
                vertex_type[graph.vertex_of(d)],
                vertex_type[graph.target(d)],
            );
            if a > 2 || b > 2 || a == b || dart_type[d] == a || dart_type[d] == b {
                return Err(ChamberError::EdgeCondition(d));
            }
        }
        for v in 0..graph.vertex_count() {
            let rot = graph.rotation(v);
            if rot
                .iter()
                .any(|&d| dart_type[d] == dart_type[graph.sigma(d)])
            {
                return Err(ChamberError::Alternation(v));
            }
        }
        Ok(ChamberSystem {
            graph,
            dart_type,
            vertex_type,
        })
    }

    /// Derives the vertex types from the dart types.
    pub fn from_dart_types(graph: PlaneGraph, dart_type: Vec<u8>) -> Result<Self, ChamberError> {
        if dart_type.len() != graph.dart_count() {
            return Err(ChamberError::LengthMismatch {
                expected: graph.dart_count(),
                found: dart_type.len(),
            });
        }
        if let Some(d) = dart_type.iter().position(|&t| t > 2) {
            return Err(ChamberError::TypeOutOfRange(d));
        }
        let vertex_type = missing_types(&graph, &dart_type)
            .into_iter()
            .enumerate()
            .map(|(v, t)| t.ok_or(ChamberError::AmbiguousVertexType(v)))
            .collect::<Result<_, _>>()?;
        Self::new(graph, dart_type, vertex_type)
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

    /// Canonical form with dart types attached.
    pub fn canonical_form(&self) -> Vec<u8> {
        let extra: Vec<u32> = self.dart_type.iter().map(|&t| t as u32).collect();
        crate::canon::canonical_form(&self.graph, Some(&extra))
    }

    /// Type-preserving orientation-preserving isomorphism.
    pub fn is_isomorphic(&self, other: &ChamberSystem) -> bool {
        self.graph.dart_count() == other.graph.dart_count()
            && self.canonical_form() == other.canonical_form()
    }
}

/// The barycentric subdivision of `g`.
///
/// Vertices `0..V` are the vertices of `g`, `V..V+E` the edge midpoints and
/// `V+E..V+E+F` the face centres. Each dart `e` of `g` contributes three
/// edges: source to midpoint (type 2), source to the centre of the face left
/// of `e` (type 1) and midpoint to that centre (type 0).
pub fn barycentric(g: &PlaneGraph) -> ChamberSystem {
    let (nv, m) = (g.vertex_count(), g.dart_count());
    let mut edge_index = vec![usize::MAX; m];
    let mut canonical = Vec::new();
    for d in 0..m {
        if edge_index[d] == usize::MAX {
            edge_index[d] = canonical.len();
            edge_index[g.theta(d)] = canonical.len();
            canonical.push(d);
        }
    }
    let ne = canonical.len();
    let mid = |d: Dart| nv + edge_index[d];
    let centre = |d: Dart| nv + ne + g.face_of(d);
    let (a, b, c) = (|d: Dart| 3 * d, |d: Dart| 3 * d + 1, |d: Dart| 3 * d + 2);

    let mut lists: Vec<Vec<(usize, usize)>> = Vec::with_capacity(nv + ne + g.face_count());
    for v in 0..nv {
        let mut list = Vec::new();
        for d in g.rotation(v) {
            let next = g.sigma(d);
            list.push((mid(d), a(d)));
            list.push((centre(next), b(next)));
        }
        lists.push(list);
    }
    for &e in &canonical {
        let r = g.theta(e);
        lists.push(vec![
            (g.vertex_of(e), a(e)),
            (centre(e), c(e)),
            (g.vertex_of(r), a(r)),
            (centre(r), c(r)),
        ]);
    }
    for f in 0..g.face_count() {
        let mut list = Vec::new();
        let start = g.face_dart(f);
        let mut d = start;
        loop {
            list.push((mid(d), c(d)));
            list.push((g.vertex_of(d), b(d)));
            // previous dart along the face
            d = g.theta(g.sigma_inv(d));
            if d == start {
                break;
            }
        }
        lists.push(list);
    }

    let edge_type = |id: usize| [2u8, 1, 0][id % 3];
    let dart_type: Vec<u8> = lists
        .iter()
        .flatten()
        .map(|&(_, id)| edge_type(id))
        .collect();
    let mut vertex_type = vec![0u8; nv];
    vertex_type.extend(std::iter::repeat_n(1, ne));
    vertex_type.extend(std::iter::repeat_n(2, g.face_count()));
    let graph =
        PlaneGraph::from_rotation_lists(&lists).expect("barycentric subdivision is a plane graph");
    ChamberSystem::new(graph, dart_type, vertex_type)
        .expect("barycentric subdivision is a chamber system")
}

/// Recovers the plane graph whose barycentric subdivision is `c`.
///
/// The darts of the result are the type-2 darts leaving type-0 vertices of
/// `c`, numbered in increasing order.
pub fn base_graph(c: &ChamberSystem) -> Result<PlaneGraph, ChamberError> {
    let g = c.graph();
    for v in 0..g.vertex_count() {
        if c.vertex_type(v) == 1 && g.degree(v) != 4 {
            return Err(ChamberError::Type1Degree {
                vertex: v,
                degree: g.degree(v),
            });
        }
    }
    let mut index = vec![usize::MAX; g.dart_count()];
    let mut darts = Vec::new();
    for d in 0..g.dart_count() {
        if c.dart_type(d) == 2 && c.vertex_type(g.vertex_of(d)) == 0 {
            index[d] = darts.len();
            darts.push(d);
        }
    }
    let sigma2 = |d: Dart| g.sigma(g.sigma(d));
    let sigma = darts.iter().map(|&d| index[sigma2(d)]).collect();
    let theta = darts
        .iter()
        .map(|&d| index[g.theta(sigma2(g.theta(d)))])
        .collect();
    Ok(PlaneGraph::from_permutations(sigma, theta)?)
}

/// Double chambers of a plane graph, indexed by its darts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleChamberSystem {
    base: PlaneGraph,
    s1: Vec<Dart>,
    s2: Vec<Dart>,
    s2_inv: Vec<Dart>,
}

impl DoubleChamberSystem {
    pub fn base(&self) -> &PlaneGraph {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.s1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s1.is_empty()
    }

    /// Crossing the type-1 ... type-2 side: `c_e -> c_theta(e)`.
    pub fn s1(&self, c: Dart) -> Dart {
        self.s1[c]
    }

    pub fn s1_inv(&self, c: Dart) -> Dart {
        self.s1[c]
    }

    /// `c_e -> c_theta(sigma^-1(e))`, the previous dart in the face left of `e`.
    pub fn s2(&self, c: Dart) -> Dart {
        self.s2[c]
    }

    pub fn s2_inv(&self, c: Dart) -> Dart {
        self.s2_inv[c]
    }
}

pub fn double_chambers(g: &PlaneGraph) -> DoubleChamberSystem {
    let m = g.dart_count();
    let s1: Vec<Dart> = (0..m).map(|e| g.theta(e)).collect();
    let s2: Vec<Dart> = (0..m).map(|e| g.theta(g.sigma_inv(e))).collect();
    let s2_inv = (0..m).map(|e| g.sigma(g.theta(e))).collect();
    DoubleChamberSystem {
        base: g.clone(),
        s1,
        s2,
        s2_inv,
    }
}

/// A closed walk of type-1 darts; `darts[i]` ends where `darts[i + 1]` starts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Type1Cycle {
    pub darts: Vec<Dart>,
}

impl Type1Cycle {
    pub fn vertices(&self, map: &RotationSystem) -> Vec<usize> {
        self.darts.iter().map(|&d| map.vertex_of(d)).collect()
    }
}

/// Vertex sets on the two sides of a simple cycle, explored together so that
/// the smaller side is found first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Sides {
    /// A side that was explored completely.
    pub small: Vec<usize>,
    /// The other side, complete only when `other_complete` is set.
    pub other: Vec<usize>,
    pub other_complete: bool,
}

/// Splits the vertices off a simple cycle into its two sides. Returns `None`
/// when the cycle does not separate the surface.
pub(crate) fn cycle_sides(map: &RotationSystem, cycle: &[Dart]) -> Option<Sides> {
    let n = cycle.len();
    let mut on_cycle = HashMap::new();
    for &d in cycle {
        on_cycle.insert(map.vertex_of(d), ());
    }
    // side[v]: 0 unseen, 1 right, 2 left
    let mut side: HashMap<usize, u8> = HashMap::new();
    let mut queues = [VecDeque::new(), VecDeque::new()];
    let mut found: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for i in 0..n {
        let out = cycle[i];
        let back = map.theta(cycle[(i + n - 1) % n]);
        let mut d = map.sigma(out);
        let mut s = 0usize;
        // right wedge: strictly between `out` and `back`, then the rest
        while d != out {
            if d == back {
                s = 1;
            } else {
                let w = map.target(d);
                if !on_cycle.contains_key(&w) {
                    match side.get(&w) {
                        None => {
                            side.insert(w, s as u8 + 1);
                            found[s].push(w);
                            queues[s].push_back(w);
                        }
                        Some(&t) if t as usize != s + 1 => return None,
                        _ => {}
                    }
                }
            }
            d = map.sigma(d);
        }
    }
    let mut finished = [false; 2];
    loop {
        for s in 0..2 {
            if finished[s] {
                continue;
            }
            let Some(v) = queues[s].pop_front() else {
                finished[s] = true;
                continue;
            };
            for d in map.rotation(v) {
                let w = map.target(d);
                if on_cycle.contains_key(&w) {
                    continue;
                }
                match side.get(&w) {
                    None => {
                        side.insert(w, s as u8 + 1);
                        found[s].push(w);
                        queues[s].push_back(w);
                    }
                    Some(&t) if t as usize != s + 1 => return None,
                    _ => {}
                }
            }
        }
        if finished[0] || finished[1] {
            let done = if finished[0] { 0 } else { 1 };
            let other = 1 - done;
            // Keep going on the other side only until it is known to be larger.
            while !finished[other] && found[other].len() <= found[done].len() {
                let Some(v) = queues[other].pop_front() else {
                    finished[other] = true;
                    break;
                };
                for d in map.rotation(v) {
                    let w = map.target(d);
                    if on_cycle.contains_key(&w) {
                        continue;
                    }
                    match side.get(&w) {
                        None => {
                            side.insert(w, other as u8 + 1);
                            found[other].push(w);
                            queues[other].push_back(w);
                        }
                        Some(&t) if t as usize != other + 1 => return None,
                        _ => {}
                    }
                }
            }
            if queues[other].is_empty() {
                finished[other] = true;
            }
            let [a, b] = found;
            let (small, other_set) = if done == 0 { (a, b) } else { (b, a) };
            return Some(Sides {
                small,
                other: other_set,
                other_complete: finished[other],
            });
        }
    }
}

/// Parallel pairs of type-1 edges. Each cycle is `[u -> f, f -> u]`.
pub(crate) fn two_cycles_in(
    map: &RotationSystem,
    dart_type: &[u8],
    vertex_type: &[u8],
) -> Vec<Type1Cycle> {
    let mut by_ends: HashMap<(usize, usize), Vec<Dart>> = HashMap::new();
    for d in 0..map.dart_count() {
        if dart_type[d] == 1 && vertex_type[map.vertex_of(d)] == 0 {
            by_ends
                .entry((map.vertex_of(d), map.target(d)))
                .or_default()
                .push(d);
        }
    }
    let mut keys: Vec<_> = by_ends.keys().copied().collect();
    keys.sort_unstable();
    let mut cycles = Vec::new();
    for key in keys {
        let darts = &by_ends[&key];
        for i in 0..darts.len() {
            for j in i + 1..darts.len() {
                let cycle = [darts[i], map.theta(darts[j])];
                if cycle_sides(map, &cycle).is_some() {
                    cycles.push(Type1Cycle {
                        darts: cycle.to_vec(),
                    });
                }
            }
        }
    }
    cycles
}

/// Separating type-1 cycles `u -> f -> w -> g -> u` with `u != w` and
/// `f != g`, with a flag telling whether the cycle is empty: one side holds a
/// single vertex, of type 1.
pub(crate) fn four_cycles_in(
    map: &RotationSystem,
    dart_type: &[u8],
    vertex_type: &[u8],
) -> Vec<(Type1Cycle, bool)> {
    let m = map.dart_count();
    let edge = |d: Dart| d.min(map.theta(d));
    // type-1 darts leaving each type-0 vertex
    let mut out: HashMap<usize, Vec<Dart>> = HashMap::new();
    for d in 0..m {
        if dart_type[d] == 1 && vertex_type[map.vertex_of(d)] == 0 {
            out.entry(map.vertex_of(d)).or_default().push(d);
        }
    }
    // type-1 darts leaving each type-2 vertex
    let mut from_centre: HashMap<usize, Vec<Dart>> = HashMap::new();
    for d in 0..m {
        if dart_type[d] == 1 && vertex_type[map.vertex_of(d)] == 2 {
            from_centre.entry(map.vertex_of(d)).or_default().push(d);
        }
    }
    let mut starts: Vec<usize> = out.keys().copied().collect();
    starts.sort_unstable();
    let mut seen = BTreeSet::new();
    let mut cycles = Vec::new();
    for u in starts {
        for &uf in &out[&u] {
            let f = map.target(uf);
            for &fw in &from_centre[&f] {
                let w = map.target(fw);
                if w <= u {
                    continue;
                }
                for &wg in &out[&w] {
                    let g = map.target(wg);
                    if g == f {
                        continue;
                    }
                    for &ug in &out[&u] {
                        if map.target(ug) != g {
                            continue;
                        }
                        let cycle = [uf, fw, wg, map.theta(ug)];
                        let mut key = cycle.map(edge);
                        key.sort_unstable();
                        if !seen.insert(key) {
                            continue;
                        }
                        if let Some(sides) = cycle_sides(map, &cycle) {
                            let singleton_type1 =
                                |s: &[usize]| s.len() == 1 && vertex_type[s[0]] == 1;
                            let empty = singleton_type1(&sides.small)
                                || (sides.other_complete && singleton_type1(&sides.other));
                            cycles.push((
                                Type1Cycle {
                                    darts: cycle.to_vec(),
                                },
                                empty,
                            ));
                        }
                    }
                }
            }
        }
    }
    cycles
}

/// Connectivity level read off type-1 cycles: 1 with a 2-cycle, 2 with a
/// non-empty 4-cycle, 3 otherwise.
pub(crate) fn connectivity_from_cycles(
    map: &RotationSystem,
    dart_type: &[u8],
    vertex_type: &[u8],
) -> u8 {
    if !two_cycles_in(map, dart_type, vertex_type).is_empty() {
        1
    } else if four_cycles_in(map, dart_type, vertex_type)
        .iter()
        .any(|(_, empty)| !empty)
    {
        2
    } else {
        3
    }
}

pub fn type1_two_cycles(c: &ChamberSystem) -> Vec<Type1Cycle> {
    two_cycles_in(c.graph(), c.dart_types(), c.vertex_types())
}

pub fn type1_nonempty_four_cycles(c: &ChamberSystem) -> Vec<Type1Cycle> {
    four_cycles_in(c.graph(), c.dart_types(), c.vertex_types())
        .into_iter()
        .filter(|(_, empty)| !empty)
        .map(|(cycle, _)| cycle)
        .collect()
}

/// Connectivity of `g` computed from the type-1 cycles of its chamber system.
pub fn chamber_connectivity(g: &PlaneGraph) -> u8 {
    let c = barycentric(g);
    connectivity_from_cycles(c.graph(), c.dart_types(), c.vertex_types())
}
