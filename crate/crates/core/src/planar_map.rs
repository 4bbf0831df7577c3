//! Rotation systems: darts with a vertex rotation `sigma` and an edge
//! involution `theta`.
//!
//! `sigma(e)` is the next dart clockwise around the source of `e` and
//! `theta(e)` is the reversed dart. Vertices are the orbits of `sigma`, faces
//! the orbits of `e -> sigma(theta(e))`; the face orbit of `e` is the face on
//! the left of `e`.

use std::collections::{BTreeMap, VecDeque};
use std::ops::Deref;

use thiserror::Error;

use crate::canon;

/// Dense dart index in `0..dart_count`.
pub type Dart = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("a map needs at least one edge")]
    Empty,
    #[error("sigma and theta have different lengths ({sigma} vs {theta})")]
    LengthMismatch { sigma: usize, theta: usize },
    #[error("sigma is not a permutation (dart {0})")]
    SigmaNotPermutation(Dart),
    #[error("theta is not a fixed-point-free involution (dart {0})")]
    ThetaNotInvolution(Dart),
    #[error("unmatched edge {edge}: occurs {count} time(s)")]
    UnmatchedEdge { edge: usize, count: usize },
    #[error("vertex {0} has an empty rotation")]
    EmptyVertex(usize),
    #[error("edge {0} has inconsistent neighbour entries")]
    NeighbourMismatch(usize),
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("directed edge {0}->{1} occurs more than once")]
    DuplicateDirectedEdge(usize, usize),
    #[error("directed edge {0}->{1} has no reverse")]
    MissingReverse(usize, usize),
    #[error("face {0} has fewer than two vertices")]
    DegenerateFace(usize),
    #[error("disconnected: {0} components")]
    Disconnected(usize),
    #[error("not spherical: V - E + F = {0}")]
    NotSpherical(i64),
}

/// Which permutation to take orbits of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// Vertex orbits.
    Sigma,
    /// Face orbits.
    SigmaTheta,
}

/// A connected orientable map of any genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    sigma: Vec<Dart>,
    sigma_inv: Vec<Dart>,
    theta: Vec<Dart>,
    vertex_of: Vec<usize>,
    vertex_rep: Vec<Dart>,
    face_of: Vec<usize>,
    face_rep: Vec<Dart>,
}

fn label_orbits(m: usize, step: impl Fn(Dart) -> Dart) -> (Vec<usize>, Vec<Dart>) {
    let mut label = vec![usize::MAX; m];
    let mut reps = Vec::new();
    for start in 0..m {
        if label[start] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(start);
        let mut d = start;
        loop {
            label[d] = id;
            d = step(d);
            if d == start {
                break;
            }
        }
    }
    (label, reps)
}

impl RotationSystem {
    /// Checks that `sigma` is a permutation, `theta` a fixed-point-free
    /// involution and that the generated group is transitive.
    pub fn new(sigma: Vec<Dart>, theta: Vec<Dart>) -> Result<Self, MapError> {
        let m = sigma.len();
        if m == 0 {
            return Err(MapError::Empty);
        }
        if theta.len() != m {
            return Err(MapError::LengthMismatch {
                sigma: m,
                theta: theta.len(),
            });
        }
        let mut sigma_inv = vec![usize::MAX; m];
        for (d, &s) in sigma.iter().enumerate() {
            if s >= m || sigma_inv[s] != usize::MAX {
                return Err(MapError::SigmaNotPermutation(d));
            }
            sigma_inv[s] = d;
        }
        for (d, &t) in theta.iter().enumerate() {
            if t >= m || t == d || theta[t] != d {
                return Err(MapError::ThetaNotInvolution(d));
            }
        }
        let (vertex_of, vertex_rep) = label_orbits(m, |d| sigma[d]);
        let (face_of, face_rep) = label_orbits(m, |d| sigma[theta[d]]);
        let map = RotationSystem {
            sigma,
            sigma_inv,
            theta,
            vertex_of,
            vertex_rep,
            face_of,
            face_rep,
        };
        let components = map.component_count();
        if components != 1 {
            return Err(MapError::Disconnected(components));
        }
        Ok(map)
    }

    fn component_count(&self) -> usize {
        let m = self.dart_count();
        let mut seen = vec![false; m];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(d) = stack.pop() {
                for n in [self.sigma[d], self.theta[d]] {
                    if !seen[n] {
                        seen[n] = true;
                        stack.push(n);
                    }
                }
            }
        }
        count
    }

    pub fn dart_count(&self) -> usize {
        self.sigma.len()
    }

    pub fn edge_count(&self) -> usize {
        self.sigma.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_rep.len()
    }

    pub fn face_count(&self) -> usize {
        self.face_rep.len()
    }

    #[inline]
    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d]
    }

    #[inline]
    pub fn sigma_inv(&self, d: Dart) -> Dart {
        self.sigma_inv[d]
    }

    #[inline]
    pub fn theta(&self, d: Dart) -> Dart {
        self.theta[d]
    }

    /// Next dart along the face on the left of `d`.
    #[inline]
    pub fn face_next(&self, d: Dart) -> Dart {
        self.sigma[self.theta[d]]
    }

    pub fn sigma_slice(&self) -> &[Dart] {
        &self.sigma
    }

    pub fn theta_slice(&self) -> &[Dart] {
        &self.theta
    }

    /// Source vertex of `d`.
    #[inline]
    pub fn vertex_of(&self, d: Dart) -> usize {
        self.vertex_of[d]
    }

    /// Target vertex of `d`.
    #[inline]
    pub fn target(&self, d: Dart) -> usize {
        self.vertex_of[self.theta[d]]
    }

    /// Face on the left of `d`.
    #[inline]
    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d]
    }

    /// Lowest-numbered dart leaving `v`.
    pub fn vertex_dart(&self, v: usize) -> Dart {
        self.vertex_rep[v]
    }

    pub fn face_dart(&self, f: usize) -> Dart {
        self.face_rep[f]
    }

    /// Darts leaving `v` in clockwise order, starting at [`Self::vertex_dart`].
    pub fn rotation(&self, v: usize) -> Vec<Dart> {
        self.orbit_from(self.vertex_rep[v], |d| self.sigma[d])
    }

    /// Darts of face `f` in boundary order.
    pub fn face_darts(&self, f: usize) -> Vec<Dart> {
        self.orbit_from(self.face_rep[f], |d| self.face_next(d))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation(v).len()
    }

    fn orbit_from(&self, start: Dart, step: impl Fn(Dart) -> Dart) -> Vec<Dart> {
        let mut out = vec![start];
        let mut d = step(start);
        while d != start {
            out.push(d);
            d = step(d);
        }
        out
    }

    pub fn orbits(&self, generator: Generator) -> Vec<Vec<Dart>> {
        match generator {
            Generator::Sigma => (0..self.vertex_count()).map(|v| self.rotation(v)).collect(),
            Generator::SigmaTheta => (0..self.face_count()).map(|f| self.face_darts(f)).collect(),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Reverses every rotation.
    pub fn mirror(&self) -> RotationSystem {
        RotationSystem::new(self.sigma_inv.clone(), self.theta.clone())
            .expect("mirror of a valid map")
    }

    /// Renumbers darts; `perm[old] = new`.
    pub fn relabel(&self, perm: &[Dart]) -> RotationSystem {
        let m = self.dart_count();
        let mut sigma = vec![0; m];
        let mut theta = vec![0; m];
        for d in 0..m {
            sigma[perm[d]] = perm[self.sigma[d]];
            theta[perm[d]] = perm[self.theta[d]];
        }
        RotationSystem::new(sigma, theta).expect("relabeling preserves validity")
    }

    /// Simple neighbour sets (loops dropped, parallel edges merged).
    pub(crate) fn simple_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count()];
        for d in 0..self.dart_count() {
            let (u, w) = (self.vertex_of(d), self.target(d));
            if u != w {
                adj[u].push(w);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }
}

/// Vertex count, edge count, face count and the two size histograms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub face_sizes: BTreeMap<usize, usize>,
    pub degrees: BTreeMap<usize, usize>,
}

/// Vertex connectivity capped at 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Connectivity {
    pub k: u8,
    /// Set when the graph has fewer than four vertices and `k` was capped at
    /// `V - 1`.
    pub small: bool,
    /// The value before capping: 3 when no set of at most two vertices
    /// separates the graph, 2 when no single vertex does, 1 otherwise.
    pub raw: u8,
}

/// A connected map on the sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    map: RotationSystem,
}

impl Deref for PlaneGraph {
    type Target = RotationSystem;

    fn deref(&self) -> &RotationSystem {
        &self.map
    }
}

impl PlaneGraph {
    pub fn from_permutations(sigma: Vec<Dart>, theta: Vec<Dart>) -> Result<Self, MapError> {
        Self::from_map(RotationSystem::new(sigma, theta)?)
    }

    pub fn from_map(map: RotationSystem) -> Result<Self, MapError> {
        let chi = map.euler_characteristic();
        if chi != 2 {
            return Err(MapError::NotSpherical(chi));
        }
        Ok(PlaneGraph { map })
    }

    pub fn as_map(&self) -> &RotationSystem {
        &self.map
    }

    /// Builds a graph from per-vertex clockwise `(neighbour, edge id)` lists.
    ///
    /// Darts are numbered in list order; every edge id must occur exactly
    /// twice. For a loop both occurrences sit in the same list.
    pub fn from_rotation_lists<L: AsRef<[(usize, usize)]>>(lists: &[L]) -> Result<Self, MapError> {
        let n = lists.len();
        let mut sigma = Vec::new();
        let mut occurrences: BTreeMap<usize, Vec<(Dart, usize, usize)>> = BTreeMap::new();
        for (v, list) in lists.iter().enumerate() {
            let list = list.as_ref();
            if list.is_empty() {
                return Err(MapError::EmptyVertex(v));
            }
            let base = sigma.len();
            for (i, &(nb, edge)) in list.iter().enumerate() {
                if nb >= n {
                    return Err(MapError::VertexOutOfRange(nb));
                }
                sigma.push(base + (i + 1) % list.len());
                occurrences.entry(edge).or_default().push((base + i, v, nb));
            }
        }
        let mut theta = vec![0; sigma.len()];
        for (&edge, occ) in &occurrences {
            if occ.len() != 2 {
                return Err(MapError::UnmatchedEdge {
                    edge,
                    count: occ.len(),
                });
            }
            let (a, va, na) = occ[0];
            let (b, vb, nb) = occ[1];
            if na != vb || nb != va {
                return Err(MapError::NeighbourMismatch(edge));
            }
            theta[a] = b;
            theta[b] = a;
        }
        Self::from_permutations(sigma, theta)
    }

    /// Builds a graph from vertex cycles of its faces, each listed so that
    /// the face lies on the left (counter-clockwise seen from outside).
    ///
    /// Every directed pair may appear only once, so this constructor cannot
    /// express parallel edges; use [`Self::from_rotation_lists`] for those.
    pub fn from_faces<F: AsRef<[usize]>>(faces: &[F]) -> Result<Self, MapError> {
        let mut index: BTreeMap<(usize, usize), Dart> = BTreeMap::new();
        let mut next_in_face = Vec::new();
        for (fi, face) in faces.iter().enumerate() {
            let face = face.as_ref();
            if face.len() < 2 {
                return Err(MapError::DegenerateFace(fi));
            }
            let base = index.len();
            for i in 0..face.len() {
                let key = (face[i], face[(i + 1) % face.len()]);
                if index.insert(key, base + i).is_some() {
                    return Err(MapError::DuplicateDirectedEdge(key.0, key.1));
                }
                next_in_face.push(base + (i + 1) % face.len());
            }
        }
        let m = index.len();
        let mut theta = vec![0; m];
        for (&(u, w), &d) in &index {
            match index.get(&(w, u)) {
                Some(&r) => theta[d] = r,
                None => return Err(MapError::MissingReverse(u, w)),
            }
        }
        // face_next(e) = sigma(theta(e)), so sigma(theta(e)) is fixed by the
        // face successor of e.
        let mut sigma = vec![0; m];
        for e in 0..m {
            sigma[theta[e]] = next_in_face[e];
        }
        Self::from_permutations(sigma, theta)
    }

    pub fn counts(&self) -> Counts {
        let mut face_sizes = BTreeMap::new();
        for f in 0..self.face_count() {
            *face_sizes.entry(self.face_darts(f).len()).or_insert(0) += 1;
        }
        let mut degrees = BTreeMap::new();
        for v in 0..self.vertex_count() {
            *degrees.entry(self.degree(v)).or_insert(0) += 1;
        }
        Counts {
            vertices: self.vertex_count(),
            edges: self.edge_count(),
            faces: self.face_count(),
            face_sizes,
            degrees,
        }
    }

    pub fn mirror(&self) -> PlaneGraph {
        PlaneGraph {
            map: self.map.mirror(),
        }
    }

    pub fn relabel(&self, perm: &[Dart]) -> PlaneGraph {
        PlaneGraph {
            map: self.map.relabel(perm),
        }
    }

    /// The dual graph on the same darts; dart `e` of the dual crosses `e`.
    pub fn dual(&self) -> PlaneGraph {
        let m = self.dart_count();
        let sigma = (0..m).map(|d| self.theta(self.sigma_inv(d))).collect();
        PlaneGraph::from_permutations(sigma, self.theta_slice().to_vec())
            .expect("dual of a plane graph")
    }

    pub fn connectivity(&self) -> Connectivity {
        vertex_connectivity(&self.simple_adjacency())
    }

    /// Encoding that is equal for two graphs iff they are isomorphic by an
    /// orientation-preserving map.
    pub fn canonical_form(&self) -> Vec<u8> {
        canon::canonical_form(self, None)
    }

    /// Number of orientation-preserving automorphisms.
    pub fn automorphism_count(&self) -> usize {
        canon::automorphism_count(self, None)
    }

    pub fn is_isomorphic(&self, other: &PlaneGraph) -> bool {
        self.dart_count() == other.dart_count() && self.canonical_form() == other.canonical_form()
    }

    /// Renumbers darts in canonical order, so isomorphic inputs give equal
    /// permutations.
    pub fn canonical_relabel(&self) -> PlaneGraph {
        self.relabel(&canon::canonical_permutation(self, None))
    }
}

pub fn are_isomorphic(g: &PlaneGraph, h: &PlaneGraph) -> bool {
    g.is_isomorphic(h)
}

fn is_connected_without(adj: &[Vec<usize>], removed: &[bool]) -> bool {
    let n = adj.len();
    let Some(start) = (0..n).find(|&v| !removed[v]) else {
        return true;
    };
    let mut seen = removed.to_vec();
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Whether the graph minus `removed` has a cut vertex (iterative lowpoint
/// search).
fn has_cut_vertex_without(adj: &[Vec<usize>], removed: &[bool]) -> bool {
    let n = adj.len();
    let Some(root) = (0..n).find(|&v| !removed[v]) else {
        return false;
    };
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut parent = vec![usize::MAX; n];
    let mut time = 0;
    let mut root_children = 0;
    // (vertex, next neighbour index)
    let mut stack = vec![(root, 0usize)];
    disc[root] = time;
    low[root] = time;
    time += 1;
    while let Some(&mut (v, ref mut i)) = stack.last_mut() {
        if *i < adj[v].len() {
            let w = adj[v][*i];
            *i += 1;
            if removed[w] {
                continue;
            }
            if disc[w] == usize::MAX {
                parent[w] = v;
                disc[w] = time;
                low[w] = time;
                time += 1;
                if v == root {
                    root_children += 1;
                }
                stack.push((w, 0));
            } else if w != parent[v] {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            let p = parent[v];
            if p != usize::MAX {
                low[p] = low[p].min(low[v]);
                if p != root && low[v] >= disc[p] {
                    return true;
                }
            }
        }
    }
    root_children > 1
}

/// Vertex connectivity of a connected simple graph given by adjacency sets,
/// capped at 3: every single vertex is removed in turn and the remainder is
/// searched for a cut vertex.
pub(crate) fn vertex_connectivity(adj: &[Vec<usize>]) -> Connectivity {
    let n = adj.len();
    let mut removed = vec![false; n];
    let raw = if has_cut_vertex_without(adj, &removed) {
        1
    } else {
        let mut k = 3;
        for u in 0..n {
            removed[u] = true;
            let remaining = n - 1;
            if remaining >= 2
                && (!is_connected_without(adj, &removed) || has_cut_vertex_without(adj, &removed))
            {
                k = 2;
            }
            removed[u] = false;
            if k == 2 {
                break;
            }
        }
        k
    };
    if n < 4 {
        Connectivity {
            k: raw.min(n.saturating_sub(1) as u8),
            small: true,
            raw,
        }
    } else {
        Connectivity {
            k: raw,
            small: false,
            raw,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn triangle_counts() {
        let g = fixtures::triangle();
        assert_eq!(g.dart_count(), 6);
        let c = g.counts();
        assert_eq!((c.vertices, c.edges, c.faces), (3, 3, 2));
        assert_eq!(
            g.orbits(Generator::SigmaTheta)
                .iter()
                .map(Vec::len)
                .collect::<Vec<_>>(),
            vec![3, 3]
        );
    }

    #[test]
    fn cube_orbits_and_counts() {
        let g = fixtures::cube();
        assert_eq!(g.dart_count(), 24);
        assert!(g.orbits(Generator::Sigma).iter().all(|o| o.len() == 3));
        assert_eq!(g.orbits(Generator::Sigma).len(), 8);
        assert!(g.orbits(Generator::SigmaTheta).iter().all(|o| o.len() == 4));
        assert_eq!(g.orbits(Generator::SigmaTheta).len(), 6);
        let c = g.counts();
        assert_eq!((c.vertices, c.edges, c.faces), (8, 12, 6));
        assert_eq!(c.face_sizes, BTreeMap::from([(4, 6)]));
        assert_eq!(c.degrees, BTreeMap::from([(3, 8)]));
    }

    #[test]
    fn platonic_counts() {
        let t = fixtures::tetrahedron().counts();
        assert_eq!((t.vertices, t.edges, t.faces), (4, 6, 4));
        assert_eq!(t.face_sizes, BTreeMap::from([(3, 4)]));
        assert_eq!(t.degrees, BTreeMap::from([(3, 4)]));
        let d = fixtures::dodecahedron().counts();
        assert_eq!((d.vertices, d.edges, d.faces), (20, 30, 12));
        assert_eq!(d.face_sizes, BTreeMap::from([(5, 12)]));
        assert_eq!(d.degrees, BTreeMap::from([(3, 20)]));
    }

    #[test]
    fn face_orbit_is_left_face() {
        // Square 0,1,2,3 listed counter-clockwise: dart 0->1 has the square on
        // its left, so its face orbit visits 1->2 next.
        let g = PlaneGraph::from_faces(&[vec![0, 1, 2, 3], vec![0, 3, 2, 1]]).unwrap();
        let d01 = (0..g.dart_count())
            .find(|&d| g.vertex_of(d) == 0 && g.target(d) == 1)
            .unwrap();
        let next = g.face_next(d01);
        assert_eq!((g.vertex_of(next), g.target(next)), (1, 2));
    }

    #[test]
    fn unmatched_edge_is_rejected() {
        let lists = vec![
            vec![(1, 0), (2, 5)],
            vec![(0, 0), (2, 1)],
            vec![(1, 1), (0, 2)],
        ];
        assert_eq!(
            PlaneGraph::from_rotation_lists(&lists).unwrap_err(),
            MapError::UnmatchedEdge { edge: 2, count: 1 }
        );
    }

    #[test]
    fn constructor_errors_are_distinct() {
        let empty: Vec<Vec<(usize, usize)>> = vec![vec![(1, 0)], vec![]];
        assert_eq!(
            PlaneGraph::from_rotation_lists(&empty).unwrap_err(),
            MapError::EmptyVertex(1)
        );
        // two disjoint digons
        let lists = vec![
            vec![(1, 0), (1, 1)],
            vec![(0, 1), (0, 0)],
            vec![(3, 2), (3, 3)],
            vec![(2, 3), (2, 2)],
        ];
        assert_eq!(
            PlaneGraph::from_rotation_lists(&lists).unwrap_err(),
            MapError::Disconnected(2)
        );
        // a torus: one vertex, two loops interleaved
        let torus = vec![vec![(0, 0), (0, 1), (0, 0), (0, 1)]];
        assert_eq!(
            PlaneGraph::from_rotation_lists(&torus).unwrap_err(),
            MapError::NotSpherical(0)
        );
        assert!(matches!(
            PlaneGraph::from_permutations(vec![0, 1], vec![0, 1]),
            Err(MapError::ThetaNotInvolution(0))
        ));
    }

    #[test]
    fn connectivity_oracle() {
        assert_eq!(
            fixtures::cube().connectivity(),
            Connectivity {
                k: 3,
                small: false,
                raw: 3
            }
        );
        assert_eq!(
            fixtures::cycle4().connectivity(),
            Connectivity {
                k: 2,
                small: false,
                raw: 2
            }
        );
        assert_eq!(
            fixtures::bowtie().connectivity(),
            Connectivity {
                k: 1,
                small: false,
                raw: 1
            }
        );
        assert_eq!(fixtures::square_with_diagonal().connectivity().k, 2);
        assert_eq!(
            fixtures::triangle().connectivity(),
            Connectivity {
                k: 2,
                small: true,
                raw: 3
            }
        );
    }

    /// Removal of every vertex pair, checking reachability directly.
    fn brute_connectivity(g: &PlaneGraph) -> u8 {
        let adj = g.simple_adjacency();
        let n = adj.len();
        let mut removed = vec![false; n];
        for u in 0..n {
            removed[u] = true;
            if !is_connected_without(&adj, &removed) {
                return 1;
            }
            removed[u] = false;
        }
        for u in 0..n {
            for w in u + 1..n {
                removed[u] = true;
                removed[w] = true;
                let disconnected = !is_connected_without(&adj, &removed);
                removed[u] = false;
                removed[w] = false;
                if disconnected {
                    return 2;
                }
            }
        }
        3
    }

    #[test]
    fn connectivity_matches_pair_removal() {
        for (name, g) in fixtures::corpus() {
            if g.vertex_count() >= 4 {
                assert_eq!(g.connectivity().k, brute_connectivity(&g), "{name}");
            }
        }
    }

    #[test]
    fn mirror_is_an_involution() {
        for (_, g) in fixtures::corpus() {
            assert_eq!(g.mirror().mirror(), g);
        }
    }

    #[test]
    fn dual_of_cube_is_octahedron() {
        assert!(fixtures::cube()
            .dual()
            .is_isomorphic(&fixtures::octahedron()));
        assert!(fixtures::dodecahedron()
            .dual()
            .dual()
            .is_isomorphic(&fixtures::dodecahedron()));
    }
}
