//! Cutting a decoration open along a cut path into a quadrangular patch.

use super::{CutPath, Decoration};
use crate::planar_map::{Dart, PlaneGraph, RotationSystem};

/// A decoration cut open along a cut path, drawn as a disc whose outer face
/// has corners `v1, v0, v2, v0'`.
///
/// Darts `0..m` are the darts of the decoration; every path dart `x` (in
/// either direction) gets one extra outer dart, its reverse along the cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Patch {
    pub graph: PlaneGraph,
    pub dart_type: Vec<u8>,
    pub v1: usize,
    pub v0: usize,
    pub v2: usize,
    pub v0_prime: usize,
    /// Outer dart leaving `v1`; the outer face walk starts here.
    pub outer_start: Dart,
    p1_len: usize,
    p2_len: usize,
    inner_darts: usize,
}

pub fn cut_open(d: &Decoration, path: &CutPath) -> Patch {
    let g = d.graph();
    let m = g.dart_count();
    let cut: Vec<Dart> = path.dart_sets(d).concat();
    let mut out_of = vec![usize::MAX; m];
    for (k, &x) in cut.iter().enumerate() {
        out_of[x] = m + k;
    }
    let total = m + cut.len();
    let mut sigma: Vec<Dart> = (0..m)
        .map(|x| g.sigma(x))
        .chain(std::iter::repeat_n(0, cut.len()))
        .collect();
    let mut theta: Vec<Dart> = (0..m)
        .map(|x| g.theta(x))
        .chain(std::iter::repeat_n(0, cut.len()))
        .collect();
    for &x in &cut {
        // The wedge ending at x starts just after the previous cut dart
        // counter-clockwise; its first dart is the outer copy of that edge.
        let mut y = g.sigma_inv(x);
        while out_of[y] == usize::MAX {
            y = g.sigma_inv(y);
        }
        sigma[x] = out_of[g.theta(y)];
        theta[x] = out_of[x];
        theta[out_of[x]] = x;
        sigma[out_of[g.theta(y)]] = g.sigma(y);
    }
    let graph =
        PlaneGraph::from_permutations(sigma, theta).expect("a cut-open decoration is a disc");
    let mut dart_type = d.dart_types().to_vec();
    dart_type.extend(cut.iter().map(|&x| d.dart_type(x)));
    debug_assert_eq!(dart_type.len(), total);

    let outer_start = out_of[g.theta(path.p1[0])];
    let (a, b) = (path.p1.len(), path.p2.len());
    let corner = |steps: usize| {
        let mut x = outer_start;
        for _ in 0..steps {
            x = graph.face_next(x);
        }
        graph.vertex_of(x)
    };
    let (v1, v0, v2, v0_prime) = (corner(0), corner(a), corner(a + b), corner(a + 2 * b));
    Patch {
        graph,
        dart_type,
        v1,
        v0,
        v2,
        v0_prime,
        outer_start,
        p1_len: a,
        p2_len: b,
        inner_darts: m,
    }
}

impl Patch {
    /// Darts of the outer face in walk order from `v1`.
    pub fn boundary(&self) -> Vec<Dart> {
        let mut walk = vec![self.outer_start];
        let mut x = self.graph.face_next(self.outer_start);
        while x != self.outer_start {
            walk.push(x);
            x = self.graph.face_next(x);
        }
        walk
    }

    /// Boundary vertices in walk order from `v1`.
    pub fn boundary_vertices(&self) -> Vec<usize> {
        self.boundary()
            .iter()
            .map(|&x| self.graph.vertex_of(x))
            .collect()
    }

    /// Glues the two halves of the boundary back together, using only the
    /// patch and the side lengths: the `i`-th boundary edge is identified
    /// with the `(2(a + b) - 1 - i)`-th.
    pub fn reglue(&self) -> (RotationSystem, Vec<u8>, [usize; 3]) {
        let walk = self.boundary();
        let l = walk.len();
        assert_eq!(l, 2 * (self.p1_len + self.p2_len));
        let g = &self.graph;
        let n = self.inner_darts;
        // each outer dart is paired with the other copy of its reverse
        let mut partner = vec![usize::MAX; g.dart_count()];
        for i in 0..l {
            partner[walk[i]] = walk[l - 1 - i];
        }
        let mut sigma = vec![0; n];
        let mut theta = vec![0; n];
        for x in 0..n {
            let t = g.theta(x);
            // a dart on the cut continues from its twin on the other side
            let twin = if t >= n { partner[t] } else { x };
            sigma[x] = g.sigma(twin);
            theta[x] = g.theta(twin);
        }
        let map = RotationSystem::new(sigma, theta).expect("regluing gives a connected map");
        let at = |v: usize| {
            map.vertex_of(
                (0..n)
                    .find(|&x| g.vertex_of(x) == v)
                    .expect("corner has an inner dart"),
            )
        };
        let marks = [at(self.v0), at(self.v1), at(self.v2)];
        (map, self.dart_type[..n].to_vec(), marks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decoration::{catalog, enumerate_cut_paths, CATALOG_NAMES};

    #[test]
    fn identity_patch_is_a_quadrangle() {
        let id = catalog::identity();
        let p = cut_open(&id, &crate::decoration::find_cut_path(&id).unwrap());
        let c = p.graph.counts();
        assert_eq!((c.vertices, c.edges, c.faces), (4, 5, 3));
        assert_eq!(p.boundary_vertices(), vec![p.v1, p.v0, p.v2, p.v0_prime]);
        // the inner diagonal joins v1 and v2 and has type 0
        let diagonal: Vec<Dart> = (0..p.graph.dart_count())
            .filter(|&x| p.graph.vertex_of(x) == p.v1 && p.graph.target(x) == p.v2)
            .collect();
        assert_eq!(diagonal.len(), 1);
        assert_eq!(p.dart_type[diagonal[0]], 0);
        let inner_faces = (0..p.graph.face_count())
            .filter(|&f| p.graph.face_darts(f).len() == 3)
            .count();
        assert_eq!(inner_faces, 2);
    }

    #[test]
    fn snub_patch_counts() {
        let s = catalog::snub();
        let [first, _] = catalog::snub_paths();
        let p = cut_open(&s, &first);
        let c = p.graph.counts();
        // 5 path edges: v0 and three inner path vertices are doubled
        assert_eq!(c.vertices, 7 + 4);
        assert_eq!(c.edges, 15 + 5);
        assert_eq!(c.face_sizes.get(&10), Some(&1));
        assert_eq!(c.face_sizes.get(&3), Some(&10));
    }

    #[test]
    fn patches_reglue_to_the_decoration() {
        for name in CATALOG_NAMES {
            let d = catalog::catalog(name).unwrap();
            for path in enumerate_cut_paths(&d, 5) {
                let p = cut_open(&d, &path);
                let c = p.graph.counts();
                assert_eq!(
                    c.vertices,
                    d.graph().vertex_count() + path.len() - 1,
                    "{name}"
                );
                assert_eq!(c.faces, d.face_count() + 1);
                let mut boundary = p.boundary_vertices();
                let corners = [p.v1, p.v0, p.v2, p.v0_prime];
                boundary.retain(|v| corners.contains(v));
                assert_eq!(boundary, corners.to_vec());
                assert_eq!(p.dart_type[..d.graph().dart_count()], *d.dart_types());
                let (map, types, marks) = p.reglue();
                assert_eq!(map.sigma_slice(), d.graph().sigma_slice(), "{name}");
                assert_eq!(map.theta_slice(), d.graph().theta_slice());
                let again =
                    Decoration::new(PlaneGraph::from_map(map).unwrap(), types, marks).unwrap();
                assert!(again.is_isomorphic(&d));
            }
        }
    }
}
