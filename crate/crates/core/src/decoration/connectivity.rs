//! Connectivity guaranteed by a decoration.
//!
//! The decoration is applied to a hexagonal tiling of the torus; the
//! resulting chamber system is searched for type-1 2-cycles and non-empty
//! type-1 4-cycles that bound a disc. Such a cycle spans only a few double
//! chambers, so on a torus that is large enough it is the image of a cycle
//! of the same kind in the operation applied to the hexagonal tiling of the
//! plane, and the other way round.

use super::{find_cut_path, Decoration};
use crate::apply::glue;
use crate::chamber::connectivity_from_cycles;
use crate::planar_map::RotationSystem;

/// Hexagonal tiling of the torus `Z[w] / 3n Z[w]`: its vertices are the
/// lattice points that are not hexagon centres.
pub(crate) fn hexagonal_torus(n: i64) -> RotationSystem {
    let modulus = 3 * n;
    let units = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];
    let wrap = |x: i64| x.rem_euclid(modulus);
    let is_vertex = |x: i64, y: i64| (x - y).rem_euclid(3) != 0;
    let mut id = std::collections::HashMap::new();
    let mut darts = Vec::new();
    for x in 0..modulus {
        for y in 0..modulus {
            if !is_vertex(x, y) {
                continue;
            }
            for (k, (dx, dy)) in units.iter().enumerate() {
                if is_vertex(x + dx, y + dy) {
                    id.insert((x, y, k), darts.len());
                    darts.push((x, y, k));
                }
            }
        }
    }
    let sigma = darts
        .iter()
        .map(|&(x, y, k)| id[&(x, y, (k + 4) % 6)])
        .collect();
    let theta = darts
        .iter()
        .map(|&(x, y, k)| {
            let (dx, dy) = units[k];
            id[&(wrap(x + dx), wrap(y + dy), (k + 3) % 6)]
        })
        .collect();
    RotationSystem::new(sigma, theta).expect("hexagonal torus")
}

/// 1, 2 or 3: the vertex connectivity that applying `d` is guaranteed to
/// preserve.
pub fn decoration_connectivity(d: &Decoration) -> u8 {
    let torus = hexagonal_torus(4);
    let path = find_cut_path(d).expect("valid decorations have a cut path");
    let (sigma, theta, types) = glue(d, &path, &torus);
    let map = RotationSystem::new(sigma, theta).expect("glued torus is connected");
    let m = torus.dart_count();
    let vertex_type: Vec<u8> = (0..map.vertex_count())
        .map(|v| d.vertex_type(d.graph().vertex_of(map.vertex_dart(v) / m)))
        .collect();
    connectivity_from_cycles(&map, &types, &vertex_type)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decoration::{catalog, goldberg, CATALOG_NAMES};

    #[test]
    fn torus_shape() {
        let t = hexagonal_torus(4);
        assert_eq!(t.vertex_count(), 96);
        assert_eq!(t.edge_count(), 144);
        assert_eq!(t.face_count(), 48);
        assert_eq!(t.euler_characteristic(), 0);
        assert!(t
            .orbits(crate::planar_map::Generator::SigmaTheta)
            .iter()
            .all(|f| f.len() == 6));
    }

    #[test]
    fn catalog_entries_are_3_connected() {
        for name in CATALOG_NAMES {
            assert_eq!(
                decoration_connectivity(&catalog::catalog(name).unwrap()),
                3,
                "{name}"
            );
        }
        assert_eq!(decoration_connectivity(&goldberg(1, 1).unwrap()), 3);
    }
}
