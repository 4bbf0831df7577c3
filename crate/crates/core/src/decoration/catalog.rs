//! Hand-encoded decorations of a few classical operations.
//!
//! Each entry is a list of clockwise `(neighbour, edge id)` rotations, one
//! per vertex, a type per edge id and the marks `[v0, v1, v2]`.

use thiserror::Error;

use super::{goldberg, CutPath, Decoration};
use crate::planar_map::Dart;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown decoration {0:?}")]
    Unknown(String),
    #[error("malformed goldberg parameters {0:?}, expected goldberg:a,b")]
    Syntax(String),
    #[error("goldberg parameters must not both be zero")]
    ZeroGoldberg,
}

pub const CATALOG_NAMES: [&str; 6] = ["identity", "dual", "ambo", "truncate", "gyro", "snub"];

type Rotations = &'static [&'static [(usize, usize)]];

const TRIANGLE: Rotations = &[&[(1, 0), (2, 2)], &[(2, 1), (0, 0)], &[(0, 2), (1, 1)]];

const AMBO: Rotations = &[
    &[(3, 2), (1, 4)],
    &[(3, 0), (0, 4), (3, 1), (2, 5)],
    &[(3, 3), (1, 5)],
    &[(1, 0), (2, 3), (1, 1), (0, 2)],
];

const TRUNCATE: Rotations = &[
    &[(4, 4), (3, 6)],
    &[(3, 0), (2, 1)],
    &[(1, 1), (3, 7), (4, 5), (3, 8)],
    &[(1, 0), (2, 8), (4, 2), (0, 6), (4, 3), (2, 7)],
    &[(3, 2), (2, 5), (3, 3), (0, 4)],
];

/// Vertices: v0, v1, v2, a type-0 vertex `t` of degree 10, a type-2 vertex
/// `b` of degree 6 and two type-1 vertices.
const SNUB: Rotations = &[
    &[(3, 4), (6, 9)],
    &[(3, 5), (4, 6)],
    &[(3, 3), (5, 7)],
    &[
        (4, 0),
        (1, 5),
        (4, 2),
        (6, 13),
        (0, 4),
        (6, 14),
        (4, 1),
        (5, 12),
        (2, 3),
        (5, 11),
    ],
    &[(3, 0), (5, 8), (3, 1), (6, 10), (3, 2), (1, 6)],
    &[(2, 7), (3, 12), (4, 8), (3, 11)],
    &[(3, 14), (0, 9), (3, 13), (4, 10)],
];

const SNUB_TYPES: [u8; 15] = [1, 1, 1, 1, 1, 2, 0, 0, 0, 0, 0, 2, 2, 2, 2];

fn build(lists: Rotations, types: &[u8]) -> Decoration {
    Decoration::from_rotation_lists(lists, types, [0, 1, 2]).expect("catalog entries are valid")
}

fn swap_0_2(types: &[u8]) -> Vec<u8> {
    types
        .iter()
        .map(|&t| if t == 1 { 1 } else { 2 - t })
        .collect()
}

pub fn identity() -> Decoration {
    build(TRIANGLE, &[2, 0, 1])
}

pub fn dual() -> Decoration {
    build(TRIANGLE, &[0, 2, 1])
}

pub fn ambo() -> Decoration {
    build(AMBO, &[2, 2, 0, 0, 1, 1])
}

pub fn truncate() -> Decoration {
    build(TRUNCATE, &[2, 0, 2, 2, 0, 0, 1, 1, 1])
}

pub fn snub() -> Decoration {
    build(SNUB, &SNUB_TYPES)
}

/// The snub with types 0 and 2 exchanged.
pub fn gyro() -> Decoration {
    build(SNUB, &swap_0_2(&SNUB_TYPES))
}

/// Dart of a catalog entry leaving vertex `from` along edge id `edge`.
fn dart_of(lists: Rotations, from: usize, edge: usize) -> Dart {
    let base: usize = lists[..from].iter().map(|l| l.len()).sum();
    base + lists[from]
        .iter()
        .position(|&(_, id)| id == edge)
        .expect("edge at vertex")
}

/// Two cut paths of [`snub`]. In the first, `p1` runs from `v1` through the
/// type-2 vertex of degree 6 and `p2` through the vertex of degree 10; in the
/// second the roles are reversed.
pub fn snub_paths() -> [CutPath; 2] {
    let d = |from, edge| dart_of(SNUB, from, edge);
    let (v1, v2, t, b, xl, xr) = (1, 2, 3, 4, 5, 6);
    [
        CutPath {
            p1: vec![d(v1, 6), d(b, 10), d(xr, 9)],
            p2: vec![d(v2, 3), d(t, 4)],
        },
        CutPath {
            p1: vec![d(v1, 5), d(t, 4)],
            p2: vec![d(v2, 7), d(xl, 8), d(b, 10), d(xr, 9)],
        },
    ]
}

/// Looks up a decoration by name; `goldberg:a,b` selects a Goldberg
/// operation.
pub fn catalog(name: &str) -> Result<Decoration, CatalogError> {
    if let Some(params) = name.strip_prefix("goldberg:") {
        let (a, b) = params
            .split_once(',')
            .ok_or_else(|| CatalogError::Syntax(name.into()))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| CatalogError::Syntax(name.into()))
        };
        return goldberg(parse(a)?, parse(b)?);
    }
    Ok(match name {
        "identity" => identity(),
        "dual" => dual(),
        "ambo" => ambo(),
        "truncate" => truncate(),
        "gyro" => gyro(),
        "snub" => snub(),
        _ => return Err(CatalogError::Unknown(name.into())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_validate() {
        for name in CATALOG_NAMES {
            assert!(catalog(name).is_ok(), "{name}");
        }
        assert_eq!(catalog("snub").unwrap().inflation_factor(), 5);
        assert_eq!(catalog("snub").unwrap().face_count(), 10);
        assert_eq!(catalog("ambo").unwrap().inflation_factor(), 2);
        assert_eq!(catalog("truncate").unwrap().inflation_factor(), 3);
    }

    #[test]
    fn snub_vertex_types() {
        assert_eq!(snub().vertex_types(), &[2, 1, 2, 0, 2, 1, 1]);
        assert_eq!(gyro().vertex_types(), &[0, 1, 0, 2, 0, 1, 1]);
    }

    #[test]
    fn names() {
        assert_eq!(
            catalog("cube").unwrap_err(),
            CatalogError::Unknown("cube".into())
        );
        assert!(matches!(
            catalog("goldberg:2"),
            Err(CatalogError::Syntax(_))
        ));
        assert_eq!(
            catalog("goldberg:0,0").unwrap_err(),
            CatalogError::ZeroGoldberg
        );
        assert!(catalog("goldberg:1,0").unwrap().is_isomorphic(&identity()));
    }

    #[test]
    fn chirality() {
        assert!(snub().is_chiral());
        assert!(gyro().is_chiral());
        for d in [identity(), dual(), ambo(), truncate()] {
            assert!(!d.is_chiral());
        }
    }
}
