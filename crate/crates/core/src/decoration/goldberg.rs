//! Goldberg-Coxeter decorations.
//!
//! The decoration of Goldberg `(a, b)` is the chamber system of the
//! hexagonal tiling modulo its symmetry group generated by the rotations of
//! order 6 about `v2`, 3 about `v0` and 2 about `v1`. That group is a lattice
//! of translations extended by the rotations about `v2`, so darts can be
//! reduced to a canonical representative directly.
//!
//! Points are Eisenstein integers `x + y w` with `w = exp(i pi / 3)`, at twice
//! the scale of the hexagonal tiling: `2z` is a hexagon centre when
//! `z.x - z.y` is divisible by 3 and a hexagon vertex otherwise, and edge
//! midpoints are the odd points halfway between two hexagon vertices.

use std::collections::{HashMap, VecDeque};

use super::catalog::CatalogError;
use super::Decoration;
use crate::planar_map::PlaneGraph;

type Eis = (i64, i64);

const UNITS: [Eis; 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

fn add(p: Eis, q: Eis) -> Eis {
    (p.0 + q.0, p.1 + q.1)
}

fn sub(p: Eis, q: Eis) -> Eis {
    (p.0 - q.0, p.1 - q.1)
}

fn mul(p: Eis, q: Eis) -> Eis {
    (p.0 * q.0 - p.1 * q.1, p.0 * q.1 + p.1 * q.0 + p.1 * q.1)
}

fn conj(p: Eis) -> Eis {
    (p.0 + p.1, -p.1)
}

fn norm(p: Eis) -> i64 {
    p.0 * p.0 + p.0 * p.1 + p.1 * p.1
}

fn scale(k: i64, p: Eis) -> Eis {
    (k * p.0, k * p.1)
}

fn is_centre(z: Eis) -> bool {
    (z.0 - z.1).rem_euclid(3) == 0
}

fn angle(p: Eis) -> f64 {
    let (x, y) = (
        p.0 as f64 + p.1 as f64 / 2.0,
        p.1 as f64 * 3f64.sqrt() / 2.0,
    );
    y.atan2(x)
}

/// Type of a scaled point (2 centre, 0 vertex, 1 midpoint), if it is a vertex
/// of the chamber system at all.
fn kind(q: Eis) -> Option<u8> {
    if q.0 % 2 == 0 && q.1 % 2 == 0 {
        return Some(if is_centre((q.0 / 2, q.1 / 2)) { 2 } else { 0 });
    }
    let u = *UNITS
        .iter()
        .find(|u| (q.0 - u.0) % 2 == 0 && (q.1 - u.1) % 2 == 0)?;
    let ends = [add(q, u), sub(q, u)].map(|e| (e.0 / 2, e.1 / 2));
    ends.iter().all(|&z| !is_centre(z)).then_some(1)
}

/// Directions to the neighbours of `q`, clockwise.
fn directions(q: Eis) -> Vec<Eis> {
    let mut dirs: Vec<Eis> = match kind(q).expect("point of the chamber system") {
        2 => UNITS
            .iter()
            .flat_map(|&u| [scale(2, u), mul(u, (1, 1))])
            .collect(),
        0 => {
            let z = (q.0 / 2, q.1 / 2);
            UNITS
                .iter()
                .map(|&u| if is_centre(add(z, u)) { scale(2, u) } else { u })
                .collect()
        }
        _ => {
            let u = *UNITS
                .iter()
                .find(|u| (q.0 - u.0) % 2 == 0 && (q.1 - u.1) % 2 == 0)
                .unwrap();
            let across = mul(u, (-1, 2));
            vec![u, across, scale(-1, u), scale(-1, across)]
        }
    };
    dirs.sort_by(|p, r| angle(*r).total_cmp(&angle(*p)));
    dirs
}

struct Quotient {
    g: Eis,
    n: i64,
}

impl Quotient {
    fn reduce(&self, q: Eis) -> Eis {
        let x = mul(q, conj(self.g));
        let k = (x.0.div_euclid(self.n), x.1.div_euclid(self.n));
        sub(q, mul(k, self.g))
    }

    /// Least representative of a dart under the rotations about the origin
    /// and the translations.
    fn canonical(&self, q: Eis, d: Eis) -> (Eis, Eis) {
        let mut best = None;
        let (mut q, mut d) = (q, d);
        for _ in 0..6 {
            let candidate = (self.reduce(q), d);
            if best.is_none_or(|b| candidate < b) {
                best = Some(candidate);
            }
            q = mul(q, (0, 1));
            d = mul(d, (0, 1));
        }
        best.unwrap()
    }
}

/// The decoration of the Goldberg-Coxeter operation with parameters
/// `(a, b)`, which multiplies the number of edges by `a^2 + ab + b^2`.
pub fn goldberg(a: u32, b: u32) -> Result<Decoration, CatalogError> {
    if a == 0 && b == 0 {
        return Err(CatalogError::ZeroGoldberg);
    }
    let p: Eis = (a as i64, b as i64);
    let v0 = scale(2, p);
    let v1 = mul(p, (2, -1));
    let v2 = (0, 0);
    let g = scale(2, mul(p, (2, -1)));
    let quotient = Quotient { g, n: norm(g) };

    let mut index: HashMap<(Eis, Eis), usize> = HashMap::new();
    let mut darts: Vec<(Eis, Eis)> = Vec::new();
    let mut queue = VecDeque::new();
    let mut intern =
        |key: (Eis, Eis), darts: &mut Vec<(Eis, Eis)>, queue: &mut VecDeque<usize>| -> usize {
            *index.entry(key).or_insert_with(|| {
                darts.push(key);
                queue.push_back(darts.len() - 1);
                darts.len() - 1
            })
        };
    let start = quotient.canonical(v2, directions(v2)[0]);
    intern(start, &mut darts, &mut queue);
    let mut sigma = Vec::new();
    let mut theta = Vec::new();
    let mut dart_type = Vec::new();
    while let Some(i) = queue.pop_front() {
        let (q, d) = darts[i];
        let dirs = directions(q);
        let pos = dirs.iter().position(|&x| x == d).unwrap();
        let next = quotient.canonical(q, dirs[(pos + 1) % dirs.len()]);
        let w = add(q, d);
        let back = quotient.canonical(w, scale(-1, d));
        let s = intern(next, &mut darts, &mut queue);
        let t = intern(back, &mut darts, &mut queue);
        if sigma.len() <= i {
            sigma.resize(i + 1, 0);
            theta.resize(i + 1, 0);
            dart_type.resize(i + 1, 0);
        }
        sigma[i] = s;
        theta[i] = t;
        dart_type[i] = 3 - kind(q).unwrap() - kind(w).unwrap();
    }
    let graph = PlaneGraph::from_permutations(sigma, theta).expect("the quotient is a sphere");
    let vertex_at = |point: Eis| {
        let key = quotient.canonical(point, directions(point)[0]);
        graph.vertex_of(index[&key])
    };
    let marks = [vertex_at(v0), vertex_at(v1), vertex_at(v2)];
    Decoration::new(graph, dart_type, marks)
        .map_err(|e| unreachable!("goldberg({a},{b}) is invalid: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decoration::catalog;

    #[test]
    fn eisenstein_arithmetic() {
        let w = (0, 1);
        assert_eq!(mul(w, w), (-1, 1));
        assert_eq!(norm((2, 1)), 7);
        assert_eq!(mul((3, 2), conj((3, 2))), (norm((3, 2)), 0));
    }

    #[test]
    fn point_kinds() {
        assert_eq!(kind((0, 0)), Some(2));
        assert_eq!(kind((2, 0)), Some(0));
        assert_eq!(kind((3, 0)), Some(1));
        // halfway between a centre and a vertex
        assert_eq!(kind((1, 0)), None);
        assert_eq!(directions((0, 0)).len(), 12);
        assert_eq!(directions((2, 0)).len(), 6);
        assert_eq!(directions((3, 0)).len(), 4);
    }

    #[test]
    fn sizes_and_types() {
        for a in 0..=4u32 {
            for b in 0..=4 - a {
                if a + b == 0 {
                    continue;
                }
                let t = (a * a + a * b + b * b) as usize;
                let d = goldberg(a, b).unwrap();
                assert_eq!(d.graph().dart_count(), 6 * t, "({a},{b})");
                assert_eq!(d.face_count(), 2 * t);
                let expected_v0 = if t.is_multiple_of(3) { 2 } else { 0 };
                assert_eq!(d.vertex_type(d.v0()), expected_v0);
                // the midpoint of an original edge is a hexagon centre when
                // the edge is split into an even number of steps
                let expected_v1 = if a % 2 == 0 && b % 2 == 0 { 2 } else { 1 };
                assert_eq!(d.vertex_type(d.v1()), expected_v1, "({a},{b})");
                assert_eq!(d.vertex_type(d.v2()), 2);
            }
        }
    }

    #[test]
    fn small_cases() {
        assert!(goldberg(1, 0).unwrap().is_isomorphic(&catalog::identity()));
        assert!(goldberg(0, 1).unwrap().is_isomorphic(&catalog::identity()));
        assert_eq!(goldberg(1, 1).unwrap().face_count(), 6);
        assert_eq!(goldberg(1, 1).unwrap().inflation_factor(), 3);
        assert_eq!(goldberg(2, 1).unwrap().face_count(), 14);
    }

    #[test]
    fn chirality() {
        for a in 1..=4u32 {
            for b in 0..=4 - a {
                let d = goldberg(a, b).unwrap();
                assert_eq!(d.is_chiral(), b != 0 && b != a, "({a},{b})");
                if b > 0 {
                    assert!(
                        goldberg(b, a).unwrap().is_isomorphic(&d.mirror()),
                        "({a},{b})"
                    );
                }
            }
        }
    }
}
