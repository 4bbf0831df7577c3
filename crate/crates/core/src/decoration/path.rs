//! Cut paths `v1 -> v0 <- v2` through a decoration.

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

use super::Decoration;
use crate::planar_map::Dart;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("{0} is empty")]
    Empty(&'static str),
    #[error("{which} does not start at {expected}")]
    WrongStart {
        which: &'static str,
        expected: &'static str,
    },
    #[error("{which} does not end at v0")]
    WrongEnd { which: &'static str },
    #[error("{which} is not a walk: dart {dart} does not continue the previous one")]
    Broken { which: &'static str, dart: Dart },
    #[error("{which} revisits vertex {vertex}")]
    NotSimple { which: &'static str, vertex: usize },
    #[error("p1 and p2 share vertex {0}")]
    Shared(usize),
    #[error("dart {0} out of range")]
    DartOutOfRange(Dart),
    #[error("no pair of disjoint paths to v0; the decoration is not valid")]
    NoPath,
}

/// Two simple paths, `p1` from `v1` to `v0` and `p2` from `v2` to `v0`,
/// meeting only in `v0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CutPath {
    pub p1: Vec<Dart>,
    pub p2: Vec<Dart>,
}

impl CutPath {
    pub fn validate(&self, d: &Decoration) -> Result<(), PathError> {
        let g = d.graph();
        let mut seen = HashSet::new();
        for (which, path, start, start_name) in [
            ("p1", &self.p1, d.v1(), "v1"),
            ("p2", &self.p2, d.v2(), "v2"),
        ] {
            if path.is_empty() {
                return Err(PathError::Empty(which));
            }
            if let Some(&x) = path.iter().find(|&&x| x >= g.dart_count()) {
                return Err(PathError::DartOutOfRange(x));
            }
            if g.vertex_of(path[0]) != start {
                return Err(PathError::WrongStart {
                    which,
                    expected: start_name,
                });
            }
            if g.target(*path.last().unwrap()) != d.v0() {
                return Err(PathError::WrongEnd { which });
            }
            for w in path.windows(2) {
                if g.target(w[0]) != g.vertex_of(w[1]) {
                    return Err(PathError::Broken { which, dart: w[1] });
                }
            }
            let mut own = HashSet::new();
            for &x in path {
                let v = g.vertex_of(x);
                if !own.insert(v) || v == d.v0() {
                    return Err(PathError::NotSimple { which, vertex: v });
                }
                if !seen.insert(v) {
                    return Err(PathError::Shared(v));
                }
            }
        }
        Ok(())
    }

    /// `P1`, `P2`, `P1' = theta(P1)` and `P2' = theta(P2)` as dart lists.
    pub fn dart_sets(&self, d: &Decoration) -> [Vec<Dart>; 4] {
        let g = d.graph();
        [
            self.p1.clone(),
            self.p2.clone(),
            self.p1.iter().map(|&x| g.theta(x)).collect(),
            self.p2.iter().map(|&x| g.theta(x)).collect(),
        ]
    }

    /// Number of edges on the path `v1 -> v0 -> v2`.
    pub fn len(&self) -> usize {
        self.p1.len() + self.p2.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

struct Flow {
    head: Vec<usize>,
    cap: Vec<i32>,
    adj: Vec<Vec<usize>>,
}

impl Flow {
    fn new(n: usize) -> Self {
        Flow {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    fn arc(&mut self, from: usize, to: usize) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(1);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// One breadth-first augmenting step.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut via = vec![usize::MAX; self.adj.len()];
        let mut queue = VecDeque::from([source]);
        let mut reached = vec![false; self.adj.len()];
        reached[source] = true;
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for &a in &self.adj[x] {
                let y = self.head[a];
                if self.cap[a] > 0 && !reached[y] {
                    reached[y] = true;
                    via[y] = a;
                    queue.push_back(y);
                }
            }
        }
        if !reached[sink] {
            return false;
        }
        let mut x = sink;
        while x != source {
            let a = via[x];
            self.cap[a] -= 1;
            self.cap[a ^ 1] += 1;
            x = self.head[a ^ 1];
        }
        true
    }
}

/// Finds a cut path from two vertex-disjoint paths between an extra vertex
/// `w`, joined to `v1` and `v2`, and `v0`.
pub fn find_cut_path(d: &Decoration) -> Result<CutPath, PathError> {
    let g = d.graph();
    let n = g.vertex_count();
    let (v0, v1, v2) = (d.v0(), d.v1(), d.v2());
    // vertex x is split into 2x (in) and 2x+1 (out); w = 2n
    let w = 2 * n;
    let mut flow = Flow::new(2 * n + 1);
    let mut first_dart = std::collections::HashMap::new();
    for x in 0..n {
        if x != v0 {
            flow.arc(2 * x, 2 * x + 1);
        }
    }
    for e in 0..g.dart_count() {
        let (x, y) = (g.vertex_of(e), g.target(e));
        if x != y && x != v0 && first_dart.insert((x, y), e).is_none() {
            flow.arc(2 * x + 1, 2 * y);
        }
    }
    flow.arc(w, 2 * v1);
    flow.arc(w, 2 * v2);
    for _ in 0..2 {
        if !flow.augment(w, 2 * v0) {
            return Err(PathError::NoPath);
        }
    }
    // Follow saturated forward arcs (even indices with capacity used up).
    let walk = |start: usize| -> Vec<Dart> {
        let mut darts = Vec::new();
        let mut x = start;
        while x != v0 {
            let next = flow.adj[2 * x + 1]
                .iter()
                .copied()
                .find(|&a| a % 2 == 0 && flow.cap[a] == 0)
                .expect("flow leaves every used vertex");
            let y = flow.head[next] / 2;
            darts.push(first_dart[&(x, y)]);
            x = y;
        }
        darts
    };
    let p1 = walk(v1);
    let p2 = walk(v2);
    let path = CutPath { p1, p2 };
    path.validate(d)?;
    Ok(path)
}

/// Up to `limit` cut paths by depth-first search, in rotation order.
pub fn enumerate_cut_paths(d: &Decoration, limit: usize) -> Vec<CutPath> {
    let g = d.graph();
    let (v0, v1, v2) = (d.v0(), d.v1(), d.v2());
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }

    // Simple paths from `start` to v0 avoiding `blocked`, reported to `visit`
    // until it returns false.
    fn paths(
        g: &crate::planar_map::PlaneGraph,
        start: usize,
        v0: usize,
        blocked: &mut Vec<bool>,
        stack: &mut Vec<Dart>,
        visit: &mut dyn FnMut(&[Dart]) -> bool,
    ) -> bool {
        let x = if let Some(&last) = stack.last() {
            g.target(last)
        } else {
            start
        };
        if x == v0 {
            return visit(stack);
        }
        blocked[x] = true;
        let mut go_on = true;
        for e in g.rotation(x) {
            let y = g.target(e);
            if y == x || blocked[y] {
                continue;
            }
            stack.push(e);
            go_on = paths(g, start, v0, blocked, stack, visit);
            stack.pop();
            if !go_on {
                break;
            }
        }
        blocked[x] = false;
        go_on
    }

    let n = g.vertex_count();
    let mut blocked = vec![false; n];
    blocked[v2] = true;
    let mut stack = Vec::new();
    paths(g, v1, v0, &mut blocked, &mut stack, &mut |p1: &[Dart]| {
        let mut inner = vec![false; n];
        for &e in p1 {
            inner[g.vertex_of(e)] = true;
        }
        let mut stack2 = Vec::new();
        paths(g, v2, v0, &mut inner, &mut stack2, &mut |p2: &[Dart]| {
            out.push(CutPath {
                p1: p1.to_vec(),
                p2: p2.to_vec(),
            });
            out.len() < limit
        })
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decoration::catalog::{self, CATALOG_NAMES};

    #[test]
    fn identity_has_one_path() {
        let id = catalog::identity();
        let p = find_cut_path(&id).unwrap();
        assert_eq!((p.p1.len(), p.p2.len()), (1, 1));
        let all = enumerate_cut_paths(&id, 10);
        assert_eq!(all, vec![p]);
    }

    #[test]
    fn snub_cut_paths_validate() {
        let s = catalog::snub();
        let [through_b, through_t] = catalog::snub_paths();
        through_b.validate(&s).unwrap();
        through_t.validate(&s).unwrap();
        let found = find_cut_path(&s).unwrap();
        found.validate(&s).unwrap();
        let all = enumerate_cut_paths(&s, 10);
        assert!(all.len() >= 2);
        assert!(all.iter().all(|p| p.validate(&s).is_ok()));
    }

    #[test]
    fn every_catalog_entry_has_a_path() {
        for name in CATALOG_NAMES {
            let d = catalog::catalog(name).unwrap();
            find_cut_path(&d).unwrap().validate(&d).unwrap();
            let all = enumerate_cut_paths(&d, 5);
            assert!(!all.is_empty());
            let distinct: HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
        }
    }

    #[test]
    fn validation_catches_bad_paths() {
        let s = catalog::snub();
        let [first, _] = catalog::snub_paths();
        let mut broken = first.clone();
        broken.p1.remove(1);
        assert!(matches!(broken.validate(&s), Err(PathError::Broken { .. })));
        let swapped = CutPath {
            p1: first.p2.clone(),
            p2: first.p1.clone(),
        };
        assert!(matches!(
            swapped.validate(&s),
            Err(PathError::WrongStart { .. })
        ));
    }
}
