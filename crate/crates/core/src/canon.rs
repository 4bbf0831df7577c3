//! Canonical forms of rotation systems by rooted breadth-first traversal.
//!
//! From a root dart, darts are labelled in discovery order, visiting
//! `sigma(d)` before `theta(d)`. The code lists `[label sigma(d), label
//! theta(d), extra(d)]` for each dart in label order. The canonical form is
//! the least code over all roots; roots attaining it are exactly the images
//! of one dart under the orientation-preserving automorphisms.

use std::cmp::Ordering;

use crate::planar_map::{Dart, RotationSystem};

const UNSEEN: u32 = u32::MAX;

struct Traversal<'a> {
    map: &'a RotationSystem,
    extra: Option<&'a [u32]>,
    label: Vec<u32>,
    order: Vec<Dart>,
}

impl<'a> Traversal<'a> {
    fn new(map: &'a RotationSystem, extra: Option<&'a [u32]>) -> Self {
        let m = map.dart_count();
        Traversal {
            map,
            extra,
            label: vec![UNSEEN; m],
            order: Vec::with_capacity(m),
        }
    }

    fn visit(&mut self, d: Dart) -> u32 {
        if self.label[d] == UNSEEN {
            self.label[d] = self.order.len() as u32;
            self.order.push(d);
        }
        self.label[d]
    }

    /// Runs from `root`, comparing against `best` as the code is produced.
    /// Stops early once the code is known to be larger; otherwise the full
    /// code is left in `out`.
    fn run(&mut self, root: Dart, best: Option<&[u32]>, out: &mut Vec<u32>) -> Ordering {
        for &d in &self.order {
            self.label[d] = UNSEEN;
        }
        self.order.clear();
        out.clear();
        self.visit(root);
        let mut state = if best.is_some() {
            Ordering::Equal
        } else {
            Ordering::Less
        };
        let mut i = 0;
        while i < self.order.len() {
            let d = self.order[i];
            let s = self.visit(self.map.sigma(d));
            let t = self.visit(self.map.theta(d));
            let x = self.extra.map_or(0, |e| e[d]);
            for (j, v) in [s, t, x].into_iter().enumerate() {
                if state == Ordering::Equal {
                    state = v.cmp(&best.unwrap()[3 * i + j]);
                    if state == Ordering::Greater {
                        return state;
                    }
                }
                out.push(v);
            }
            i += 1;
        }
        state
    }
}

/// Least code over all roots together with the roots attaining it.
fn minimal(map: &RotationSystem, extra: Option<&[u32]>) -> (Vec<u32>, Vec<Dart>) {
    let mut traversal = Traversal::new(map, extra);
    let mut best: Vec<u32> = Vec::new();
    let mut roots = Vec::new();
    let mut scratch = Vec::new();
    for root in 0..map.dart_count() {
        let cmp = traversal.run(
            root,
            if roots.is_empty() { None } else { Some(&best) },
            &mut scratch,
        );
        match cmp {
            Ordering::Less => {
                std::mem::swap(&mut best, &mut scratch);
                roots.clear();
                roots.push(root);
            }
            Ordering::Equal => roots.push(root),
            Ordering::Greater => {}
        }
    }
    (best, roots)
}

fn encode(m: usize, code: &[u32]) -> Vec<u8> {
    let mut bytes = Vec::with_capacity(4 * (code.len() + 1));
    bytes.extend_from_slice(&(m as u32).to_be_bytes());
    for v in code {
        bytes.extend_from_slice(&v.to_be_bytes());
    }
    bytes
}

/// Canonical byte string; `extra` attaches a label to each dart.
pub fn canonical_form(map: &RotationSystem, extra: Option<&[u32]>) -> Vec<u8> {
    let (code, _) = minimal(map, extra);
    encode(map.dart_count(), &code)
}

/// Number of label-preserving orientation-preserving automorphisms.
pub fn automorphism_count(map: &RotationSystem, extra: Option<&[u32]>) -> usize {
    minimal(map, extra).1.len()
}

/// `perm[old] = new` for the canonical labelling from the first minimal root.
pub fn canonical_permutation(map: &RotationSystem, extra: Option<&[u32]>) -> Vec<Dart> {
    let (_, roots) = minimal(map, extra);
    let mut traversal = Traversal::new(map, extra);
    let mut scratch = Vec::new();
    traversal.run(roots[0], None, &mut scratch);
    traversal.label.iter().map(|&l| l as usize).collect()
}
