//! Applying a decoration to a plane graph.
//!
//! The result lives on pairs `(e, c)` of a decoration dart `e` and a double
//! chamber `c` of the input graph, stored at index `e * m + c` where `m` is
//! the number of darts of the input.

use thiserror::Error;

use crate::chamber::{base_graph, ChamberError, ChamberSystem};
use crate::decoration::{find_cut_path, CutPath, Decoration, PathError};
use crate::planar_map::{Dart, MapError, PlaneGraph, RotationSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApplyError {
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("internal error: result violates {clause}")]
    Invariant { clause: String },
    #[error(transparent)]
    Extract(#[from] ChamberError),
}

/// Which of the four path sets a decoration dart belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Crossing {
    None,
    S1,
    S2,
    S2Inv,
}

/// `sigma_P`, `theta_P` and the dart types of the glued chamber system over
/// an arbitrary base map.
pub(crate) fn glue(
    d: &Decoration,
    path: &CutPath,
    base: &RotationSystem,
) -> (Vec<Dart>, Vec<Dart>, Vec<u8>) {
    let dg = d.graph();
    let m = base.dart_count();
    let mut crossing = vec![Crossing::None; dg.dart_count()];
    let [p1, p2, p1r, p2r] = path.dart_sets(d);
    // s1 is an involution, so P1 and P1' both use it
    for &e in p1.iter().chain(&p1r) {
        crossing[e] = Crossing::S1;
    }
    for &e in &p2 {
        crossing[e] = Crossing::S2;
    }
    for &e in &p2r {
        crossing[e] = Crossing::S2Inv;
    }
    let step = |e: Dart, c: Dart| match crossing[e] {
        Crossing::None => c,
        Crossing::S1 => base.theta(c),
        Crossing::S2 => base.theta(base.sigma_inv(c)),
        Crossing::S2Inv => base.sigma(base.theta(c)),
    };
    let total = dg.dart_count() * m;
    let mut sigma = Vec::with_capacity(total);
    let mut theta = Vec::with_capacity(total);
    let mut types = Vec::with_capacity(total);
    for e in 0..dg.dart_count() {
        for c in 0..m {
            let s = step(e, c);
            sigma.push(dg.sigma(e) * m + s);
            theta.push(dg.theta(e) * m + s);
            types.push(d.dart_type(e));
        }
    }
    (sigma, theta, types)
}

/// The chamber system of the result of applying a decoration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppliedChamberSystem {
    pub chambers: ChamberSystem,
    base_darts: usize,
}

impl AppliedChamberSystem {
    /// The pair `(e, c)` stored at dart `x`.
    pub fn pair(&self, x: Dart) -> (Dart, Dart) {
        (x / self.base_darts, x % self.base_darts)
    }

    pub fn dart_count(&self) -> usize {
        self.chambers.graph().dart_count()
    }
}

fn invariant(clause: impl Into<String>) -> ApplyError {
    ApplyError::Invariant {
        clause: clause.into(),
    }
}

/// Glues copies of the decoration into the double chambers of `g` and checks
/// that the result is a spherical chamber system.
pub fn apply_with_path(
    d: &Decoration,
    path: &CutPath,
    g: &PlaneGraph,
) -> Result<AppliedChamberSystem, ApplyError> {
    path.validate(d)?;
    let (sigma, theta, types) = glue(d, path, g);
    let map = RotationSystem::new(sigma, theta).map_err(|e| match e {
        MapError::ThetaNotInvolution(x) => invariant(format!("theta involution at dart {x}")),
        MapError::Disconnected(k) => invariant(format!("connectedness ({k} components)")),
        other => invariant(other.to_string()),
    })?;
    let graph = PlaneGraph::from_map(map).map_err(|e| invariant(format!("sphericity: {e}")))?;
    let m = g.dart_count();
    let vertex_type: Vec<u8> = (0..graph.vertex_count())
        .map(|v| d.vertex_type(d.graph().vertex_of(graph.vertex_dart(v) / m)))
        .collect();
    let chambers =
        ChamberSystem::new(graph, types, vertex_type).map_err(|e| invariant(e.to_string()))?;
    Ok(AppliedChamberSystem {
        chambers,
        base_darts: m,
    })
}

/// The plane graph `O(G)` produced by the operation of `d`.
pub fn apply(d: &Decoration, g: &PlaneGraph) -> Result<PlaneGraph, ApplyError> {
    let path = find_cut_path(d)?;
    Ok(base_graph(&apply_with_path(d, &path, g)?.chambers)?)
}

/// Whether all cut paths give isomorphic typed chamber systems.
pub fn verify_path_independence(
    d: &Decoration,
    g: &PlaneGraph,
    paths: &[CutPath],
) -> Result<bool, ApplyError> {
    let mut first = None;
    for path in paths {
        let form = apply_with_path(d, path, g)?.chambers.canonical_form();
        match &first {
            None => first = Some(form),
            Some(f) if *f != form => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryReport {
    pub aut_input: usize,
    pub aut_output: usize,
    pub divides: bool,
}

/// Orientation-preserving automorphism counts of `g` and `O(g)`.
pub fn symmetry_preservation_report(
    d: &Decoration,
    g: &PlaneGraph,
) -> Result<SymmetryReport, ApplyError> {
    let out = apply(d, g)?;
    let (aut_input, aut_output) = (g.automorphism_count(), out.automorphism_count());
    Ok(SymmetryReport {
        aut_input,
        aut_output,
        divides: aut_output % aut_input == 0,
    })
}
