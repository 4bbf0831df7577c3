//! Small plane graphs used throughout the tests, examples and the CLI.

use crate::planar_map::PlaneGraph;

fn faces(list: &[&[usize]]) -> PlaneGraph {
    PlaneGraph::from_faces(list).expect("fixture faces are valid")
}

pub fn triangle() -> PlaneGraph {
    faces(&[&[0, 1, 2], &[0, 2, 1]])
}

/// The 4-cycle.
pub fn cycle4() -> PlaneGraph {
    faces(&[&[0, 1, 2, 3], &[0, 3, 2, 1]])
}

/// A 4-cycle with the chord 0-2.
pub fn square_with_diagonal() -> PlaneGraph {
    faces(&[&[0, 1, 2], &[0, 2, 3], &[0, 3, 2, 1]])
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> PlaneGraph {
    faces(&[&[0, 1, 2], &[0, 3, 4], &[0, 2, 1, 0, 4, 3]])
}

pub fn tetrahedron() -> PlaneGraph {
    faces(&[&[1, 0, 3], &[2, 0, 1], &[2, 1, 3], &[3, 0, 2]])
}

pub fn cube() -> PlaneGraph {
    faces(&[
        &[1, 0, 4, 5],
        &[2, 0, 1, 3],
        &[3, 1, 5, 7],
        &[4, 0, 2, 6],
        &[5, 4, 6, 7],
        &[6, 2, 3, 7],
    ])
}

pub fn octahedron() -> PlaneGraph {
    faces(&[
        &[2, 0, 5],
        &[2, 1, 4],
        &[3, 0, 4],
        &[3, 1, 5],
        &[4, 0, 2],
        &[4, 1, 3],
        &[5, 0, 3],
        &[5, 1, 2],
    ])
}

pub fn dodecahedron() -> PlaneGraph {
    faces(&[
        &[3, 13, 2, 16, 17],
        &[3, 17, 1, 9, 11],
        &[5, 9, 1, 12, 14],
        &[5, 14, 4, 18, 19],
        &[6, 10, 2, 13, 15],
        &[6, 18, 4, 8, 10],
        &[10, 8, 0, 16, 2],
        &[11, 9, 5, 19, 7],
        &[14, 12, 0, 8, 4],
        &[15, 13, 3, 11, 7],
        &[17, 16, 0, 12, 1],
        &[19, 18, 6, 15, 7],
    ])
}

pub fn pentagonal_prism() -> PlaneGraph {
    faces(&[
        &[2, 1, 0, 4, 3],
        &[3, 8, 7, 2],
        &[4, 0, 5, 9],
        &[5, 0, 1, 6],
        &[6, 1, 2, 7],
        &[8, 9, 5, 6, 7],
        &[9, 8, 3, 4],
    ])
}

pub fn icosahedron() -> PlaneGraph {
    dodecahedron().dual()
}

/// Cuts every vertex of `g` off: dart `d` becomes three darts `3d..3d+2`
/// around a new vertex near the source of `d`.
pub fn truncate(g: &PlaneGraph) -> PlaneGraph {
    let m = g.dart_count();
    let mut sigma = vec![0; 3 * m];
    let mut theta = vec![0; 3 * m];
    for d in 0..m {
        for j in 0..3 {
            sigma[3 * d + j] = 3 * d + (j + 1) % 3;
        }
        theta[3 * d] = 3 * g.theta(d);
        theta[3 * d + 1] = 3 * g.sigma(d) + 2;
        theta[3 * d + 2] = 3 * g.sigma_inv(d) + 1;
    }
    PlaneGraph::from_permutations(sigma, theta).expect("truncation of a plane graph")
}

pub fn truncated_icosahedron() -> PlaneGraph {
    truncate(&icosahedron())
}

/// Every named graph of the test corpus.
pub fn corpus() -> Vec<(&'static str, PlaneGraph)> {
    vec![
        ("triangle", triangle()),
        ("tetrahedron", tetrahedron()),
        ("cube", cube()),
        ("octahedron", octahedron()),
        ("dodecahedron", dodecahedron()),
        ("pentagonal-prism", pentagonal_prism()),
        ("bowtie", bowtie()),
        ("c4", cycle4()),
        ("square-with-diagonal", square_with_diagonal()),
    ]
}

/// Looks up a corpus graph, or one of the extra polyhedra, by name.
pub fn by_name(name: &str) -> Option<PlaneGraph> {
    match name {
        "icosahedron" => Some(icosahedron()),
        "truncated-icosahedron" => Some(truncated_icosahedron()),
        _ => corpus()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(_, g)| g),
    }
}
