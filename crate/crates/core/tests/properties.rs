use proptest::prelude::*;

use lopsp::apply::apply;
use lopsp::chamber::{barycentric, base_graph};
use lopsp::decoration::{catalog, goldberg, Decoration, CATALOG_NAMES};
use lopsp::{fixtures, io, PlaneGraph};

fn decoration() -> impl Strategy<Value = Decoration> {
    prop_oneof![
        (0..CATALOG_NAMES.len()).prop_map(|i| catalog::catalog(CATALOG_NAMES[i]).unwrap()),
        (0..3u32, 0..3u32)
            .prop_filter("not both zero", |&(a, b)| a + b > 0)
            .prop_map(|(a, b)| goldberg(a, b).unwrap()),
    ]
}

fn shuffled(g: PlaneGraph) -> impl Strategy<Value = PlaneGraph> {
    let m = g.dart_count();
    Just((0..m).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(move |perm| g.relabel(&perm))
}

/// A corpus graph, optionally with one catalog operation applied.
fn base_graph_strategy() -> impl Strategy<Value = PlaneGraph> {
    (
        0..fixtures::corpus().len(),
        proptest::option::of(0..CATALOG_NAMES.len()),
    )
        .prop_map(|(i, op)| {
            let g = fixtures::corpus().swap_remove(i).1;
            match op {
                Some(k) => apply(&catalog::catalog(CATALOG_NAMES[k]).unwrap(), &g).unwrap(),
                None => g,
            }
        })
}

/// A graph under a random dart numbering.
fn plane_graph() -> impl Strategy<Value = PlaneGraph> {
    base_graph_strategy().prop_flat_map(shuffled)
}

/// Two random numberings of the same graph.
fn renumbered_pair() -> impl Strategy<Value = (PlaneGraph, PlaneGraph)> {
    base_graph_strategy().prop_flat_map(|g| (shuffled(g.clone()), shuffled(g)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn canonical_form_ignores_numbering((g, h) in renumbered_pair()) {
        prop_assert_eq!(g.canonical_form(), h.canonical_form());
        let (cg, ch) = (g.canonical_relabel(), h.canonical_relabel());
        prop_assert_eq!(cg.sigma_slice(), ch.sigma_slice());
        prop_assert_eq!(g.automorphism_count(), h.automorphism_count());
    }

    #[test]
    fn automorphisms_divide_darts(g in plane_graph()) {
        let a = g.automorphism_count();
        prop_assert!(a >= 1);
        prop_assert_eq!(g.dart_count() % a, 0);
    }

    #[test]
    fn mirror_is_an_involution(g in plane_graph()) {
        let back = g.mirror().mirror();
        let mirror = g.mirror();
        prop_assert_eq!(back.sigma_slice(), g.sigma_slice());
        prop_assert_eq!(mirror.counts(), g.counts());
    }

    #[test]
    fn formats_round_trip(g in plane_graph()) {
        let text = io::write_graph(&g);
        let back = io::read_graphs(&text).unwrap();
        prop_assert!(back[0].is_isomorphic(&g));
        prop_assert_eq!(io::write_graph(&back[0]), text);
        if io::is_simple(&g) && g.vertex_count() <= 255 {
            let bytes = io::write_planar_code(std::slice::from_ref(&g)).unwrap();
            let back = io::read_planar_code(&bytes).unwrap();
            prop_assert!(back[0].is_isomorphic(&g));
            prop_assert_eq!(io::write_planar_code(&back).unwrap(), bytes);
        }
    }

    #[test]
    fn barycentric_round_trip(g in plane_graph()) {
        prop_assert!(base_graph(&barycentric(&g)).unwrap().is_isomorphic(&g));
    }

    #[test]
    fn decoration_format_round_trip((d, perm) in decoration().prop_flat_map(|d| {
        let m = d.graph().dart_count();
        (Just(d), Just((0..m).collect::<Vec<_>>()).prop_shuffle())
    })) {
        let moved = d.relabel(&perm);
        let text = io::write_decoration(&d);
        prop_assert_eq!(io::write_decoration(&moved), text.clone());
        prop_assert!(io::read_decoration(&text).unwrap().is_isomorphic(&d));
    }

    #[test]
    fn application_laws(d in decoration(), i in 0..5usize) {
        let g = vec![fixtures::tetrahedron(), fixtures::cube(), fixtures::octahedron(), fixtures::pentagonal_prism(), fixtures::cycle4()]
            .swap_remove(i);
        let out = apply(&d, &g).unwrap();
        prop_assert_eq!(out.edge_count(), g.edge_count() * d.inflation_factor());
        prop_assert_eq!(out.automorphism_count() % g.automorphism_count(), 0);
        let mirrored = apply(&d.mirror(), &g.mirror()).unwrap();
        prop_assert!(mirrored.is_isomorphic(&out.mirror()));
    }
}
