mod common;

use std::sync::Arc;

use common::{conflicting_pairs, petersen_frozen, star};
use edgewalk::graph::generate;
use edgewalk::rng::seeded;
use edgewalk::{ColoringDoc, ColoringError, EdgeColoring, Family, Graph};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn random_coloring(seed: u64) -> EdgeColoring {
    let mut rng = seeded(seed);
    let n = rng.random_range(2..16);
    let p = rng.random_range(0.1..0.7);
    let g = Arc::new(generate(&Family::Random { n, p, seed }).unwrap());
    let k = rng.random_range(1..6);
    EdgeColoring::random(g, k, &mut rng).unwrap()
}

#[test]
fn star_potentials() {
    assert_eq!(star(5, &[3, 1, 4, 2]).potential(), 0);
    assert_eq!(star(5, &[3, 3, 4, 2]).potential(), 1);
    assert_eq!(star(5, &[3, 3, 4, 4]).potential(), 2);
    assert_eq!(star(5, &[3, 3, 3, 3]).potential(), 6);
}

#[test]
fn monochromatic_triangle() {
    let g = Arc::new(generate(&Family::Complete(3)).unwrap());
    let c = EdgeColoring::monochromatic(g, 3, 1).unwrap();
    assert_eq!(c.potential(), 3);
    assert_eq!(conflicting_pairs(&c), 3);
    assert!(!c.is_proper());
    for e in 0..3 {
        for beta in [0, 2] {
            assert_eq!(c.potential_delta(e, beta).unwrap(), -2);
        }
    }
    let comps = c.monochromatic_components(1);
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[0].edges, vec![0, 1, 2]);
    let (color, comp) = c.find_large_component().unwrap();
    assert_eq!((color, comp.edges.len()), (1, 3));
    for v in 0..3 {
        assert_eq!(c.missing_colors(v), vec![0, 2]);
    }
}

#[test]
fn delta_examples() {
    let g = Arc::new(generate(&Family::Path(3)).unwrap());
    let c = EdgeColoring::new(g, 3, vec![0, 1]).unwrap();
    assert_eq!(c.potential_delta(0, 2).unwrap(), 0);
    assert!(matches!(c.potential_delta(0, 0), Err(ColoringError::SameColor { .. })));

    // uv colored 0 with a second 0-edge at each end; color 1 once at v
    let g = Arc::new(Graph::new(5, vec![(0, 1), (0, 2), (1, 3), (1, 4)]).unwrap());
    let c = EdgeColoring::new(g, 2, vec![0, 0, 0, 1]).unwrap();
    assert!(c.potential_delta(0, 1).unwrap() <= -1);
}

#[test]
fn apply_then_inverse_restores_state() {
    for seed in 0..50 {
        let mut c = random_coloring(seed);
        if c.k() < 2 || c.graph().edge_count() == 0 {
            continue;
        }
        let before = c.clone();
        let old = c.color(0);
        let to = (old + 1) % c.k();
        let step = c.apply_recoloring(0, to).unwrap();
        assert_eq!((step.edge, step.from, step.to), (0, old, to));
        assert_eq!(c.potential(), c.potential_from_scratch());
        c.apply_recoloring(0, old).unwrap();
        assert_eq!(c, before);
        assert_eq!(c.color_degrees(0), before.color_degrees(0));
        assert_eq!(c.potential(), before.potential());
    }
}

#[test]
fn many_random_applies_keep_the_cache_exact() {
    let mut rng = seeded(99);
    let mut c = random_coloring(7);
    while c.k() < 2 || c.graph().edge_count() == 0 {
        c = random_coloring(rng.random());
    }
    c.set_audit(true);
    let m = c.graph().edge_count();
    for _ in 0..100_000 {
        let e = rng.random_range(0..m);
        let beta = (c.color(e) + rng.random_range(1..c.k())) % c.k();
        // audit mode panics on any drift from the scratch value
        c.apply_recoloring(e, beta).unwrap();
    }
    assert_eq!(c.potential(), c.potential_from_scratch());
}

#[test]
fn is_proper_examples() {
    let p = petersen_frozen();
    assert!(p.is_proper());
    assert_eq!(conflicting_pairs(&p), 0);
    let g = Arc::new(generate(&Family::Path(2)).unwrap());
    for col in 0..3 {
        assert!(EdgeColoring::monochromatic(g.clone(), 3, col).unwrap().is_proper());
    }
}

#[test]
fn component_examples() {
    let p = petersen_frozen();
    for a in 0..5 {
        assert!(p.monochromatic_components(a).iter().all(|c| c.edges.len() == 1));
    }
    let s = star(5, &[2, 2, 2, 2]);
    let comps = s.monochromatic_components(2);
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[0].edges.len(), 4);
    assert!(s.monochromatic_components(0).is_empty());

    // path of three 0-edges is large
    let g = Arc::new(generate(&Family::Path(4)).unwrap());
    let c = EdgeColoring::monochromatic(g, 2, 0).unwrap();
    assert_eq!(c.find_large_component().unwrap().1.edges, vec![0, 1, 2]);
    let g = Arc::new(generate(&Family::Path(4)).unwrap());
    let c = EdgeColoring::new(g, 2, vec![0, 0, 1]).unwrap();
    assert!(c.find_large_component().is_none());
}

#[test]
fn cherry_examples() {
    assert!(petersen_frozen().cherries().is_empty());
    let s = star(5, &[3, 3, 4, 2]);
    let ch = s.cherries();
    assert_eq!(ch.len(), 1);
    assert_eq!((ch[0].center, ch[0].color, ch[0].arms), (0, 3, (0, 1)));
    assert_eq!(s.cherries_at(0), ch);
    assert!(s.cherries_at(1).is_empty());
}

#[test]
fn missing_color_examples() {
    let g = Arc::new(Graph::new(3, vec![(0, 1)]).unwrap());
    let c = EdgeColoring::new(g, 4, vec![2]).unwrap();
    assert_eq!(c.missing_colors(2), vec![0, 1, 2, 3]);
    assert_eq!(c.missing_colors(0), vec![0, 1, 3]);
    assert_eq!(star(5, &[0, 1, 2, 3]).missing_colors(0), vec![4]);
}

/// Cherry colorings with `k = Δ + 1` from random starts, via the
/// deterministic driver's large-component reduction.
fn cherry_colorings() -> impl Iterator<Item = EdgeColoring> {
    (0..300u64).filter_map(|seed| {
        let mut rng = seeded(seed);
        let n = rng.random_range(3..14);
        let g = Arc::new(generate(&Family::Random { n, p: 0.4, seed }).unwrap());
        let k = g.max_degree() + 1;
        let mut c = EdgeColoring::random(g, k, &mut rng).ok()?;
        let mut s = edgewalk::vizing::Session::new(&mut c);
        while s.coloring().has_large_component() {
            s.decrease_potential_once().ok()?;
        }
        Some(c)
    })
}

#[test]
fn cherries_leave_enough_missing_colors() {
    let mut checked = 0;
    for c in cherry_colorings() {
        assert!(c.is_cherry_coloring());
        for v in 0..c.graph().vertex_count() {
            let m = c.cherries_at(v).len();
            assert!(c.missing_colors(v).len() > m, "vertex {v}");
            checked += 1;
        }
    }
    assert!(checked > 1000);
}

#[test]
fn bichromatic_components_of_proper_colorings_are_paths_or_even_cycles() {
    let p = petersen_frozen();
    for v in 0..10 {
        for a in 0..5 {
            for b in a + 1..5 {
                let h = p.bichromatic_component(v, a, b);
                assert!(h.degrees.iter().all(|&d| d <= 2));
                let cycle = h.degrees.iter().all(|&d| d == 2);
                if cycle {
                    assert_eq!(h.edges.len() % 2, 0);
                    assert_eq!(h.edges.len(), h.vertices.len());
                } else {
                    assert_eq!(h.edges.len() + 1, h.vertices.len());
                }
            }
        }
    }
}

#[test]
fn bichromatic_degrees_in_cherry_colorings() {
    for c in cherry_colorings().take(100) {
        let k = c.k();
        for v in 0..c.graph().vertex_count() {
            for a in 0..k {
                for b in a + 1..k {
                    let h = c.bichromatic_component(v, a, b);
                    for (&x, &d) in h.vertices.iter().zip(&h.degrees) {
                        assert!(d <= 4);
                        assert!(c.color_degree(x, a) <= 2 && c.color_degree(x, b) <= 2);
                        assert_eq!(d, c.color_degree(x, a) + c.color_degree(x, b));
                    }
                }
            }
        }
    }
}

#[test]
fn proper_iff_no_cherry_and_no_large_component() {
    for seed in 0..300 {
        let c = random_coloring(seed);
        let singletons = (0..c.k()).all(|a| c.monochromatic_components(a).iter().all(|x| x.edges.len() <= 1));
        let structural = c.cherries().is_empty() && c.find_large_component().is_none();
        assert_eq!(c.is_proper(), singletons);
        assert_eq!(c.is_proper(), structural);
        assert_eq!(c.is_proper(), conflicting_pairs(&c) == 0);
    }
}

#[test]
fn document_round_trip() {
    let p = petersen_frozen();
    let doc = ColoringDoc::from(&p);
    let back = ColoringDoc::from_json(&doc.to_json()).unwrap().into_coloring().unwrap();
    assert_eq!(back, p);
    assert!(ColoringDoc::from_json("{\"n\": 2}").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn delta_matches_scratch_recomputation(seed in any::<u64>(), pick in any::<u64>()) {
        let c = random_coloring(seed);
        let m = c.graph().edge_count();
        prop_assume!(m > 0 && c.k() > 1);
        let e = (pick as usize) % m;
        let beta = (c.color(e) + 1 + (pick >> 32) as usize % (c.k() - 1)) % c.k();
        let delta = c.potential_delta(e, beta).unwrap();
        let mut after = c.clone();
        after.apply_recoloring(e, beta).unwrap();
        prop_assert_eq!(delta, conflicting_pairs(&after) as i64 - conflicting_pairs(&c) as i64);
        prop_assert_eq!(after.potential(), after.potential_from_scratch());
    }

    #[test]
    fn rewrite_identity(seed in any::<u64>()) {
        let c = random_coloring(seed);
        let squares: u64 = (0..c.graph().vertex_count())
            .flat_map(|v| c.color_degrees(v).iter().map(|&d| (d as u64) * (d as u64)))
            .sum();
        prop_assert_eq!(2 * c.potential(), squares - 2 * c.graph().edge_count() as u64);
    }

    #[test]
    fn color_permutation_equivariance(seed in any::<u64>()) {
        let c = random_coloring(seed);
        let mut perm: Vec<usize> = (0..c.k()).collect();
        perm.shuffle(&mut seeded(seed ^ 1));
        let pc = c.permuted(&perm).unwrap();
        prop_assert_eq!(pc.potential(), c.potential());
        let mapped: std::collections::BTreeSet<_> = c
            .cherries()
            .into_iter()
            .map(|ch| (ch.center, perm[ch.color], ch.arms))
            .collect();
        let direct: std::collections::BTreeSet<_> =
            pc.cherries().into_iter().map(|ch| (ch.center, ch.color, ch.arms)).collect();
        prop_assert_eq!(mapped, direct);
    }
}
