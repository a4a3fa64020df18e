use edgewalk::graph::{generate, read_edge_list, write_edge_list};
use edgewalk::{Family, Graph, GraphError};
use proptest::prelude::*;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn build_examples() {
    let t = Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
    assert_eq!((t.vertex_count(), t.edge_count(), t.max_degree()), (3, 3, 2));
    assert_eq!(Graph::new(2, vec![(0, 0)]), Err(GraphError::SelfLoop(0)));
    assert!(matches!(Graph::new(4, vec![(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(..))));
    assert!(matches!(Graph::new(2, vec![(0, 2)]), Err(GraphError::VertexOutOfRange(0, 2, 2))));
}

#[test]
fn generator_examples() {
    let p = generate(&Family::Kneser(5, 2)).unwrap();
    assert_eq!((p.vertex_count(), p.edge_count(), p.max_degree()), (10, 15, 3));
    let k4 = generate(&Family::Complete(4)).unwrap();
    assert_eq!((k4.edge_count(), k4.max_degree()), (6, 3));
    let k33 = generate(&Family::CompleteBipartite(3, 3)).unwrap();
    assert_eq!((k33.edge_count(), k33.max_degree()), (9, 3));
    assert!(generate(&Family::Kneser(3, 2)).is_err());
}

#[test]
fn kneser_matches_subset_oracle() {
    for (n, k) in [(5, 2), (6, 2), (7, 3), (6, 3), (4, 1)] {
        let g = generate(&Family::Kneser(n, k)).unwrap();
        // k-subsets as sorted vectors, lexicographic
        let mut subsets: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..k {
            subsets = subsets
                .into_iter()
                .flat_map(|s| {
                    let lo = s.last().map_or(0, |&x| x + 1);
                    (lo..n).map(move |x| {
                        let mut t = s.clone();
                        t.push(x);
                        t
                    })
                })
                .collect();
        }
        assert_eq!(g.vertex_count(), binomial(n, k));
        for (i, a) in subsets.iter().enumerate() {
            assert_eq!(g.degree(i), binomial(n - k, k));
            for (j, b) in subsets.iter().enumerate() {
                let disjoint = a.iter().all(|x| !b.contains(x));
                assert_eq!(g.edge_between(i, j).is_some(), i != j && disjoint);
            }
        }
    }
}

#[test]
fn handshake_for_every_family() {
    let families = [
        Family::Complete(7),
        Family::CompleteBipartite(3, 5),
        Family::Kneser(6, 2),
        Family::Path(9),
        Family::Cycle(8),
        Family::Random { n: 25, p: 0.3, seed: 4 },
        Family::Complete(0),
        Family::Path(1),
    ];
    for f in families {
        let g = generate(&f).unwrap();
        let total: usize = (0..g.vertex_count()).map(|v| g.incident(v).len()).sum();
        assert_eq!(total, 2 * g.edge_count(), "{f}");
        let max = (0..g.vertex_count()).map(|v| g.degree(v)).max().unwrap_or(0);
        assert_eq!(g.max_degree(), max, "{f}");
        for e in 0..g.edge_count() {
            let (u, v) = g.endpoints(e);
            assert_eq!(g.incident(u).iter().filter(|&&(id, w)| id == e && w == v).count(), 1);
            assert_eq!(g.incident(v).iter().filter(|&&(id, w)| id == e && w == u).count(), 1);
        }
    }
}

#[test]
fn generators_are_deterministic() {
    let f = Family::Random { n: 30, p: 0.2, seed: 11 };
    assert_eq!(generate(&f).unwrap(), generate(&f).unwrap());
    let other = Family::Random { n: 30, p: 0.2, seed: 12 };
    assert_ne!(generate(&f).unwrap(), generate(&other).unwrap());
}

#[test]
fn family_specs_parse_and_print() {
    for s in ["complete:4", "complete_bipartite:2,3", "kneser:5,2", "path:3", "cycle:5", "random:20,0.3,7"] {
        let f: Family = s.parse().unwrap();
        assert_eq!(f.to_string(), s);
    }
    for bad in ["complete", "kneser:5", "path:x", "torus:3", "random:5,2"] {
        assert!(bad.parse::<Family>().is_err(), "{bad}");
    }
}

#[test]
fn edge_list_examples() {
    let p = read_edge_list("3\n0 1\n1 2\n").unwrap();
    assert_eq!(p, generate(&Family::Path(3)).unwrap());
    let k3 = generate(&Family::Complete(3)).unwrap();
    assert_eq!(write_edge_list(&k3), "3\n0 1\n0 2\n1 2\n");
    match read_edge_list("2\n0 2\n") {
        Err(GraphError::Parse { line, msg }) => {
            assert_eq!(line, 2);
            assert!(msg.contains("out of range"));
        }
        other => panic!("expected a parse error, got {other:?}"),
    }
    assert!(matches!(read_edge_list("3\n0 1 2\n"), Err(GraphError::Parse { line: 2, .. })));
    assert!(matches!(read_edge_list(""), Err(GraphError::Parse { .. })));
}

#[test]
fn edge_list_round_trip_on_random_graphs() {
    for seed in 0..100u64 {
        let n = 1 + (seed as usize * 7) % 40;
        let p = 0.05 + (seed % 9) as f64 * 0.1;
        let g = generate(&Family::Random { n, p, seed }).unwrap();
        assert_eq!(read_edge_list(&write_edge_list(&g)).unwrap(), g, "seed {seed}");
    }
}

proptest! {
    #[test]
    fn round_trip_preserves_edge_order(
        n in 2usize..15,
        pairs in prop::collection::vec((0usize..15, 0usize..15), 0..40),
    ) {
        let mut seen = std::collections::HashSet::new();
        let edges: Vec<(usize, usize)> = pairs
            .into_iter()
            .filter(|&(u, v)| u < n && v < n && u != v && seen.insert((u.min(v), u.max(v))))
            .collect();
        let g = Graph::new(n, edges).unwrap();
        prop_assert_eq!(read_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}
