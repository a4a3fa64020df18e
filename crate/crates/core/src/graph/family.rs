use std::fmt;
use std::str::FromStr;

use rand::Rng;

use super::{Graph, GraphError};
use crate::rng::seeded;

/// Named graph families with deterministic vertex and edge ordering.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Kneser graph: `k`-subsets of `0..n`, adjacent iff disjoint.
    Kneser(usize, usize),
    Path(usize),
    Cycle(usize),
    /// Erdős–Rényi `G(n, p)` driven by the crate RNG seeded with `seed`.
    Random { n: usize, p: f64, seed: u64 },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            Family::Kneser(n, k) => write!(f, "kneser:{n},{k}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Random { n, p, seed } => write!(f, "random:{n},{p},{seed}"),
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    /// Parses `name:arg,arg,...`, e.g. `kneser:5,2` or `random:20,0.3,7`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::InvalidFamily(format!("cannot parse family spec {s:?}"));
        let (name, args) = s.split_once(':').ok_or_else(bad)?;
        let args: Vec<&str> = args.split(',').map(str::trim).collect();
        let int = |i: usize| -> Result<usize, GraphError> {
            args.get(i).and_then(|a| a.parse().ok()).ok_or_else(bad)
        };
        let arity = |want: usize| if args.len() == want { Ok(()) } else { Err(bad()) };
        match name.trim() {
            "complete" => arity(1).and(Ok(Family::Complete(int(0)?))),
            "complete_bipartite" => arity(2).and(Ok(Family::CompleteBipartite(int(0)?, int(1)?))),
            "kneser" => arity(2).and(Ok(Family::Kneser(int(0)?, int(1)?))),
            "path" => arity(1).and(Ok(Family::Path(int(0)?))),
            "cycle" => arity(1).and(Ok(Family::Cycle(int(0)?))),
            "random" => {
                arity(3)?;
                let p = args[1].parse().map_err(|_| bad())?;
                let seed = args[2].parse().map_err(|_| bad())?;
                Ok(Family::Random { n: int(0)?, p, seed })
            }
            _ => Err(bad()),
        }
    }
}

impl Family {
    /// The same family at order `n`; bipartite families become `K_{n,n}`.
    pub fn with_order(&self, n: usize) -> Family {
        match *self {
            Family::Complete(_) => Family::Complete(n),
            Family::CompleteBipartite(..) => Family::CompleteBipartite(n, n),
            Family::Kneser(_, k) => Family::Kneser(n, k),
            Family::Path(_) => Family::Path(n),
            Family::Cycle(_) => Family::Cycle(n),
            Family::Random { p, seed, .. } => Family::Random { n, p, seed },
        }
    }
}

pub fn generate(family: &Family) -> Result<Graph, GraphError> {
    let invalid = |msg: String| Err(GraphError::InvalidFamily(msg));
    let mut edges = Vec::new();
    let n = match *family {
        Family::Complete(n) => {
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            n
        }
        Family::CompleteBipartite(a, b) => {
            for u in 0..a {
                for v in 0..b {
                    edges.push((u, a + v));
                }
            }
            a + b
        }
        Family::Kneser(n, k) => {
            if k == 0 || n < 2 * k {
                return invalid(format!("kneser requires 1 <= k and n >= 2k (got n={n}, k={k})"));
            }
            let subsets = k_subsets(n, k);
            for (i, a) in subsets.iter().enumerate() {
                for (j, b) in subsets.iter().enumerate().skip(i + 1) {
                    if a & b == 0 {
                        edges.push((i, j));
                    }
                }
            }
            subsets.len()
        }
        Family::Path(n) => {
            edges.extend((1..n).map(|v| (v - 1, v)));
            n
        }
        Family::Cycle(n) => {
            if n < 3 {
                return invalid(format!("cycle requires n >= 3 (got {n})"));
            }
            edges.extend((1..n).map(|v| (v - 1, v)));
            edges.push((0, n - 1));
            n
        }
        Family::Random { n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return invalid(format!("edge probability {p} outside [0, 1]"));
            }
            let mut rng = seeded(seed);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            n
        }
    };
    Graph::new(n, edges)
}

/// All `k`-subsets of `0..n` as bitmasks, in lexicographic order of their
/// sorted element lists.
fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    assert!(n <= 64, "kneser generator supports n <= 64");
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<u64>) {
        if current.len() == k {
            out.push(current.iter().fold(0u64, |m, &i| m | 1 << i));
            return;
        }
        for i in start..n {
            if n - i < k - current.len() {
                break;
            }
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn petersen_by_brute_force() {
        // Independent count: enumerate 2-subsets of {1..5} directly.
        let pairs: Vec<(u32, u32)> = (1..=5)
            .flat_map(|a| (a + 1..=5).map(move |b| (a, b)))
            .collect();
        let disjoint = pairs
            .iter()
            .enumerate()
            .flat_map(|(i, p)| pairs[i + 1..].iter().map(move |q| (p, q)))
            .filter(|(p, q)| p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1)
            .count();
        assert_eq!((pairs.len(), disjoint), (10, 15));

        let g = generate(&Family::Kneser(5, 2)).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.max_degree(), 3);
    }

    #[test]
    fn small_families() {
        let k4 = generate(&Family::Complete(4)).unwrap();
        assert_eq!((k4.edge_count(), k4.max_degree()), (6, 3));
        let k33 = generate(&Family::CompleteBipartite(3, 3)).unwrap();
        assert_eq!((k33.edge_count(), k33.max_degree()), (9, 3));
        let c5 = generate(&Family::Cycle(5)).unwrap();
        assert_eq!((c5.edge_count(), c5.max_degree()), (5, 2));
        assert_eq!(generate(&Family::Path(1)).unwrap().edge_count(), 0);
    }

    #[test]
    fn kneser_regularity() {
        for (n, k) in [(5, 2), (6, 2), (7, 3), (7, 2), (8, 3)] {
            let g = generate(&Family::Kneser(n, k)).unwrap();
            assert_eq!(g.vertex_count(), binomial(n, k));
            for v in 0..g.vertex_count() {
                assert_eq!(g.degree(v), binomial(n - k, k));
            }
        }
    }

    #[test]
    fn invalid_parameters() {
        assert!(generate(&Family::Kneser(3, 2)).is_err());
        assert!(generate(&Family::Cycle(2)).is_err());
        assert!(generate(&Family::Random { n: 3, p: 1.5, seed: 0 }).is_err());
    }

    #[test]
    fn handshake_holds() {
        let families = [
            Family::Complete(6),
            Family::CompleteBipartite(2, 5),
            Family::Kneser(6, 2),
            Family::Path(7),
            Family::Cycle(7),
            Family::Random { n: 25, p: 0.2, seed: 3 },
        ];
        for f in &families {
            let g = generate(f).unwrap();
            let total: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
            assert_eq!(total, 2 * g.edge_count(), "{f}");
        }
    }

    #[test]
    fn random_is_seeded() {
        let a = generate(&Family::Random { n: 30, p: 0.3, seed: 9 }).unwrap();
        let b = generate(&Family::Random { n: 30, p: 0.3, seed: 9 }).unwrap();
        let c = generate(&Family::Random { n: 30, p: 0.3, seed: 10 }).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn parse_specs() {
        assert_eq!("kneser:5,2".parse::<Family>().unwrap(), Family::Kneser(5, 2));
        assert_eq!("complete:4".parse::<Family>().unwrap(), Family::Complete(4));
        assert_eq!(
            "random:10,0.5,3".parse::<Family>().unwrap(),
            Family::Random { n: 10, p: 0.5, seed: 3 }
        );
        assert!("kneser:5".parse::<Family>().is_err());
        assert!("star:5".parse::<Family>().is_err());
        let f = Family::CompleteBipartite(2, 3);
        assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
    }
}
