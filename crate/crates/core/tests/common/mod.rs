#![allow(dead_code)]

use std::sync::Arc;

use edgewalk::{Color, EdgeColoring, Graph};

/// Petersen graph drawn as an outer 5-cycle `0-2-4-6-8`, spokes `2i - 2i+1`
/// and an inner pentagram on the odd vertices, with its frozen 5-coloring.
pub fn petersen_frozen() -> EdgeColoring {
    const SKY: Color = 0;
    const GREEN: Color = 1;
    const SIENNA: Color = 2;
    const ORANGE: Color = 3;
    const VIOLET: Color = 4;
    // vertex i is drawn label a{i+1}
    let edges = [
        ((0, 2), SKY),
        ((0, 8), GREEN),
        ((2, 4), SIENNA),
        ((4, 6), ORANGE),
        ((6, 8), VIOLET),
        ((0, 1), ORANGE),
        ((2, 3), VIOLET),
        ((5, 4), GREEN),
        ((7, 6), SKY),
        ((9, 8), SIENNA),
        ((5, 1), VIOLET),
        ((1, 7), SIENNA),
        ((3, 9), ORANGE),
        ((7, 3), GREEN),
        ((9, 5), SKY),
    ];
    let g = Graph::new(10, edges.iter().map(|&(e, _)| e).collect()).unwrap();
    EdgeColoring::new(Arc::new(g), 5, edges.iter().map(|&(_, c)| c).collect()).unwrap()
}

/// Star with hub 0 and one leaf per entry of `colors`.
pub fn star(k: usize, colors: &[Color]) -> EdgeColoring {
    let g = Graph::new(colors.len() + 1, (1..=colors.len()).map(|i| (0, i)).collect()).unwrap();
    EdgeColoring::new(Arc::new(g), k, colors.to_vec()).unwrap()
}

/// Adjacent equally-colored edge pairs, counted directly.
pub fn conflicting_pairs(c: &EdgeColoring) -> u64 {
    let g = c.graph();
    let m = g.edge_count();
    let mut count = 0;
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = g.endpoints(i);
            let (x, y) = g.endpoints(j);
            if (a == x || a == y || b == x || b == y) && c.color(i) == c.color(j) {
                count += 1;
            }
        }
    }
    count
}

/// A vertex bijection `h` with `uv ∈ E(a) ⟺ h(u)h(v) ∈ E(b)`, by backtracking.
pub fn isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let u = map.len();
        if u == a.vertex_count() {
            return true;
        }
        for x in 0..b.vertex_count() {
            if used[x] || a.degree(u) != b.degree(x) {
                continue;
            }
            let consistent = (0..u).all(|w| a.edge_between(u, w).is_some() == b.edge_between(x, map[w]).is_some());
            if consistent {
                used[x] = true;
                map.push(x);
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[x] = false;
            }
        }
        false
    }
    let mut map = Vec::new();
    let mut used = vec![false; b.vertex_count()];
    extend(a, b, &mut map, &mut used).then_some(map)
}

/// Moves a coloring of `a` onto `b` along the vertex map `h`.
pub fn transport(c: &EdgeColoring, b: Arc<Graph>, h: &[usize]) -> EdgeColoring {
    let g = c.graph();
    let mut assignment = vec![0; b.edge_count()];
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        assignment[b.edge_between(h[u], h[v]).unwrap()] = c.color(e);
    }
    EdgeColoring::new(b, c.k(), assignment).unwrap()
}
