//! Monochromatic and bichromatic components, cherries and missing colors.

use std::collections::VecDeque;

use super::EdgeColoring;
use crate::{Color, EdgeId, Vertex};

/// A connected component of a color-class subgraph, with sorted vertex and
/// edge lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

/// A monochromatic component made of exactly two edges sharing `center`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cherry {
    pub center: Vertex,
    pub color: Color,
    /// The two arm edges, lower edge id first.
    pub arms: (EdgeId, EdgeId),
    /// Far endpoints, matched to `arms`.
    pub ends: (Vertex, Vertex),
}

impl Cherry {
    /// The far endpoint of `arm`.
    pub fn end_of(&self, arm: EdgeId) -> Vertex {
        if arm == self.arms.0 {
            self.ends.0
        } else {
            debug_assert_eq!(arm, self.arms.1);
            self.ends.1
        }
    }

    pub fn other_arm(&self, arm: EdgeId) -> EdgeId {
        if arm == self.arms.0 {
            self.arms.1
        } else {
            self.arms.0
        }
    }
}

/// A connected component of the subgraph spanned by two color classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BichromaticComponent {
    pub colors: (Color, Color),
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
    /// Degree inside the component, aligned with `vertices`.
    pub degrees: Vec<usize>,
}

impl BichromaticComponent {
    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Degree of `v` in the component, 0 if absent.
    pub fn degree(&self, v: Vertex) -> usize {
        self.vertices
            .binary_search(&v)
            .map(|i| self.degrees[i])
            .unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }
}

impl EdgeColoring {
    /// Edges at `v` whose color is `alpha`, in edge-id order.
    pub fn edges_with_color(&self, v: Vertex, alpha: Color) -> impl Iterator<Item = (EdgeId, Vertex)> + '_ {
        self.graph
            .incident(v)
            .iter()
            .copied()
            .filter(move |&(e, _)| self.assignment[e] == alpha)
    }

    /// Component of the `colors`-subgraph reached from `start`, as BFS over
    /// edges whose color is in `colors`.
    fn component_from(&self, start: Vertex, colors: &[Color]) -> (Vec<Vertex>, Vec<EdgeId>) {
        let g = &self.graph;
        let mut seen_v = vec![false; g.vertex_count()];
        let mut seen_e = vec![false; g.edge_count()];
        let mut vertices = vec![start];
        let mut edges = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen_v[start] = true;
        while let Some(x) = queue.pop_front() {
            for &(e, y) in g.incident(x) {
                if !colors.contains(&self.assignment[e]) || seen_e[e] {
                    continue;
                }
                seen_e[e] = true;
                edges.push(e);
                if !seen_v[y] {
                    seen_v[y] = true;
                    vertices.push(y);
                    queue.push_back(y);
                }
            }
        }
        vertices.sort_unstable();
        edges.sort_unstable();
        (vertices, edges)
    }

    /// Components of the `alpha`-colored subgraph, ordered by smallest edge
    /// id. Isolated vertices are omitted.
    pub fn monochromatic_components(&self, alpha: Color) -> Vec<Component> {
        let mut done = vec![false; self.graph.edge_count()];
        let mut out = Vec::new();
        for e in 0..self.graph.edge_count() {
            if self.assignment[e] != alpha || done[e] {
                continue;
            }
            let (vertices, edges) = self.component_from(self.graph.endpoints(e).0, &[alpha]);
            for &f in &edges {
                done[f] = true;
            }
            out.push(Component { vertices, edges });
        }
        out
    }

    /// The monochromatic component containing edge `e`.
    pub fn component_of_edge(&self, e: EdgeId) -> Component {
        let (vertices, edges) = self.component_from(self.graph.endpoints(e).0, &[self.assignment[e]]);
        Component { vertices, edges }
    }

    /// A monochromatic component with at least three edges: lowest color
    /// first, then lowest smallest edge id.
    pub fn find_large_component(&self) -> Option<(Color, Component)> {
        if !self.has_large_component() {
            return None;
        }
        (0..self.k).find_map(|alpha| {
            self.monochromatic_components(alpha)
                .into_iter()
                .find(|c| c.edges.len() >= 3)
                .map(|c| (alpha, c))
        })
    }

    /// True iff some monochromatic component has at least three edges.
    ///
    /// Such a component exists iff some vertex has color degree ≥ 3, or some
    /// edge `uv` colored α has `d_α(u) + d_α(v) ≥ 4`.
    pub fn has_large_component(&self) -> bool {
        if self.potential == 0 {
            return false;
        }
        let g = &self.graph;
        (0..g.edge_count()).any(|e| {
            let (u, v) = g.endpoints(e);
            let a = self.assignment[e];
            let du = self.color_degree(u, a);
            let dv = self.color_degree(v, a);
            du >= 3 || dv >= 3 || du + dv >= 4
        })
    }

    /// Every monochromatic component has at most two edges.
    pub fn is_cherry_coloring(&self) -> bool {
        !self.has_large_component()
    }

    /// The `alpha`-cherry centered at `v`, if there is one.
    pub fn cherry_at(&self, v: Vertex, alpha: Color) -> Option<Cherry> {
        if self.color_degree(v, alpha) != 2 {
            return None;
        }
        let mut it = self.edges_with_color(v, alpha);
        let (e1, u1) = it.next()?;
        let (e2, u2) = it.next()?;
        if self.color_degree(u1, alpha) == 1 && self.color_degree(u2, alpha) == 1 {
            Some(Cherry {
                center: v,
                color: alpha,
                arms: (e1, e2),
                ends: (u1, u2),
            })
        } else {
            None
        }
    }

    /// Cherries centered at `v`, by color.
    pub fn cherries_at(&self, v: Vertex) -> Vec<Cherry> {
        (0..self.k).filter_map(|a| self.cherry_at(v, a)).collect()
    }

    /// All cherries ordered by `(center, color)`.
    pub fn cherries(&self) -> Vec<Cherry> {
        if self.potential == 0 {
            return Vec::new();
        }
        (0..self.graph.vertex_count())
            .flat_map(|v| self.cherries_at(v))
            .collect()
    }

    /// Is `v` the center of an `alpha`-cherry?
    pub fn centers_cherry(&self, v: Vertex, alpha: Color) -> bool {
        self.cherry_at(v, alpha).is_some()
    }

    /// The `(alpha, beta)`-component containing `start`.
    pub fn bichromatic_component(&self, start: Vertex, alpha: Color, beta: Color) -> BichromaticComponent {
        let (vertices, edges) = self.component_from(start, &[alpha, beta]);
        let degrees = vertices
            .iter()
            .map(|&v| self.color_degree(v, alpha) + if alpha == beta { 0 } else { self.color_degree(v, beta) })
            .collect();
        BichromaticComponent {
            colors: (alpha, beta),
            vertices,
            edges,
            degrees,
        }
    }
}
