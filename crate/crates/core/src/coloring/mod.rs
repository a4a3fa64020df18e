//! Edge-colorings with cached per-vertex color degrees and potential.

mod doc;
mod structure;

pub use doc::ColoringDoc;
pub use structure::{BichromaticComponent, Cherry, Component};

use std::sync::Arc;

use rand::Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::{Color, EdgeId, Vertex};

#[derive(Debug, Error)]
pub enum ColoringError {
    #[error("number of colors must be at least 1")]
    NoColors,
    #[error("assignment has {got} entries but the graph has {expected} edges")]
    AssignmentLength { expected: usize, got: usize },
    #[error("edge {edge} has color {color}, outside 0..{k}")]
    ColorOutOfRange { edge: EdgeId, color: Color, k: usize },
    #[error("edge {edge} already has color {color}")]
    SameColor { edge: EdgeId, color: Color },
    #[error("edge {edge} does not exist (m = {m})")]
    NoSuchEdge { edge: EdgeId, m: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("malformed coloring document: {0}")]
    Json(#[from] serde_json::Error),
}

/// One applied single-edge recoloring. `delta` is `ψ(after) − ψ(before)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Recoloring {
    pub edge: EdgeId,
    pub from: Color,
    pub to: Color,
    pub delta: i64,
}

/// A `k`-edge-coloring of a shared graph.
///
/// `color_degree[v * k + α]` counts the edges at `v` colored `α`; together
/// with the cached potential it is updated in O(1) per recoloring.
#[derive(Debug, Clone)]
pub struct EdgeColoring {
    graph: Arc<Graph>,
    k: usize,
    assignment: Vec<Color>,
    color_degree: Vec<u32>,
    potential: u64,
    audit: bool,
}

impl PartialEq for EdgeColoring {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k
            && self.assignment == other.assignment
            && (Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph)
    }
}

impl Eq for EdgeColoring {}

#[inline]
fn pairs(d: u32) -> u64 {
    let d = d as u64;
    d * d.saturating_sub(1) / 2
}

impl EdgeColoring {
    pub fn new(graph: Arc<Graph>, k: usize, assignment: Vec<Color>) -> Result<Self, ColoringError> {
        if k == 0 {
            return Err(ColoringError::NoColors);
        }
        if assignment.len() != graph.edge_count() {
            return Err(ColoringError::AssignmentLength {
                expected: graph.edge_count(),
                got: assignment.len(),
            });
        }
        if let Some((edge, &color)) = assignment.iter().enumerate().find(|(_, &c)| c >= k) {
            return Err(ColoringError::ColorOutOfRange { edge, color, k });
        }
        let mut color_degree = vec![0u32; graph.vertex_count() * k];
        for (e, &c) in assignment.iter().enumerate() {
            let (u, v) = graph.endpoints(e);
            color_degree[u * k + c] += 1;
            color_degree[v * k + c] += 1;
        }
        let potential = color_degree.iter().map(|&d| pairs(d)).sum();
        Ok(Self {
            graph,
            k,
            assignment,
            color_degree,
            potential,
            audit: false,
        })
    }

    /// Every edge colored `color`.
    pub fn monochromatic(graph: Arc<Graph>, k: usize, color: Color) -> Result<Self, ColoringError> {
        let m = graph.edge_count();
        Self::new(graph, k, vec![color; m])
    }

    /// Each edge gets an independent uniform color.
    pub fn random<R: Rng + ?Sized>(graph: Arc<Graph>, k: usize, rng: &mut R) -> Result<Self, ColoringError> {
        if k == 0 {
            return Err(ColoringError::NoColors);
        }
        let assignment = (0..graph.edge_count()).map(|_| rng.random_range(0..k)).collect();
        Self::new(graph, k, assignment)
    }

    /// When enabled, every recoloring recomputes ψ from scratch and panics
    /// on disagreement with the cached value.
    pub fn set_audit(&mut self, on: bool) {
        self.audit = on;
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn graph_handle(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color(&self, e: EdgeId) -> Color {
        self.assignment[e]
    }

    pub fn assignment(&self) -> &[Color] {
        &self.assignment
    }

    /// `d_α(v)`: edges at `v` colored `α`.
    #[inline]
    pub fn color_degree(&self, v: Vertex, alpha: Color) -> usize {
        self.color_degree[v * self.k + alpha] as usize
    }

    /// The color-degree row of `v`, indexed by color.
    pub fn color_degrees(&self, v: Vertex) -> &[u32] {
        &self.color_degree[v * self.k..(v + 1) * self.k]
    }

    /// Cached ψ.
    pub fn potential(&self) -> u64 {
        self.potential
    }

    /// ψ recomputed from the assignment alone, ignoring all caches.
    pub fn potential_from_scratch(&self) -> u64 {
        let g = &self.graph;
        let mut counts = vec![0u32; self.k];
        let mut total = 0;
        for v in 0..g.vertex_count() {
            counts.iter_mut().for_each(|c| *c = 0);
            for &(e, _) in g.incident(v) {
                counts[self.assignment[e]] += 1;
            }
            total += counts.iter().map(|&d| pairs(d)).sum::<u64>();
        }
        total
    }

    pub fn is_proper(&self) -> bool {
        self.potential == 0
    }

    #[inline]
    pub fn is_missing(&self, v: Vertex, alpha: Color) -> bool {
        self.color_degree(v, alpha) == 0
    }

    /// Colors in `0..k` not used on any edge at `v`, ascending.
    pub fn missing_colors(&self, v: Vertex) -> Vec<Color> {
        (0..self.k).filter(|&c| self.is_missing(v, c)).collect()
    }

    /// `ψ(σ') − ψ(σ)` for σ' = σ with `e` recolored `beta`, without applying it.
    pub fn potential_delta(&self, e: EdgeId, beta: Color) -> Result<i64, ColoringError> {
        self.check_move(e, beta)?;
        Ok(self.delta_unchecked(e, beta))
    }

    /// Same as [`potential_delta`](Self::potential_delta) without argument
    /// checks; `beta != color(e)` is assumed.
    #[inline]
    pub fn delta_unchecked(&self, e: EdgeId, beta: Color) -> i64 {
        let (u, v) = self.graph.endpoints(e);
        let alpha = self.assignment[e];
        let old = self.color_degree(u, alpha) + self.color_degree(v, alpha);
        let new = self.color_degree(u, beta) + self.color_degree(v, beta);
        new as i64 - old as i64 + 2
    }

    fn check_move(&self, e: EdgeId, beta: Color) -> Result<(), ColoringError> {
        let m = self.graph.edge_count();
        if e >= m {
            return Err(ColoringError::NoSuchEdge { edge: e, m });
        }
        if beta >= self.k {
            return Err(ColoringError::ColorOutOfRange {
                edge: e,
                color: beta,
                k: self.k,
            });
        }
        if self.assignment[e] == beta {
            return Err(ColoringError::SameColor { edge: e, color: beta });
        }
        Ok(())
    }

    /// Recolors `e` to `beta` in place.
    pub fn apply_recoloring(&mut self, e: EdgeId, beta: Color) -> Result<Recoloring, ColoringError> {
        self.check_move(e, beta)?;
        Ok(self.apply_unchecked(e, beta))
    }

    pub(crate) fn apply_unchecked(&mut self, e: EdgeId, beta: Color) -> Recoloring {
        let delta = self.delta_unchecked(e, beta);
        let (u, v) = self.graph.endpoints(e);
        let alpha = self.assignment[e];
        let k = self.k;
        self.color_degree[u * k + alpha] -= 1;
        self.color_degree[v * k + alpha] -= 1;
        self.color_degree[u * k + beta] += 1;
        self.color_degree[v * k + beta] += 1;
        self.assignment[e] = beta;
        self.potential = (self.potential as i64 + delta) as u64;
        if self.audit {
            assert_eq!(
                self.potential,
                self.potential_from_scratch(),
                "cached potential diverged after recoloring edge {e}"
            );
        }
        Recoloring {
            edge: e,
            from: alpha,
            to: beta,
            delta,
        }
    }

    /// The coloring `π ∘ σ`, where `perm[α]` is the new name of color `α`.
    pub fn permuted(&self, perm: &[Color]) -> Result<Self, ColoringError> {
        let assignment = self.assignment.iter().map(|&c| perm[c]).collect();
        Self::new(Arc::clone(&self.graph), self.k, assignment)
    }

    /// Replaces the whole assignment, rebuilding all caches.
    pub fn reset(&mut self, assignment: Vec<Color>) -> Result<(), ColoringError> {
        let audit = self.audit;
        *self = Self::new(Arc::clone(&self.graph), self.k, assignment)?;
        self.audit = audit;
        Ok(())
    }
}
