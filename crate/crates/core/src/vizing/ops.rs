//! Single-step operations: breaking a large component, moving a cherry arm
//! and exchanging a cherry arm.

use super::{Lemma, RecoloringStep, Session, VizingError};
use crate::{Color, EdgeId, Vertex};

impl Session<'_> {
    /// Recolors an edge `uv` of a monochromatic component with at least three
    /// edges, where `d_α(u) + d_α(v) ≥ 4`, to the color β minimizing
    /// `d_β(u) + d_β(v)` (lowest β on ties). This lowers ψ by at least 1.
    pub fn reduce_large_component(&mut self) -> Result<RecoloringStep, VizingError> {
        self.require_enough_colors()?;
        let c = &*self.coloring;
        let Some((alpha, comp)) = c.find_large_component() else {
            return Err(VizingError::Precondition("no monochromatic component with three or more edges".into()));
        };
        let g = c.graph();
        let pick = comp.edges.iter().copied().find(|&e| {
            let (u, v) = g.endpoints(e);
            c.color_degree(u, alpha) + c.color_degree(v, alpha) >= 4
        });
        let Some(e) = pick else {
            return Err(VizingError::ClaimFailed(format!(
                "large {alpha}-component without an edge of four incidences"
            )));
        };
        let (u, v) = g.endpoints(e);
        let beta = (0..c.k())
            .filter(|&b| b != alpha)
            .min_by_key(|&b| c.color_degree(u, b) + c.color_degree(v, b))
            .expect("k ≥ 2");
        if c.color_degree(u, beta) + c.color_degree(v, beta) > 1 {
            return Err(VizingError::ClaimFailed(format!(
                "no color with at most one incidence at edge {e}"
            )));
        }
        self.apply(e, beta, Lemma::LargeComponent)
    }

    /// Recolors an arm of a cherry to β, where β is missing at one endpoint
    /// and the other endpoint does not center a β-cherry. ψ does not rise.
    pub fn move_cherry_edge(&mut self, edge: EdgeId, beta: Color) -> Result<RecoloringStep, VizingError> {
        self.move_cherry_edge_as(edge, beta, Lemma::MoveCherry)
    }

    pub(super) fn move_cherry_edge_as(
        &mut self,
        edge: EdgeId,
        beta: Color,
        lemma: Lemma,
    ) -> Result<RecoloringStep, VizingError> {
        let c = &*self.coloring;
        if edge >= c.graph().edge_count() || beta >= c.k() {
            return Err(VizingError::Precondition(format!("edge {edge} or color {beta} out of range")));
        }
        if c.component_of_edge(edge).edges.len() != 2 {
            return Err(VizingError::Precondition(format!("edge {edge} is not a cherry arm")));
        }
        let (a, b) = c.graph().endpoints(edge);
        let ok = |missing: Vertex, other: Vertex| c.is_missing(missing, beta) && c.color_degree(other, beta) <= 1;
        if !(ok(a, b) || ok(b, a)) {
            return Err(VizingError::Precondition(format!(
                "color {beta} is not free for edge {edge}"
            )));
        }
        self.apply(edge, beta, lemma)
    }

    /// Recolors the arm `edge = uv` of a cherry centered at `v` to a color β
    /// with β missing at `v` and `u` not centering a β-cherry, or else β
    /// missing at `u`, `v` not centering a β-cherry and β ≠ γ. Requires a
    /// cherry coloring, `k ≥ Δ + 1` and γ present at `v`. ψ does not rise.
    pub fn exchange_cherry(&mut self, edge: EdgeId, v: Vertex, gamma: Color) -> Result<RecoloringStep, VizingError> {
        self.exchange_cherry_avoiding(edge, v, gamma, &[], Lemma::ExchangeCherry)
    }

    /// As [`Session::exchange_cherry`], preferring colors outside `avoid`.
    pub(super) fn exchange_cherry_avoiding(
        &mut self,
        edge: EdgeId,
        v: Vertex,
        gamma: Color,
        avoid: &[Color],
        lemma: Lemma,
    ) -> Result<RecoloringStep, VizingError> {
        self.require_enough_colors()?;
        self.require_cherry_coloring()?;
        let c = &*self.coloring;
        let g = c.graph();
        if edge >= g.edge_count() || gamma >= c.k() {
            return Err(VizingError::Precondition(format!("edge {edge} or color {gamma} out of range")));
        }
        let (a, b) = g.endpoints(edge);
        if v != a && v != b {
            return Err(VizingError::Precondition(format!("vertex {v} is not on edge {edge}")));
        }
        let alpha = c.color(edge);
        if !c.centers_cherry(v, alpha) {
            return Err(VizingError::Precondition(format!("edge {edge} is not an arm of a cherry at {v}")));
        }
        if c.is_missing(v, gamma) {
            return Err(VizingError::Precondition(format!("color {gamma} is missing at {v}")));
        }
        let u = g.other_end(edge, v);
        let first = |b: Color| c.is_missing(v, b) && c.color_degree(u, b) <= 1;
        let second = |b: Color| b != gamma && c.is_missing(u, b) && c.color_degree(v, b) <= 1;
        let pick = |pred: &dyn Fn(Color) -> bool| {
            (0..c.k())
                .filter(|b| !avoid.contains(b))
                .find(|&b| pred(b))
                .or_else(|| (0..c.k()).find(|&b| pred(b)))
        };
        let beta = pick(&first).or_else(|| pick(&second));
        match beta {
            Some(beta) => self.apply(edge, beta, lemma),
            None => Err(VizingError::ClaimFailed(format!(
                "no exchange color for edge {edge} at {v}"
            ))),
        }
    }
}

impl Session<'_> {
    /// Recolors the arm `edge` of a cherry centered at `v` to a color outside
    /// `exclude` without raising ψ. Colors missing at `v` are tried first,
    /// then colors missing at the far end, then any non-increasing color.
    pub(super) fn recolor_arm_outside(
        &mut self,
        edge: EdgeId,
        v: Vertex,
        exclude: &[Color],
        lemma: Lemma,
    ) -> Result<RecoloringStep, VizingError> {
        let c = &*self.coloring;
        let alpha = c.color(edge);
        if !c.centers_cherry(v, alpha) {
            return Err(VizingError::Precondition(format!("edge {edge} is not an arm of a cherry at {v}")));
        }
        let u = c.graph().other_end(edge, v);
        let allowed = |b: &Color| *b != alpha && !exclude.contains(b);
        let beta = (0..c.k())
            .filter(allowed)
            .find(|&b| c.is_missing(v, b) && c.color_degree(u, b) <= 1)
            .or_else(|| {
                (0..c.k())
                    .filter(allowed)
                    .find(|&b| c.is_missing(u, b) && c.color_degree(v, b) <= 1)
            })
            .or_else(|| {
                (0..c.k())
                    .filter(allowed)
                    .map(|b| (c.delta_unchecked(edge, b), b))
                    .filter(|&(d, _)| d <= 0)
                    .min()
                    .map(|(_, b)| b)
            });
        match beta {
            Some(beta) => self.apply(edge, beta, lemma),
            None => Err(VizingError::ClaimFailed(format!(
                "no color outside {exclude:?} for edge {edge} at {v}"
            ))),
        }
    }
}
