//! The mild random walk: from the current coloring, move to a uniformly
//! random single-edge recoloring whose potential change is `≤ 0`; stop once
//! the coloring is proper.

use std::fmt::Write as _;
use std::sync::Arc;

use rand::Rng;
use thiserror::Error;

use crate::coloring::{ColoringError, EdgeColoring, Recoloring};
use crate::graph::Graph;
use crate::rng::{seeded, ChaCha8Rng};
use crate::{Color, EdgeId};

#[derive(Debug, Error)]
pub enum WalkError {
    #[error("walk configured for k = {config} colors but the start coloring uses k = {start}")]
    ColorCountMismatch { config: usize, start: usize },
    #[error("start coloring is over a different graph")]
    GraphMismatch,
    #[error("invalid walk configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("frozen-ness is only defined for proper colorings (potential is {0})")]
    NotProper(u64),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// How a step picks among the out-neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SamplerMode {
    /// Uniform over the set of non-increasing single-edge recolorings.
    #[default]
    Exact,
    /// Draw `(edge, color)` uniformly among all recolorings and retry until
    /// the draw does not increase ψ. Cheaper per step; its transition
    /// probabilities are weighted differently from `Exact`.
    Rejection,
}

#[derive(Debug, Clone)]
pub struct WalkConfig {
    pub k: usize,
    pub max_steps: u64,
    pub seed: u64,
    pub mode: SamplerMode,
    pub record_trace: bool,
}

impl WalkConfig {
    pub fn new(k: usize) -> Self {
        Self {
            k,
            max_steps: 1_000_000,
            seed: 0,
            mode: SamplerMode::Exact,
            record_trace: false,
        }
    }

    pub fn validate(&self) -> Result<(), WalkError> {
        if self.k == 0 {
            return Err(WalkError::InvalidConfig("k must be at least 1"));
        }
        if self.max_steps == 0 {
            return Err(WalkError::InvalidConfig("max_steps must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WalkOutcome {
    Proper,
    BudgetExhausted,
    /// No non-increasing recoloring exists from the final coloring.
    Stuck,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WalkResult {
    pub outcome: WalkOutcome,
    pub initial: EdgeColoring,
    pub final_coloring: EdgeColoring,
    pub steps_taken: u64,
    /// ψ before the first step and after each applied step.
    pub potential_trace: Option<Vec<u64>>,
    pub steps: Option<Vec<Recoloring>>,
    /// Rejection mode only: draws that were accepted / rejected.
    pub accepted: u64,
    pub rejected: u64,
}

impl WalkResult {
    /// CSV trace with header `step,edge,old_color,new_color,potential`, one
    /// row per applied step; `potential` is ψ after the step.
    pub fn trace_csv(&self) -> Option<String> {
        let steps = self.steps.as_ref()?;
        let potentials = self.potential_trace.as_ref()?;
        let mut out = String::from("step,edge,old_color,new_color,potential\n");
        for (i, s) in steps.iter().enumerate() {
            let _ = writeln!(out, "{},{},{},{},{}", i + 1, s.edge, s.from, s.to, potentials[i + 1]);
        }
        Some(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepResult {
    Moved(Recoloring),
    Stuck,
}

#[inline]
fn move_allowed(c: &EdgeColoring, e: EdgeId, beta: Color) -> bool {
    beta != c.color(e) && c.delta_unchecked(e, beta) <= 0
}

/// All `(edge, color)` recolorings with `Δψ ≤ 0`, ordered by edge then color.
pub fn out_neighbors(c: &EdgeColoring) -> Vec<(EdgeId, Color)> {
    let mut out = Vec::new();
    for e in 0..c.graph().edge_count() {
        for beta in 0..c.k() {
            if move_allowed(c, e, beta) {
                out.push((e, beta));
            }
        }
    }
    out
}

fn has_out_neighbor(c: &EdgeColoring) -> bool {
    (0..c.graph().edge_count()).any(|e| (0..c.k()).any(|beta| move_allowed(c, e, beta)))
}

/// A proper coloring is frozen when no single edge can be recolored while
/// staying proper.
pub fn detect_frozen(c: &EdgeColoring) -> Result<bool, WalkError> {
    if !c.is_proper() {
        return Err(WalkError::NotProper(c.potential()));
    }
    let g = c.graph();
    let movable = (0..g.edge_count()).any(|e| {
        let (u, v) = g.endpoints(e);
        (0..c.k()).any(|beta| beta != c.color(e) && c.is_missing(u, beta) && c.is_missing(v, beta))
    });
    Ok(!movable)
}

/// One walk step by direct enumeration of the out-neighbors (exact mode) or
/// by rejection sampling.
pub fn step_mild<R: Rng + ?Sized>(c: &mut EdgeColoring, rng: &mut R, mode: SamplerMode) -> StepResult {
    match mode {
        SamplerMode::Exact => {
            let candidates = out_neighbors(c);
            if candidates.is_empty() {
                return StepResult::Stuck;
            }
            let (e, beta) = candidates[rng.random_range(0..candidates.len())];
            StepResult::Moved(c.apply_unchecked(e, beta))
        }
        SamplerMode::Rejection => {
            let mut rejected = 0;
            match rejection_step(c, rng, &mut rejected) {
                Some(step) => StepResult::Moved(step),
                None => StepResult::Stuck,
            }
        }
    }
}

/// Returns `None` when no out-neighbor exists. An exhaustive check runs
/// after every `m·k` consecutive rejections.
fn rejection_step<R: Rng + ?Sized>(c: &mut EdgeColoring, rng: &mut R, rejected: &mut u64) -> Option<Recoloring> {
    let m = c.graph().edge_count();
    let k = c.k();
    if m == 0 || k < 2 {
        return None;
    }
    let check_every = (m * k) as u64;
    let mut streak = 0u64;
    loop {
        let e = rng.random_range(0..m);
        let mut beta = rng.random_range(0..k - 1);
        if beta >= c.color(e) {
            beta += 1;
        }
        if c.delta_unchecked(e, beta) <= 0 {
            return Some(c.apply_unchecked(e, beta));
        }
        *rejected += 1;
        streak += 1;
        if streak.is_multiple_of(check_every) && !has_out_neighbor(c) {
            return None;
        }
    }
}

/// Exact-mode sampler that keeps, per edge, the number of allowed target
/// colors. A recoloring of `uv` only changes the counts of edges at `u` or
/// `v`, so each step costs `O(Δk + m)` instead of `O(mk)`. The chosen move
/// is identical to indexing [`out_neighbors`] with the same random draw.
struct ExactSampler {
    allowed: Vec<u32>,
    total: u64,
}

impl ExactSampler {
    fn new(c: &EdgeColoring) -> Self {
        let allowed: Vec<u32> = (0..c.graph().edge_count()).map(|e| Self::count(c, e)).collect();
        let total = allowed.iter().map(|&a| a as u64).sum();
        Self { allowed, total }
    }

    fn count(c: &EdgeColoring, e: EdgeId) -> u32 {
        let (u, v) = c.graph().endpoints(e);
        let alpha = c.color(e);
        let du = c.color_degrees(u);
        let dv = c.color_degrees(v);
        let budget = du[alpha] + dv[alpha] - 2;
        (0..c.k())
            .filter(|&b| b != alpha && du[b] + dv[b] <= budget)
            .count() as u32
    }

    fn refresh(&mut self, c: &EdgeColoring, e: EdgeId) {
        let (u, v) = c.graph().endpoints(e);
        for &x in &[u, v] {
            for &(f, _) in c.graph().incident(x) {
                let fresh = Self::count(c, f);
                self.total = self.total + fresh as u64 - self.allowed[f] as u64;
                self.allowed[f] = fresh;
            }
        }
    }

    fn step<R: Rng + ?Sized>(&mut self, c: &mut EdgeColoring, rng: &mut R) -> StepResult {
        if self.total == 0 {
            return StepResult::Stuck;
        }
        let mut r = rng.random_range(0..self.total as usize) as u64;
        let mut edge = 0;
        for (e, &a) in self.allowed.iter().enumerate() {
            if r < a as u64 {
                edge = e;
                break;
            }
            r -= a as u64;
        }
        let beta = (0..c.k())
            .filter(|&b| move_allowed(c, edge, b))
            .nth(r as usize)
            .expect("allowed count matches enumeration");
        let step = c.apply_unchecked(edge, beta);
        self.refresh(c, edge);
        StepResult::Moved(step)
    }
}

/// Runs the walk from `start`, or from an independent uniform coloring drawn
/// from the seeded generator when `start` is `None`.
pub fn run_walk(graph: Arc<Graph>, cfg: &WalkConfig, start: Option<EdgeColoring>) -> Result<WalkResult, WalkError> {
    cfg.validate()?;
    let mut rng = seeded(cfg.seed);
    let coloring = match start {
        Some(c) => {
            if c.k() != cfg.k {
                return Err(WalkError::ColorCountMismatch {
                    config: cfg.k,
                    start: c.k(),
                });
            }
            if c.graph() != graph.as_ref() {
                return Err(WalkError::GraphMismatch);
            }
            c
        }
        None => EdgeColoring::random(graph, cfg.k, &mut rng)?,
    };
    Ok(walk_from(coloring, cfg, &mut rng))
}

fn walk_from(mut c: EdgeColoring, cfg: &WalkConfig, rng: &mut ChaCha8Rng) -> WalkResult {
    let initial = c.clone();
    let mut potentials = cfg.record_trace.then(|| vec![c.potential()]);
    let mut steps = cfg.record_trace.then(Vec::new);
    let mut exact = (cfg.mode == SamplerMode::Exact && !c.is_proper()).then(|| ExactSampler::new(&c));
    let (mut accepted, mut rejected) = (0u64, 0u64);
    let mut taken = 0u64;
    let outcome = loop {
        if c.is_proper() {
            break WalkOutcome::Proper;
        }
        if taken >= cfg.max_steps {
            break WalkOutcome::BudgetExhausted;
        }
        let result = match exact.as_mut() {
            Some(sampler) => sampler.step(&mut c, rng),
            None => match rejection_step(&mut c, rng, &mut rejected) {
                Some(s) => {
                    accepted += 1;
                    StepResult::Moved(s)
                }
                None => StepResult::Stuck,
            },
        };
        match result {
            StepResult::Stuck => break WalkOutcome::Stuck,
            StepResult::Moved(step) => {
                taken += 1;
                if let (Some(p), Some(s)) = (potentials.as_mut(), steps.as_mut()) {
                    p.push(c.potential());
                    s.push(step);
                }
            }
        }
    };
    WalkResult {
        outcome,
        initial,
        final_coloring: c,
        steps_taken: taken,
        potential_trace: potentials,
        steps,
        accepted,
        rejected,
    }
}
