//! Deterministic monotone recoloring to a proper coloring with `k ≥ Δ + 1`
//! colors.
//!
//! Every step recolors one edge without increasing ψ, and each call to
//! [`Session::decrease_potential_once`] strictly lowers ψ. The operations
//! are methods on [`Session`], which owns a mutable coloring and records
//! every applied step with the operation that produced it.
//!
//! A round may stop early: whenever ψ has already dropped below its value
//! at the start of an operation, or a monochromatic component with three or
//! more edges has appeared (which one more step removes), the operation
//! returns at once.

mod bichromatic;
mod digraph;
mod marks;
mod ops;
mod witness;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{ColoringError, EdgeColoring};
use crate::{Color, EdgeId, Vertex};

pub use bichromatic::ShiftOutcome;
pub use digraph::ColorShiftDigraph;
pub use marks::Flow;
pub use witness::{verify_witness, StepDoc, Witness, WitnessDoc, WitnessError};

#[derive(Debug, Error)]
pub enum VizingError {
    #[error("need at least Δ + 1 = {needed} colors, got {k}")]
    TooFewColors { k: usize, needed: usize },
    #[error("coloring is already proper")]
    AlreadyProper,
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An intermediate claim of the construction did not hold on this input.
    #[error("construction claim failed: {0}")]
    ClaimFailed(String),
    #[error("recoloring edge {edge} to {to} would raise ψ by {delta}")]
    NonMonotone { edge: EdgeId, to: Color, delta: i64 },
    #[error("no potential-decreasing sequence found: {0}")]
    NoProgress(String),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

impl VizingError {
    /// Failures a round may recover from by trying another cherry.
    fn is_recoverable(&self) -> bool {
        matches!(self, VizingError::Precondition(_) | VizingError::ClaimFailed(_))
    }
}

/// The operation that produced a step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma {
    LargeComponent,
    MoveCherry,
    ExchangeCherry,
    PathShift,
    DegreeOne,
    TwoCherries,
    Outdegree0,
    CreateCycle,
    IsolateMark,
    RotateCycle,
}

impl Lemma {
    pub fn name(self) -> &'static str {
        match self {
            Lemma::LargeComponent => "large_component",
            Lemma::MoveCherry => "move_cherry",
            Lemma::ExchangeCherry => "exchange_cherry",
            Lemma::PathShift => "path_shift",
            Lemma::DegreeOne => "degree_one",
            Lemma::TwoCherries => "two_cherries",
            Lemma::Outdegree0 => "outdegree0",
            Lemma::CreateCycle => "create_cycle",
            Lemma::IsolateMark => "isolate_mark",
            Lemma::RotateCycle => "rotate_cycle",
        }
    }
}

/// One recorded step of the sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecoloringStep {
    pub edge: EdgeId,
    pub from: Color,
    pub to: Color,
    pub delta: i64,
    pub lemma: Lemma,
}

/// Counts of how rounds were resolved, for diagnostics.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RoundStats {
    pub rounds: u64,
    /// Rounds that needed a cherry other than the first one.
    pub retried: u64,
    /// Rounds settled by the bichromatic-component scan.
    pub scan_fallback: u64,
}

/// A coloring being driven towards properness, with its step log.
#[derive(Debug)]
pub struct Session<'a> {
    coloring: &'a mut EdgeColoring,
    steps: Vec<RecoloringStep>,
    stats: RoundStats,
}

impl<'a> Session<'a> {
    pub fn new(coloring: &'a mut EdgeColoring) -> Self {
        Self {
            coloring,
            steps: Vec::new(),
            stats: RoundStats::default(),
        }
    }

    pub fn coloring(&self) -> &EdgeColoring {
        self.coloring
    }

    pub fn steps(&self) -> &[RecoloringStep] {
        &self.steps
    }

    pub fn stats(&self) -> &RoundStats {
        &self.stats
    }

    pub fn into_steps(self) -> Vec<RecoloringStep> {
        self.steps
    }

    fn require_enough_colors(&self) -> Result<(), VizingError> {
        let needed = self.coloring.graph().max_degree() + 1;
        if self.coloring.k() < needed {
            return Err(VizingError::TooFewColors {
                k: self.coloring.k(),
                needed,
            });
        }
        Ok(())
    }

    /// Applies one recoloring, refusing any that would raise ψ.
    fn apply(&mut self, edge: EdgeId, to: Color, lemma: Lemma) -> Result<RecoloringStep, VizingError> {
        let delta = self.coloring.potential_delta(edge, to)?;
        if delta > 0 {
            return Err(VizingError::NonMonotone { edge, to, delta });
        }
        let r = self.coloring.apply_recoloring(edge, to)?;
        let step = RecoloringStep {
            edge: r.edge,
            from: r.from,
            to: r.to,
            delta: r.delta,
            lemma,
        };
        self.steps.push(step);
        Ok(step)
    }

    /// True once the current operation may stop: ψ is already below `entry`,
    /// or a large component appeared and has just been reduced.
    fn settled(&mut self, entry: u64) -> Result<bool, VizingError> {
        if self.coloring.potential() < entry {
            return Ok(true);
        }
        if self.coloring.has_large_component() {
            self.reduce_large_component()?;
            return Ok(true);
        }
        Ok(false)
    }

    fn require_cherry_coloring(&self) -> Result<(), VizingError> {
        if self.coloring.has_large_component() {
            return Err(VizingError::Precondition(
                "coloring has a monochromatic component with three or more edges".into(),
            ));
        }
        Ok(())
    }

    /// Strictly lowers ψ by a sequence of non-increasing steps.
    pub fn decrease_potential_once(&mut self) -> Result<(), VizingError> {
        self.require_enough_colors()?;
        if self.coloring.is_proper() {
            return Err(VizingError::AlreadyProper);
        }
        self.stats.rounds += 1;
        let entry = self.coloring.potential();
        if self.settled(entry)? {
            return Ok(());
        }

        let mut tried: Vec<Vertex> = Vec::new();
        let mut last_error = None;
        loop {
            let next = self
                .coloring
                .cherries()
                .into_iter()
                .map(|c| c.center)
                .find(|v| !tried.contains(v));
            let Some(v) = next else { break };
            if !tried.is_empty() {
                self.stats.retried += 1;
            }
            tried.push(v);
            match self.cherry_round(v, entry) {
                Ok(()) => {}
                Err(e) if e.is_recoverable() => last_error = Some(e),
                Err(e) => return Err(e),
            }
            if self.settled(entry)? {
                return Ok(());
            }
        }

        self.stats.scan_fallback += 1;
        match self.bichromatic_scan(entry) {
            Ok(true) => return Ok(()),
            Ok(false) => {}
            Err(e) if e.is_recoverable() => last_error = Some(e),
            Err(e) => return Err(e),
        }
        if self.settled(entry)? {
            return Ok(());
        }
        Err(VizingError::NoProgress(match last_error {
            Some(e) => e.to_string(),
            None => "no cherry available".into(),
        }))
    }

    /// Works on the cherries centered at `v` through the color-shift digraph.
    fn cherry_round(&mut self, v: Vertex, entry: u64) -> Result<(), VizingError> {
        // each pass either finishes or creates a marked cycle; two suffice
        for _ in 0..3 {
            let d = ColorShiftDigraph::build(self.coloring, v);
            if d.marked_colors().is_empty() {
                return Err(VizingError::ClaimFailed(format!("vertex {v} centers no cherry")));
            }
            if let Some(path) = d.marked_to_sink_path() {
                return self.resolve_outdegree0(v, &path);
            }
            if let Some(cycle) = d.chordless_marked_cycle() {
                let beta = cycle[0];
                if d.marks_on(&cycle) > 1 {
                    if let Flow::Dropped = self.isolate_mark_on_cycle(v, &cycle, beta)? {
                        return Ok(());
                    }
                }
                return self.rotate_cycle_and_eliminate(v, &cycle, beta);
            }
            if let Some(cycle) = d.single_mark_cycle() {
                let beta = cycle[0];
                return self.rotate_cycle_and_eliminate(v, &cycle, beta);
            }
            if d.has_marked_cycle() {
                return Err(VizingError::ClaimFailed(format!(
                    "every marked cycle at {v} has a chord and several marks"
                )));
            }
            let beta = d.marked_colors()[0];
            if let Flow::Dropped = self.create_marked_cycle(v, beta)? {
                return Ok(());
            }
            if self.settled(entry)? {
                return Ok(());
            }
        }
        Err(VizingError::ClaimFailed(format!("no marked cycle formed at {v}")))
    }

    /// Looks for any cherry whose bichromatic component with a color missing
    /// at its center has a degree-1 vertex or a second cherry center.
    fn bichromatic_scan(&mut self, entry: u64) -> Result<bool, VizingError> {
        for c in self.coloring.cherries() {
            for alpha in self.coloring.missing_colors(c.center) {
                let h = self.coloring.bichromatic_component(c.center, c.color, alpha);
                if h.degrees.contains(&1) {
                    self.eliminate_cherry_via_degree1(&c, alpha)?;
                    return Ok(self.coloring.potential() < entry);
                }
                let other = h.vertices.iter().zip(&h.degrees).find_map(|(&w, &deg)| {
                    if w == c.center || deg != 2 {
                        return None;
                    }
                    [c.color, alpha]
                        .into_iter()
                        .find_map(|col| self.coloring.cherry_at(w, col))
                });
                if let Some(c2) = other {
                    self.eliminate_two_cherries(&c, &c2, alpha)?;
                    return Ok(self.coloring.potential() < entry);
                }
            }
        }
        Ok(false)
    }
}

/// Runs [`Session::decrease_potential_once`] until `initial` becomes proper
/// and returns the replayable sequence.
pub fn find_proper_coloring(initial: &EdgeColoring) -> Result<Witness, VizingError> {
    let mut coloring = initial.clone();
    let mut session = Session::new(&mut coloring);
    session.require_enough_colors()?;
    while !session.coloring().is_proper() {
        let before = session.coloring().potential();
        session.decrease_potential_once()?;
        let after = session.coloring().potential();
        if after >= before {
            return Err(VizingError::ClaimFailed(format!(
                "round left ψ at {after} (was {before})"
            )));
        }
    }
    let steps = session.into_steps();
    Ok(Witness {
        initial: initial.clone(),
        steps,
        final_coloring: coloring,
    })
}

/// The step bound `50 n² Δ` used when checking sequence lengths.
pub fn step_bound(n: usize, max_degree: usize) -> u64 {
    50 * (n as u64) * (n as u64) * (max_degree as u64)
}
