//! Edge-coloring toolkit built around the potential
//! `ψ(σ) = Σ_v Σ_α C(d_α(v), 2)`, the number of adjacent equally-colored
//! edge pairs.
//!
//! * [`walk`] runs the mild random walk: from any coloring, repeatedly move
//!   to a uniformly random single-edge recoloring that does not increase ψ,
//!   stopping at a proper coloring.
//! * [`vizing`] is a deterministic procedure that, for `k ≥ Δ + 1` colors,
//!   produces a replayable monotone recoloring sequence ending at a proper
//!   coloring in `O(n²Δ)` steps.
//! * [`analysis`] holds exhaustive oracles and ensemble statistics.

pub mod analysis;
pub mod coloring;
pub mod graph;
pub mod rng;
pub mod vizing;
pub mod walk;

/// Dense 0-based vertex index.
pub type Vertex = usize;
/// Dense 0-based edge index (position in the graph's edge list).
pub type EdgeId = usize;
/// Color in `0..k`.
pub type Color = usize;

pub use coloring::{Cherry, ColoringDoc, ColoringError, Component, EdgeColoring, Recoloring};
pub use graph::{Family, Graph, GraphError};
pub use vizing::{find_proper_coloring, RecoloringStep, VizingError, Witness};
pub use walk::{run_walk, SamplerMode, WalkConfig, WalkOutcome, WalkResult};
