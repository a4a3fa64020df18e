//! Exhaustive oracles for small instances and ensemble statistics.

mod ensemble;

use std::collections::VecDeque;
use std::sync::Arc;

use thiserror::Error;

use crate::coloring::{ColoringError, EdgeColoring};
use crate::graph::Graph;
use crate::Color;

pub use ensemble::{run_ensemble, scaling_csv, scaling_experiment, EnsembleReport, KRule, ScalingRow, StepSummary};

/// State-count ceiling for [`enumerate_proper_colorings`].
pub const ENUMERATION_BUDGET: u128 = 100_000_000;
/// State-count ceiling for [`monotone_reachability`].
pub const REACHABILITY_BUDGET: u128 = 10_000_000;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("{k}^{m} assignments exceed the budget of {budget}; use a smaller instance")]
    Budget { k: usize, m: usize, budget: u128 },
    #[error("at least one run is required")]
    NoRuns,
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Walk(#[from] crate::walk::WalkError),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
}

/// `k^m`, saturating just above `cap`.
fn state_count(k: usize, m: usize, cap: u128) -> u128 {
    let mut total: u128 = 1;
    for _ in 0..m {
        total = total.saturating_mul(k as u128);
        if total > cap {
            return cap + 1;
        }
    }
    total
}

fn check_budget(k: usize, m: usize, budget: u128) -> Result<(), AnalysisError> {
    if state_count(k, m, budget) > budget {
        return Err(AnalysisError::Budget { k, m, budget });
    }
    Ok(())
}

/// All proper `k`-edge-colorings in lexicographic order of assignment.
pub fn enumerate_proper_colorings(g: &Graph, k: usize) -> Result<Vec<Vec<Color>>, AnalysisError> {
    if k == 0 {
        return Err(ColoringError::NoColors.into());
    }
    check_budget(k, g.edge_count(), ENUMERATION_BUDGET)?;
    let n = g.vertex_count();
    let mut used = vec![false; n * k];
    let mut assignment = Vec::with_capacity(g.edge_count());
    let mut out = Vec::new();
    extend(g, k, &mut used, &mut assignment, &mut out);
    Ok(out)
}

fn extend(g: &Graph, k: usize, used: &mut [bool], assignment: &mut Vec<Color>, out: &mut Vec<Vec<Color>>) {
    let e = assignment.len();
    if e == g.edge_count() {
        out.push(assignment.clone());
        return;
    }
    let (u, v) = g.endpoints(e);
    for a in 0..k {
        if used[u * k + a] || used[v * k + a] {
            continue;
        }
        used[u * k + a] = true;
        used[v * k + a] = true;
        assignment.push(a);
        extend(g, k, used, assignment, out);
        assignment.pop();
        used[u * k + a] = false;
        used[v * k + a] = false;
    }
}

/// Whether some proper coloring is reachable from `start` through
/// single-edge recolorings that never raise ψ (breadth-first search over all
/// `k^m` states).
pub fn monotone_reachability(start: &EdgeColoring) -> Result<bool, AnalysisError> {
    let k = start.k();
    let m = start.graph().edge_count();
    check_budget(k, m, REACHABILITY_BUDGET)?;
    if start.is_proper() {
        return Ok(true);
    }
    let total = state_count(k, m, REACHABILITY_BUDGET) as usize;
    let place: Vec<usize> = (0..m).scan(1usize, |p, _| {
        let cur = *p;
        *p *= k;
        Some(cur)
    }).collect();
    let encode = |a: &[Color]| a.iter().zip(&place).map(|(&c, &p)| c * p).sum::<usize>();
    let decode = |mut code: usize| -> Vec<Color> {
        (0..m)
            .map(|_| {
                let c = code % k;
                code /= k;
                c
            })
            .collect()
    };

    let mut seen = vec![false; total];
    let mut queue = VecDeque::new();
    let first = encode(start.assignment());
    seen[first] = true;
    queue.push_back(first);
    let mut scratch = EdgeColoring::new(Arc::clone(start.graph_handle()), k, start.assignment().to_vec())?;
    while let Some(code) = queue.pop_front() {
        scratch.reset(decode(code))?;
        if scratch.is_proper() {
            return Ok(true);
        }
        for (e, &weight) in place.iter().enumerate() {
            let from = scratch.color(e);
            for beta in (0..k).filter(|&b| b != from) {
                if scratch.delta_unchecked(e, beta) <= 0 {
                    let next = code + beta * weight - from * weight;
                    if !seen[next] {
                        seen[next] = true;
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    Ok(false)
}

/// Decimal CSV of an assignment, the key used in frequency tables.
pub fn assignment_key(assignment: &[Color]) -> String {
    assignment
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
