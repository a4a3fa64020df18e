use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use statrs::distribution::{ChiSquared, ContinuousCDF};

use super::{assignment_key, check_budget, enumerate_proper_colorings, AnalysisError, ENUMERATION_BUDGET};
use crate::graph::{generate, Family, Graph};
use crate::rng::stream_seed;
use crate::walk::{run_walk, WalkConfig, WalkOutcome};

/// Frequency tables are only filled when the instance has at most this many
/// proper colorings.
const MAX_TABLE: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepSummary {
    pub min: u64,
    pub median: f64,
    pub mean: f64,
    pub max: u64,
}

impl StepSummary {
    fn of(steps: &[u64]) -> Self {
        let mut sorted = steps.to_vec();
        sorted.sort_unstable();
        let n = sorted.len();
        let median = if n % 2 == 1 {
            sorted[n / 2] as f64
        } else {
            (sorted[n / 2 - 1] as f64 + sorted[n / 2] as f64) / 2.0
        };
        StepSummary {
            min: sorted[0],
            median,
            mean: sorted.iter().map(|&s| s as f64).sum::<f64>() / n as f64,
            max: sorted[n - 1],
        }
    }
}

/// Aggregate of independent walks on one graph.
///
/// `frequencies` lists every proper coloring (zero counts included) when
/// the instance is small enough to enumerate; the uniformity statistics
/// compare the proper outputs against the uniform distribution on that set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnsembleReport {
    pub runs: u64,
    pub k: usize,
    pub seed: u64,
    pub outcomes: BTreeMap<String, u64>,
    pub steps: StepSummary,
    pub frequencies: Option<BTreeMap<String, u64>>,
    pub total_variation: Option<f64>,
    pub chi_square: Option<f64>,
    pub degrees_of_freedom: Option<usize>,
    pub p_value: Option<f64>,
}

impl EnsembleReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn outcome_name(o: WalkOutcome) -> &'static str {
    match o {
        WalkOutcome::Proper => "proper",
        WalkOutcome::BudgetExhausted => "budget_exhausted",
        WalkOutcome::Stuck => "stuck",
    }
}

/// Runs `runs` walks from independent uniform starts. Run `i` uses seed
/// `stream_seed(cfg.seed, i)`; runs execute in parallel and are merged in
/// index order, so the report depends only on the inputs.
pub fn run_ensemble(graph: Arc<Graph>, cfg: &WalkConfig, runs: u64) -> Result<EnsembleReport, AnalysisError> {
    if runs == 0 {
        return Err(AnalysisError::NoRuns);
    }
    cfg.validate()?;
    let results: Vec<(WalkOutcome, u64, Vec<usize>)> = (0..runs)
        .into_par_iter()
        .map(|i| {
            let run_cfg = WalkConfig {
                seed: stream_seed(cfg.seed, i),
                record_trace: false,
                ..cfg.clone()
            };
            let r = run_walk(Arc::clone(&graph), &run_cfg, None)?;
            Ok((r.outcome, r.steps_taken, r.final_coloring.assignment().to_vec()))
        })
        .collect::<Result<_, AnalysisError>>()?;

    let mut outcomes = BTreeMap::new();
    for name in ["proper", "budget_exhausted", "stuck"] {
        outcomes.insert(name.to_string(), 0);
    }
    for (o, _, _) in &results {
        *outcomes.get_mut(outcome_name(*o)).expect("known outcome") += 1;
    }
    let steps: Vec<u64> = results.iter().map(|r| r.1).collect();

    let table = if check_budget(cfg.k, graph.edge_count(), ENUMERATION_BUDGET).is_ok() {
        let all = enumerate_proper_colorings(&graph, cfg.k)?;
        (!all.is_empty() && all.len() <= MAX_TABLE).then_some(all)
    } else {
        None
    };

    let mut report = EnsembleReport {
        runs,
        k: cfg.k,
        seed: cfg.seed,
        outcomes,
        steps: StepSummary::of(&steps),
        frequencies: None,
        total_variation: None,
        chi_square: None,
        degrees_of_freedom: None,
        p_value: None,
    };
    if let Some(all) = table {
        let mut freq: BTreeMap<String, u64> = all.iter().map(|a| (assignment_key(a), 0)).collect();
        for (o, _, a) in &results {
            if *o == WalkOutcome::Proper {
                *freq.get_mut(&assignment_key(a)).expect("proper output is enumerated") += 1;
            }
        }
        let (tv, chi, df, p) = uniformity(freq.values().copied());
        report.frequencies = Some(freq);
        report.total_variation = Some(tv);
        report.chi_square = Some(chi);
        report.degrees_of_freedom = Some(df);
        report.p_value = Some(p);
    }
    Ok(report)
}

/// Total variation distance to uniform and Pearson's chi-square test of
/// uniformity for the given counts: `(tv, statistic, df, p)`.
pub fn uniformity(counts: impl IntoIterator<Item = u64>) -> (f64, f64, usize, f64) {
    let counts: Vec<u64> = counts.into_iter().collect();
    let cells = counts.len();
    let total: u64 = counts.iter().sum();
    if cells <= 1 || total == 0 {
        return (0.0, 0.0, cells.saturating_sub(1), 1.0);
    }
    let expected = total as f64 / cells as f64;
    let tv = 0.5
        * counts
            .iter()
            .map(|&c| (c as f64 / total as f64 - 1.0 / cells as f64).abs())
            .sum::<f64>();
    let chi = counts
        .iter()
        .map(|&c| (c as f64 - expected).powi(2) / expected)
        .sum::<f64>();
    let df = cells - 1;
    let p = ChiSquared::new(df as f64).map(|d| d.sf(chi)).unwrap_or(f64::NAN);
    (tv, chi, df, p)
}

/// How the number of colors follows the maximum degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KRule {
    DeltaPlusOne,
    Delta,
}

impl KRule {
    pub fn colors(self, max_degree: usize) -> usize {
        match self {
            KRule::DeltaPlusOne => max_degree + 1,
            KRule::Delta => max_degree.max(1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalingRow {
    pub n: usize,
    pub mean_steps: f64,
    pub max_steps: u64,
    pub runs: u64,
}

/// Walk step counts for `family` at each order in `sizes`.
pub fn scaling_experiment(
    family: &Family,
    sizes: &[usize],
    k_rule: KRule,
    runs: u64,
    base: &WalkConfig,
) -> Result<Vec<ScalingRow>, AnalysisError> {
    sizes
        .iter()
        .map(|&size| {
            let g = Arc::new(generate(&family.with_order(size))?);
            let cfg = WalkConfig {
                k: k_rule.colors(g.max_degree()),
                ..base.clone()
            };
            let report = run_ensemble(Arc::clone(&g), &cfg, runs)?;
            Ok(ScalingRow {
                n: g.vertex_count(),
                mean_steps: report.steps.mean,
                max_steps: report.steps.max,
                runs,
            })
        })
        .collect()
}

pub fn scaling_csv(rows: &[ScalingRow]) -> String {
    let mut out = String::from("n,mean_steps,max_steps,runs\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", r.n, r.mean_steps, r.max_steps, r.runs));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_statistics() {
        let s = StepSummary::of(&[5, 1, 3, 9]);
        assert_eq!((s.min, s.max), (1, 9));
        assert_eq!(s.median, 4.0);
        assert_eq!(s.mean, 4.5);
        assert_eq!(StepSummary::of(&[7]).median, 7.0);
    }

    #[test]
    fn uniformity_statistics() {
        let (tv, chi, df, p) = uniformity([50, 50]);
        assert_eq!((tv, chi, df), (0.0, 0.0, 1));
        assert!((p - 1.0).abs() < 1e-12);
        // all mass on one of two cells
        let (tv, chi, _, p) = uniformity([100, 0]);
        assert!((tv - 0.5).abs() < 1e-12);
        assert!((chi - 100.0).abs() < 1e-9);
        assert!(p < 1e-20);
    }

    #[test]
    fn ensemble_on_triangle() {
        let g = Arc::new(generate(&Family::Complete(3)).unwrap());
        let cfg = WalkConfig::new(3);
        let r = run_ensemble(g.clone(), &cfg, 200).unwrap();
        assert_eq!(r.outcomes["proper"], 200);
        let freq = r.frequencies.as_ref().unwrap();
        assert_eq!(freq.len(), 6);
        assert_eq!(freq.values().sum::<u64>(), 200);
        let tv = r.total_variation.unwrap();
        assert!((0.0..=1.0).contains(&tv));
        // bit-identical on repeat
        assert_eq!(run_ensemble(g, &cfg, 200).unwrap(), r);
    }

    #[test]
    fn scaling_table() {
        let cfg = WalkConfig::new(1);
        let rows = scaling_experiment(&Family::Path(2), &[3, 5], KRule::DeltaPlusOne, 5, &cfg).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[1].n, 5);
        let csv = scaling_csv(&rows);
        assert!(csv.starts_with("n,mean_steps,max_steps,runs\n"));
        assert_eq!(csv.lines().count(), 3);
        assert!(scaling_experiment(&Family::Path(2), &[], KRule::Delta, 5, &cfg).unwrap().is_empty());
    }
}
