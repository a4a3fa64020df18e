//! Replayable recoloring sequences and their independent verification.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::RecoloringStep;
use crate::coloring::{ColoringDoc, ColoringError, EdgeColoring};
use crate::{Color, EdgeId};

/// A starting coloring, the steps applied to it and the proper result.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub initial: EdgeColoring,
    pub steps: Vec<RecoloringStep>,
    pub final_coloring: EdgeColoring,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDoc {
    pub edge: EdgeId,
    pub from: Color,
    pub to: Color,
    pub delta: i64,
    pub lemma: String,
}

/// JSON form: `{"initial": <coloring>, "steps": [{edge, from, to, delta, lemma}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub initial: ColoringDoc,
    pub steps: Vec<StepDoc>,
}

#[derive(Debug, Error)]
pub enum WitnessError {
    #[error("step {step}: edge {edge} has color {actual}, recorded {recorded}")]
    FromMismatch {
        step: usize,
        edge: EdgeId,
        recorded: Color,
        actual: Color,
    },
    #[error("step {step}: recorded delta {recorded}, actual {actual}")]
    DeltaMismatch { step: usize, recorded: i64, actual: i64 },
    #[error("step {step}: potential rises by {delta}")]
    Increase { step: usize, delta: i64 },
    #[error("step {step}: {source}")]
    BadStep { step: usize, source: ColoringError },
    #[error("final coloring is not proper (potential {0})")]
    NotProper(u64),
    #[error(transparent)]
    Document(#[from] ColoringError),
}

impl Witness {
    pub fn to_doc(&self) -> WitnessDoc {
        WitnessDoc {
            initial: ColoringDoc::from(&self.initial),
            steps: self
                .steps
                .iter()
                .map(|s| StepDoc {
                    edge: s.edge,
                    from: s.from,
                    to: s.to,
                    delta: s.delta,
                    lemma: s.lemma.name().to_string(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("witness serializes")
    }
}

impl WitnessDoc {
    pub fn from_json(text: &str) -> Result<Self, WitnessError> {
        serde_json::from_str(text).map_err(|e| WitnessError::Document(e.into()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serializes")
    }
}

/// Replays `doc` from its initial coloring, recomputing ψ from scratch after
/// every step. Checks that each recorded `from` matches, each recorded delta
/// equals the true change, no step raises ψ and the end result is proper.
/// Returns the final coloring.
pub fn verify_witness(doc: &WitnessDoc) -> Result<EdgeColoring, WitnessError> {
    let mut c = doc.initial.clone().into_coloring()?;
    let mut psi = c.potential_from_scratch() as i64;
    for (i, s) in doc.steps.iter().enumerate() {
        if s.edge >= c.graph().edge_count() {
            return Err(WitnessError::BadStep {
                step: i,
                source: ColoringError::NoSuchEdge {
                    edge: s.edge,
                    m: c.graph().edge_count(),
                },
            });
        }
        let actual_from = c.color(s.edge);
        if actual_from != s.from {
            return Err(WitnessError::FromMismatch {
                step: i,
                edge: s.edge,
                recorded: s.from,
                actual: actual_from,
            });
        }
        c.apply_recoloring(s.edge, s.to)
            .map_err(|source| WitnessError::BadStep { step: i, source })?;
        let next = c.potential_from_scratch() as i64;
        let actual = next - psi;
        if actual != s.delta {
            return Err(WitnessError::DeltaMismatch {
                step: i,
                recorded: s.delta,
                actual,
            });
        }
        if actual > 0 {
            return Err(WitnessError::Increase { step: i, delta: actual });
        }
        psi = next;
    }
    if psi != 0 {
        return Err(WitnessError::NotProper(psi as u64));
    }
    Ok(c)
}
