use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::SimplexId;
use crate::homology::{betti_numbers, BettiVector};

use super::fiber::{fiber_complex, StrictSncDescriptor};
use super::{blow_up, BlowUpCenter, SncConfiguration, SncError};

/// An ordered list of blow-up centers, optionally with strata along which
/// fiber complexes are declared constant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolutionScript {
    pub steps: Vec<BlowUpCenter>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub strata: Vec<StratumDeclaration>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumDeclaration {
    pub name: String,
    pub points: Vec<FiberPoint>,
}

/// The strict SNC fiber over one point of a stratum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiberPoint {
    pub point: String,
    pub fiber: StrictSncDescriptor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumVerdict {
    pub name: String,
    pub points: Vec<String>,
    pub constant: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistoryState {
    pub config: SncConfiguration,
    pub betti: BettiVector,
}

/// Component bookkeeping of one step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepLedger {
    pub index: usize,
    pub new_vertex: SimplexId,
    pub eliminated: Vec<SimplexId>,
    pub created: Vec<SimplexId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// States before the first step and after each step, one ledger per step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScriptHistory {
    pub states: Vec<HistoryState>,
    pub ledgers: Vec<StepLedger>,
    pub strata: Vec<StratumVerdict>,
}

impl ScriptHistory {
    pub fn last(&self) -> &HistoryState {
        self.states.last().expect("history holds the initial state")
    }

    /// Whether every state has the Betti numbers of the initial one.
    pub fn betti_invariant(&self) -> bool {
        let first = &self.states[0].betti;
        self.states.iter().all(|s| s.betti.agrees_with(first))
    }
}

/// A failing step, with the history up to the last completed step.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("step {index} failed: {cause}")]
pub struct ScriptFailure {
    pub index: usize,
    pub cause: SncError,
    pub history: ScriptHistory,
}

fn state(config: SncConfiguration) -> Result<HistoryState, SncError> {
    let betti = betti_numbers(config.dual(), false)?;
    Ok(HistoryState { config, betti })
}

/// Runs every step in order, then checks the declared strata. A stratum
/// failure is reported with index equal to the number of steps.
#[allow(clippy::result_large_err)]
pub fn run_script(
    initial: &SncConfiguration,
    script: &ResolutionScript,
) -> Result<ScriptHistory, ScriptFailure> {
    let mut history = ScriptHistory {
        states: Vec::new(),
        ledgers: Vec::new(),
        strata: Vec::new(),
    };
    match state(initial.clone()) {
        Ok(s) => history.states.push(s),
        Err(cause) => {
            return Err(ScriptFailure {
                index: 0,
                cause,
                history,
            })
        }
    }
    for (index, center) in script.steps.iter().enumerate() {
        let current = &history.last().config;
        let outcome =
            blow_up(current, center).and_then(|out| Ok((state(out.config)?, out.derivation)));
        match outcome {
            Ok((next, derivation)) => {
                history.ledgers.push(StepLedger {
                    index,
                    new_vertex: center.new_vertex.clone(),
                    eliminated: derivation.eliminated.into_iter().collect(),
                    created: derivation.created.into_iter().collect(),
                    note: center.note.clone(),
                });
                history.states.push(next);
            }
            Err(cause) => {
                return Err(ScriptFailure {
                    index,
                    cause,
                    history,
                })
            }
        }
    }
    let index = script.steps.len();
    for stratum in &script.strata {
        match stratum_constant(stratum) {
            Ok(verdict) => history.strata.push(verdict),
            Err(cause) => {
                return Err(ScriptFailure {
                    index,
                    cause,
                    history,
                })
            }
        }
    }
    if let Some(bad) = history.strata.iter().find(|v| !v.constant) {
        let cause = SncError::StratumNotConstant(bad.name.clone());
        return Err(ScriptFailure {
            index,
            cause,
            history,
        });
    }
    Ok(history)
}

/// Compares the fiber complexes over the declared points after stripping
/// the point suffix from every id.
fn stratum_constant(stratum: &StratumDeclaration) -> Result<StratumVerdict, SncError> {
    let mut reference = None;
    let mut constant = true;
    for p in &stratum.points {
        let fiber = fiber_complex(&p.fiber, &p.point)?;
        let suffix = format!("@{}", p.point);
        let stripped = fiber
            .complex
            .relabel(|id| {
                id.as_str()
                    .strip_suffix(suffix.as_str())
                    .unwrap_or(id.as_str())
                    .to_owned()
            })?
            .to_raw();
        match &reference {
            None => reference = Some(stripped),
            Some(r) => constant &= *r == stripped,
        }
    }
    Ok(StratumVerdict {
        name: stratum.name.clone(),
        points: stratum.points.iter().map(|p| p.point.clone()).collect(),
        constant,
    })
}
