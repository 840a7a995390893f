use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{DeltaComplex, SimplexId, SimplexSubset};

use super::OpsError;

/// Removal of a free face together with its unique coface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseStep {
    pub free_face: SimplexId,
    pub coface: SimplexId,
}

/// A sequence of elementary collapses from a complex down to `target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseCertificate {
    pub target: Vec<SimplexId>,
    pub steps: Vec<CollapseStep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum CollapseOutcome {
    Collapsed(CollapseCertificate),
    /// No elementary collapse applies but simplices outside the target
    /// remain. This does not show that no collapse sequence exists.
    Stuck {
        steps: Vec<CollapseStep>,
        remaining: Vec<SimplexId>,
    },
}

impl CollapseOutcome {
    pub fn certificate(&self) -> Option<&CollapseCertificate> {
        match self {
            CollapseOutcome::Collapsed(c) => Some(c),
            CollapseOutcome::Stuck { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CollapseError {
    #[error("step {index}: {reason}")]
    InvalidStep { index: usize, reason: String },
    #[error("collapses end at a complex different from the target")]
    TargetMismatch,
    #[error("unknown simplex `{0}`")]
    UnknownSimplex(SimplexId),
}

struct Live<'a> {
    complex: &'a DeltaComplex,
    alive: Vec<bool>,
    live_cofacets: Vec<usize>,
}

impl<'a> Live<'a> {
    fn new(complex: &'a DeltaComplex) -> Self {
        let live_cofacets = (0..complex.len())
            .map(|i| complex.cofacets(i).len())
            .collect();
        Live {
            complex,
            alive: vec![true; complex.len()],
            live_cofacets,
        }
    }

    /// The unique live cofacet, when there is exactly one. In a subcomplex a
    /// simplex with a single live cofacet has no other live coface.
    fn unique_coface(&self, i: usize) -> Option<usize> {
        if !self.alive[i] || self.live_cofacets[i] != 1 {
            return None;
        }
        self.complex
            .cofacets(i)
            .iter()
            .copied()
            .find(|&c| self.alive[c])
    }

    fn remove(&mut self, i: usize) {
        self.alive[i] = false;
        for &f in self.complex.simplex(i).facets() {
            self.live_cofacets[f] -= 1;
        }
    }
}

/// Greedy elementary collapses from `complex` to the subcomplex `target`.
///
/// At every step the free face of lowest dimension is collapsed, ties broken
/// by id order.
pub fn greedy_collapse(
    complex: &DeltaComplex,
    target: &SimplexSubset,
) -> Result<CollapseOutcome, OpsError> {
    if !complex.is_subcomplex(target)? {
        return Err(OpsError::NotSubcomplex("target"));
    }
    let keep = complex.mask_of(target)?;
    let mut live = Live::new(complex);
    let is_candidate =
        |live: &Live<'_>, i: usize| !keep[i] && live.unique_coface(i).is_some_and(|c| !keep[c]);
    // Indices are ordered by (dim, id), matching the tie-break rule.
    let mut candidates: BTreeSet<usize> = (0..complex.len())
        .filter(|&i| is_candidate(&live, i))
        .collect();
    let mut steps = Vec::new();
    while let Some(face) = candidates.pop_first() {
        if !is_candidate(&live, face) {
            continue;
        }
        let coface = live.unique_coface(face).expect("candidate has a coface");
        live.remove(coface);
        live.remove(face);
        candidates.remove(&coface);
        steps.push(CollapseStep {
            free_face: complex.id_of(face).clone(),
            coface: complex.id_of(coface).clone(),
        });
        let touched = complex
            .simplex(coface)
            .facets()
            .iter()
            .chain(complex.simplex(face).facets())
            .copied()
            .collect::<Vec<_>>();
        for t in touched {
            if is_candidate(&live, t) {
                candidates.insert(t);
            } else {
                candidates.remove(&t);
            }
        }
    }
    let remaining: Vec<SimplexId> = (0..complex.len())
        .filter(|&i| live.alive[i] && !keep[i])
        .map(|i| complex.id_of(i).clone())
        .collect();
    if remaining.is_empty() {
        Ok(CollapseOutcome::Collapsed(CollapseCertificate {
            target: target.iter().cloned().collect(),
            steps,
        }))
    } else {
        Ok(CollapseOutcome::Stuck { steps, remaining })
    }
}

impl CollapseCertificate {
    /// Replays the steps on a fresh copy of `complex`.
    pub fn verify(&self, complex: &DeltaComplex) -> Result<(), CollapseError> {
        let mut live = Live::new(complex);
        let lookup = |id: &SimplexId| {
            complex
                .index_of(id.as_str())
                .ok_or_else(|| CollapseError::UnknownSimplex(id.clone()))
        };
        for (index, step) in self.steps.iter().enumerate() {
            let face = lookup(&step.free_face)?;
            let coface = lookup(&step.coface)?;
            let invalid = |reason: &str| CollapseError::InvalidStep {
                index,
                reason: reason.to_owned(),
            };
            if !live.alive[face] || !live.alive[coface] {
                return Err(invalid("simplex already removed"));
            }
            if complex.simplex(coface).dim() != complex.simplex(face).dim() + 1
                || !complex.cofacets(face).contains(&coface)
            {
                return Err(invalid("coface does not have the free face as a facet"));
            }
            if live.unique_coface(face) != Some(coface) {
                return Err(invalid("face is not free"));
            }
            live.remove(coface);
            live.remove(face);
        }
        let mut expected = vec![false; complex.len()];
        for id in &self.target {
            expected[lookup(id)?] = true;
        }
        if expected != live.alive {
            return Err(CollapseError::TargetMismatch);
        }
        Ok(())
    }
}
