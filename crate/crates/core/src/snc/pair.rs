use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{DeltaComplex, SimplexId, SimplexSubset};
use crate::homology::{betti_numbers, BettiVector};
use crate::ops::{cone_id, SimplicialMap};

use super::{blow_up, BlowUpCenter, Derivation, SncConfiguration, SncError};

/// `Δ_Z ⊆ Δ_T` through an injective map, with an optional filtration of
/// the outer complex by subcomplexes.
#[derive(Debug, Clone)]
pub struct EmbeddedPair {
    inner: SncConfiguration,
    outer: SncConfiguration,
    inclusion: SimplicialMap,
    filtration: Vec<SimplexSubset>,
}

impl EmbeddedPair {
    pub fn new(
        inner: SncConfiguration,
        outer: SncConfiguration,
        inclusion: SimplicialMap,
        filtration: Vec<SimplexSubset>,
    ) -> Result<Self, SncError> {
        if inclusion.source().as_ref() != inner.dual()
            || inclusion.target().as_ref() != outer.dual()
        {
            return Err(SncError::InvalidPair(
                "inclusion does not run from inner to outer".into(),
            ));
        }
        if !inclusion.is_injective() {
            return Err(SncError::InvalidPair("inclusion is not injective".into()));
        }
        for (i, level) in filtration.iter().enumerate() {
            if !outer.dual().is_subcomplex(level)? {
                return Err(SncError::InvalidPair(format!(
                    "filtration level {i} is not a subcomplex"
                )));
            }
            if i > 0 && !filtration[i - 1].is_subset_of(level) {
                return Err(SncError::InvalidPair(format!(
                    "filtration level {i} does not contain level {}",
                    i - 1
                )));
            }
        }
        Ok(EmbeddedPair {
            inner,
            outer,
            inclusion,
            filtration,
        })
    }

    /// Builds the inclusion from a vertex assignment.
    pub fn from_vertex_map(
        inner: SncConfiguration,
        outer: SncConfiguration,
        vertex_map: &BTreeMap<SimplexId, SimplexId>,
        resolution: &BTreeMap<SimplexId, SimplexId>,
        filtration: &[Vec<SimplexId>],
    ) -> Result<Self, SncError> {
        let inclusion = crate::ops::vertex_induced_map(
            Arc::new(inner.dual().clone()),
            Arc::new(outer.dual().clone()),
            vertex_map,
            resolution,
        )?;
        let levels = filtration
            .iter()
            .map(|ids| outer.dual().subset(ids.iter().map(SimplexId::as_str)))
            .collect::<Result<_, _>>()?;
        Self::new(inner, outer, inclusion, levels)
    }

    pub fn inner(&self) -> &SncConfiguration {
        &self.inner
    }

    pub fn outer(&self) -> &SncConfiguration {
        &self.outer
    }

    pub fn inclusion(&self) -> &SimplicialMap {
        &self.inclusion
    }

    pub fn filtration(&self) -> &[SimplexSubset] {
        &self.filtration
    }

    /// Inner filtration levels: preimages of the outer ones.
    pub fn inner_filtration(&self) -> Vec<SimplexSubset> {
        self.filtration
            .iter()
            .map(|l| self.inclusion.preimage(l))
            .collect()
    }
}

/// One blow-up applied to both sides of a pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairStep {
    pub inner: BlowUpCenter,
    pub outer: BlowUpCenter,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairScript {
    pub steps: Vec<PairStep>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairCheck {
    /// The inner `Δ_C` is the outer `Δ_C` restricted to the inner complex.
    DeltaRestricts,
    /// The inner `Δ⁰_C` contains the preimage of the outer one.
    Delta0Contains,
    /// The inclusion extends over both cone extensions, `v ↦ v`.
    InclusionExtends,
    /// Inner and outer Betti numbers agree.
    BettiAgree,
    /// Every filtration level still pulls back to the inner level.
    FiltrationPersists,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairStepRecord {
    pub index: usize,
    pub delta_restricts: bool,
    pub delta0_contains: bool,
    pub inclusion_extends: bool,
    pub betti_agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub filtration_persists: Option<bool>,
    pub inner_betti: BettiVector,
    pub outer_betti: BettiVector,
    pub inner: SncConfiguration,
    pub outer: SncConfiguration,
}

impl PairStepRecord {
    pub fn failed(&self) -> Vec<PairCheck> {
        [
            (self.delta_restricts, PairCheck::DeltaRestricts),
            (self.delta0_contains, PairCheck::Delta0Contains),
            (self.inclusion_extends, PairCheck::InclusionExtends),
            (self.betti_agree, PairCheck::BettiAgree),
            (
                self.filtration_persists.unwrap_or(true),
                PairCheck::FiltrationPersists,
            ),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, c)| c)
        .collect()
    }
}

/// First step at which some check failed, and which checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairBroken {
    pub step: usize,
    pub checks: Vec<PairCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairHistory {
    pub initial_inner_betti: BettiVector,
    pub initial_outer_betti: BettiVector,
    pub steps: Vec<PairStepRecord>,
}

impl PairHistory {
    pub fn broken(&self) -> Option<PairBroken> {
        self.steps
            .iter()
            .map(|r| (r.index, r.failed()))
            .find(|(_, f)| !f.is_empty())
            .map(|(step, checks)| PairBroken { step, checks })
    }
}

/// A step whose centers could not be applied at all.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("pair step {index} failed: {cause}")]
pub struct PairFailure {
    pub index: usize,
    pub cause: SncError,
    pub history: PairHistory,
}

/// Level update along a blow-up: drop `Δ⁰`, and when the center lies in
/// a component of the level, add the exceptional vertex and the cones over
/// the level's part of `Δ¹`.
fn update_level(
    level: &SimplexSubset,
    d: &Derivation,
    center: &BlowUpCenter,
    before: &DeltaComplex,
    after: &DeltaComplex,
) -> Result<SimplexSubset, SncError> {
    let apex = center.new_vertex.as_str();
    let contains_center = match center.sigma_c() {
        Some(sigma) => before
            .get(sigma.as_str())
            .map(|s| {
                s.vertices()
                    .iter()
                    .any(|&v| level.contains(before.id_of(v).as_str()))
            })
            .unwrap_or(false),
        None => false,
    };
    let mut ids: Vec<String> = level
        .iter()
        .filter(|id| !d.eliminated.contains(id.as_str()))
        .map(|id| id.as_str().to_owned())
        .collect();
    if contains_center {
        ids.push(apex.to_owned());
        ids.extend(
            d.instruction
                .delta1()
                .filter(|t| level.contains(t.as_str()))
                .map(|t| cone_id(apex, t.as_str())),
        );
    }
    Ok(after.subset(ids)?)
}

/// Applies each step to both sides and records the checks.
///
/// A step whose inclusion cannot be extended ends the run, since later
/// steps have no inclusion to check against.
#[allow(clippy::result_large_err)]
pub fn track_embedded_pair(
    pair: &EmbeddedPair,
    script: &PairScript,
) -> Result<PairHistory, PairFailure> {
    let initial = || -> Result<(BettiVector, BettiVector), SncError> {
        Ok((
            betti_numbers(pair.inner.dual(), false)?,
            betti_numbers(pair.outer.dual(), false)?,
        ))
    };
    let mut history = match initial() {
        Ok((i, o)) => PairHistory {
            initial_inner_betti: i,
            initial_outer_betti: o,
            steps: Vec::new(),
        },
        Err(cause) => {
            let empty = BettiVector::new(Vec::new(), false);
            let history = PairHistory {
                initial_inner_betti: empty.clone(),
                initial_outer_betti: empty,
                steps: Vec::new(),
            };
            return Err(PairFailure {
                index: 0,
                cause,
                history,
            });
        }
    };
    let mut inner = pair.inner.clone();
    let mut outer = pair.outer.clone();
    let mut inclusion = pair.inclusion.clone();
    let mut outer_levels = pair.filtration.clone();
    let mut inner_levels = pair.inner_filtration();

    for (index, step) in script.steps.iter().enumerate() {
        let result = apply_step(
            index,
            step,
            (&inner, &outer, &inclusion),
            (&inner_levels, &outer_levels),
        );
        let applied = match result {
            Ok(a) => a,
            Err(cause) => {
                return Err(PairFailure {
                    index,
                    cause,
                    history,
                })
            }
        };
        let stop = !applied.record.inclusion_extends;
        inner = applied.record.inner.clone();
        outer = applied.record.outer.clone();
        history.steps.push(applied.record);
        if stop {
            break;
        }
        inclusion = applied.inclusion.expect("extended inclusion");
        inner_levels = applied.inner_levels;
        outer_levels = applied.outer_levels;
    }
    Ok(history)
}

struct Applied {
    record: PairStepRecord,
    inclusion: Option<SimplicialMap>,
    inner_levels: Vec<SimplexSubset>,
    outer_levels: Vec<SimplexSubset>,
}

fn apply_step(
    index: usize,
    step: &PairStep,
    (inner, outer, inclusion): (&SncConfiguration, &SncConfiguration, &SimplicialMap),
    (inner_levels, outer_levels): (&[SimplexSubset], &[SimplexSubset]),
) -> Result<Applied, SncError> {
    let inner_out = blow_up(inner, &step.inner)?;
    let outer_out = blow_up(outer, &step.outer)?;
    let di = &inner_out.derivation;
    let dout = &outer_out.derivation;

    let image_of = |s: &SimplexSubset| -> Vec<SimplexId> {
        let mut v: Vec<SimplexId> = s
            .iter()
            .filter_map(|id| inclusion.apply(id.as_str()).cloned())
            .collect();
        v.sort();
        v
    };
    let image = inclusion.image();
    let mut restricted: Vec<SimplexId> = dout
        .instruction
        .delta()
        .iter()
        .filter(|id| image.contains(id.as_str()))
        .cloned()
        .collect();
    restricted.sort();
    let delta_restricts = image_of(di.instruction.delta()) == restricted;
    let delta0_contains = inclusion
        .preimage(dout.instruction.delta0())
        .is_subset_of(di.instruction.delta0());

    let new_inner = inner_out.config.dual();
    let new_outer = outer_out.config.dual();
    let vi = step.inner.new_vertex.as_str();
    let vo = step.outer.new_vertex.as_str();
    let mut map = BTreeMap::new();
    for s in new_inner.simplices() {
        let id = s.id().as_str();
        let img = if id == vi {
            Some(vo.to_owned())
        } else if let Some(base) = id
            .strip_prefix(vi)
            .and_then(|r| r.strip_prefix('#'))
            .filter(|_| di.created.contains(id))
        {
            inclusion.apply(base).map(|b| cone_id(vo, b.as_str()))
        } else {
            inclusion.apply(id).map(|t| t.as_str().to_owned())
        };
        if let Some(img) = img {
            map.insert(s.id().clone(), SimplexId::new(img));
        }
    }
    let extended = SimplicialMap::new(
        Arc::new(new_inner.clone()),
        Arc::new(new_outer.clone()),
        map,
    )
    .ok()
    .filter(SimplicialMap::is_injective);

    let inner_betti = betti_numbers(new_inner, false)?;
    let outer_betti = betti_numbers(new_outer, false)?;
    let betti_agree = inner_betti.agrees_with(&outer_betti);

    let mut next_inner_levels = Vec::new();
    let mut next_outer_levels = Vec::new();
    let mut filtration_persists = None;
    if let Some(ext) = &extended {
        if !outer_levels.is_empty() {
            let mut ok = true;
            for (li, lo) in inner_levels.iter().zip(outer_levels) {
                let ni = update_level(li, di, &step.inner, inner.dual(), new_inner)?;
                let no = update_level(lo, dout, &step.outer, outer.dual(), new_outer)?;
                ok &= ni.is_subcomplex() && no.is_subcomplex() && ext.preimage(&no) == ni;
                next_inner_levels.push(ni);
                next_outer_levels.push(no);
            }
            ok &= next_outer_levels
                .windows(2)
                .all(|w| w[0].is_subset_of(&w[1]));
            filtration_persists = Some(ok);
        }
    }

    let record = PairStepRecord {
        index,
        delta_restricts,
        delta0_contains,
        inclusion_extends: extended.is_some(),
        betti_agree,
        filtration_persists,
        inner_betti,
        outer_betti,
        inner: inner_out.config,
        outer: outer_out.config,
    };
    Ok(Applied {
        record,
        inclusion: extended,
        inner_levels: next_inner_levels,
        outer_levels: next_outer_levels,
    })
}
