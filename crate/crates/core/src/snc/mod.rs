//! Combinatorial blow-up calculus on dual complexes of SNC configurations.
//!
//! Incidence data (which strata lie in or meet a center) is input. The
//! engine checks it against the containment laws of each center kind and
//! turns it into a cone extension of the dual complex.

mod fiber;
mod pair;
mod script;

pub use fiber::{fiber_complex, FiberComplex, StrictSncDescriptor};
pub use pair::{
    track_embedded_pair, EmbeddedPair, PairBroken, PairCheck, PairFailure, PairHistory, PairScript,
    PairStep, PairStepRecord,
};
pub use script::{
    run_script, FiberPoint, HistoryState, ResolutionScript, ScriptFailure, ScriptHistory,
    StepLedger, StratumDeclaration, StratumVerdict,
};

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{
    ComplexError, DeltaComplex, RawComplex, RawSimplex, SimplexId, SimplexSubset, VertexId,
};
use crate::homology::HomologyError;
use crate::ops::{
    cone_extension, cone_id, greedy_collapse, ConeExtensionInstruction, MapError, OpsError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SncError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Ops(#[from] OpsError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error("simplex `{0}` has no component metadata")]
    MissingMeta(SimplexId),
    #[error("metadata given for `{0}`, which is not a simplex of the dual complex")]
    StrayMeta(SimplexId),
    #[error("stratum of `{coface}` has larger dimension than the stratum of its face `{face}`")]
    StratumOrder { face: SimplexId, coface: SimplexId },
    #[error("stratum of `{0}` is too large for the ambient dimension")]
    CodimensionViolation(SimplexId),
    #[error("invalid incidence data: {0}")]
    InvalidIncidence(String),
    #[error("center of dimension {center_dim} does not fit stratum `{sigma}` of dimension {stratum_dim}")]
    DimensionInconsistent {
        sigma: SimplexId,
        center_dim: usize,
        stratum_dim: usize,
    },
    #[error("component `{0}` is not marked strict")]
    UnmarkedComponent(SimplexId),
    #[error("invalid embedded pair: {0}")]
    InvalidPair(String),
    #[error("fiber complexes differ across stratum `{0}`")]
    StratumNotConstant(String),
    #[error("simplex diff does not match the eliminated/created ledger")]
    LedgerMismatch,
}

/// Name and dimension of the stratum `D_τ` attached to a simplex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentMeta {
    pub name: String,
    pub dim: usize,
}

/// A dual complex with stratum metadata.
///
/// In the divisor regime every stratum satisfies
/// `dim D_τ + dim τ ≤ ambient_dim − 1`; for SNC varieties the bound is
/// `ambient_dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "RawConfiguration", try_from = "RawConfiguration")]
pub struct SncConfiguration {
    dual: DeltaComplex,
    component_meta: BTreeMap<String, ComponentMeta>,
    ambient_dim: usize,
    divisor_regime: bool,
}

/// Configuration file schema: the complex schema plus stratum data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfiguration {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub simplices: Vec<RawSimplex>,
    pub component_meta: BTreeMap<String, ComponentMeta>,
    pub ambient_dim: usize,
    pub divisor_regime: bool,
}

impl From<SncConfiguration> for RawConfiguration {
    fn from(cfg: SncConfiguration) -> Self {
        cfg.to_raw()
    }
}

impl TryFrom<RawConfiguration> for SncConfiguration {
    type Error = SncError;

    fn try_from(raw: RawConfiguration) -> Result<Self, SncError> {
        SncConfiguration::from_raw(&raw)
    }
}

impl SncConfiguration {
    pub fn new(
        dual: DeltaComplex,
        component_meta: BTreeMap<String, ComponentMeta>,
        ambient_dim: usize,
        divisor_regime: bool,
    ) -> Result<Self, SncError> {
        for key in component_meta.keys() {
            if !dual.contains(key) {
                return Err(SncError::StrayMeta(key.as_str().into()));
            }
        }
        let bound = if divisor_regime {
            ambient_dim.checked_sub(1)
        } else {
            Some(ambient_dim)
        };
        for s in dual.simplices() {
            let meta = component_meta
                .get(s.id().as_str())
                .ok_or_else(|| SncError::MissingMeta(s.id().clone()))?;
            if bound.is_none_or(|b| meta.dim + s.dim() > b) {
                return Err(SncError::CodimensionViolation(s.id().clone()));
            }
            for &f in s.facets() {
                let face = dual.id_of(f);
                if component_meta[face.as_str()].dim < meta.dim {
                    return Err(SncError::StratumOrder {
                        face: face.clone(),
                        coface: s.id().clone(),
                    });
                }
            }
        }
        Ok(SncConfiguration {
            dual,
            component_meta,
            ambient_dim,
            divisor_regime,
        })
    }

    pub fn from_raw(raw: &RawConfiguration) -> Result<Self, SncError> {
        let dual = DeltaComplex::from_raw(&RawComplex {
            vertices: raw.vertices.clone(),
            simplices: raw.simplices.clone(),
        })?;
        Self::new(
            dual,
            raw.component_meta.clone(),
            raw.ambient_dim,
            raw.divisor_regime,
        )
    }

    pub fn to_raw(&self) -> RawConfiguration {
        let RawComplex {
            vertices,
            simplices,
        } = self.dual.to_raw();
        RawConfiguration {
            vertices,
            simplices,
            component_meta: self.component_meta.clone(),
            ambient_dim: self.ambient_dim,
            divisor_regime: self.divisor_regime,
        }
    }

    pub fn dual(&self) -> &DeltaComplex {
        &self.dual
    }

    pub fn meta(&self, id: &str) -> Option<&ComponentMeta> {
        self.component_meta.get(id)
    }

    pub fn component_meta(&self) -> &BTreeMap<String, ComponentMeta> {
        &self.component_meta
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn divisor_regime(&self) -> bool {
        self.divisor_regime
    }

    fn stratum_dim(&self, id: &SimplexId) -> Result<usize, SncError> {
        self.meta(id.as_str())
            .map(|m| m.dim)
            .ok_or_else(|| SncError::Complex(ComplexError::UnknownSimplex(id.clone())))
    }
}

/// How the center sits relative to the configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CenterKind {
    /// The center is the stratum of `sigma_c`.
    IntersectionComponent { sigma_c: SimplexId },
    /// The center lies strictly inside the stratum of `sigma_c`, the
    /// smallest stratum containing it.
    InsideComponent { sigma_c: SimplexId },
    /// The center is not contained in the divisor.
    Transverse,
}

/// A blow-up center with optional explicit incidence data.
///
/// `delta` lists the simplices whose strata meet the center, `delta0` those
/// whose strata lie inside it. Missing data is filled from the kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "RawCenter", try_from = "RawCenter")]
pub struct BlowUpCenter {
    pub kind: CenterKind,
    pub delta: Option<Vec<SimplexId>>,
    pub delta0: Option<Vec<SimplexId>>,
    pub new_vertex: VertexId,
    pub center_dim: Option<usize>,
    pub note: Option<String>,
}

impl BlowUpCenter {
    pub fn new(kind: CenterKind, new_vertex: impl Into<VertexId>) -> Self {
        BlowUpCenter {
            kind,
            delta: None,
            delta0: None,
            new_vertex: new_vertex.into(),
            center_dim: None,
            note: None,
        }
    }

    pub fn intersection(sigma_c: &str, new_vertex: &str) -> Self {
        Self::new(
            CenterKind::IntersectionComponent {
                sigma_c: sigma_c.into(),
            },
            new_vertex,
        )
    }

    pub fn inside(sigma_c: &str, new_vertex: &str) -> Self {
        Self::new(
            CenterKind::InsideComponent {
                sigma_c: sigma_c.into(),
            },
            new_vertex,
        )
    }

    pub fn transverse(new_vertex: &str) -> Self {
        Self::new(CenterKind::Transverse, new_vertex)
    }

    pub fn with_delta<S: AsRef<str>>(mut self, ids: impl IntoIterator<Item = S>) -> Self {
        self.delta = Some(ids.into_iter().map(|s| s.as_ref().into()).collect());
        self
    }

    pub fn with_delta0<S: AsRef<str>>(mut self, ids: impl IntoIterator<Item = S>) -> Self {
        self.delta0 = Some(ids.into_iter().map(|s| s.as_ref().into()).collect());
        self
    }

    pub fn with_center_dim(mut self, dim: usize) -> Self {
        self.center_dim = Some(dim);
        self
    }

    pub fn sigma_c(&self) -> Option<&SimplexId> {
        match &self.kind {
            CenterKind::IntersectionComponent { sigma_c }
            | CenterKind::InsideComponent { sigma_c } => Some(sigma_c),
            CenterKind::Transverse => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum KindTag {
    IntersectionComponent,
    InsideComponent,
    Transverse,
}

/// Script step schema for a center.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCenter {
    kind: KindTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sigma_c: Option<SimplexId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    delta: Option<Vec<SimplexId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    delta0: Option<Vec<SimplexId>>,
    new_vertex: VertexId,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    center_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

impl From<BlowUpCenter> for RawCenter {
    fn from(c: BlowUpCenter) -> Self {
        let (kind, sigma_c) = match c.kind {
            CenterKind::IntersectionComponent { sigma_c } => {
                (KindTag::IntersectionComponent, Some(sigma_c))
            }
            CenterKind::InsideComponent { sigma_c } => (KindTag::InsideComponent, Some(sigma_c)),
            CenterKind::Transverse => (KindTag::Transverse, None),
        };
        RawCenter {
            kind,
            sigma_c,
            delta: c.delta,
            delta0: c.delta0,
            new_vertex: c.new_vertex,
            center_dim: c.center_dim,
            note: c.note,
        }
    }
}

impl TryFrom<RawCenter> for BlowUpCenter {
    type Error = String;

    fn try_from(raw: RawCenter) -> Result<Self, String> {
        let kind = match (raw.kind, raw.sigma_c) {
            (KindTag::IntersectionComponent, Some(sigma_c)) => {
                CenterKind::IntersectionComponent { sigma_c }
            }
            (KindTag::InsideComponent, Some(sigma_c)) => CenterKind::InsideComponent { sigma_c },
            (KindTag::Transverse, None) => CenterKind::Transverse,
            (KindTag::Transverse, Some(_)) => {
                return Err("a transverse center takes no sigma_c".into())
            }
            (_, None) => return Err("sigma_c is required for this kind of center".into()),
        };
        Ok(BlowUpCenter {
            kind,
            delta: raw.delta,
            delta0: raw.delta0,
            new_vertex: raw.new_vertex,
            center_dim: raw.center_dim,
            note: raw.note,
        })
    }
}

/// A derived cone extension together with the component bookkeeping it
/// implies: the strata inside the center disappear, and the exceptional
/// divisor contributes the cone apex and the cones over `Δ \ Δ⁰`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub instruction: ConeExtensionInstruction,
    pub eliminated: BTreeSet<SimplexId>,
    pub created: BTreeSet<SimplexId>,
}

fn subset_or(
    cfg: &SncConfiguration,
    given: &Option<Vec<SimplexId>>,
    default: impl FnOnce() -> Result<SimplexSubset, SncError>,
) -> Result<(SimplexSubset, bool), SncError> {
    match given {
        Some(ids) => Ok((cfg.dual.subset(ids.iter().map(SimplexId::as_str))?, true)),
        None => Ok((default()?, false)),
    }
}

fn invalid(msg: impl Into<String>) -> SncError {
    SncError::InvalidIncidence(msg.into())
}

/// Turns a center into the cone extension describing its blow-up.
pub fn derive_cone_extension(
    cfg: &SncConfiguration,
    center: &BlowUpCenter,
) -> Result<Derivation, SncError> {
    let dual = &cfg.dual;
    let (delta, delta0) = match &center.kind {
        CenterKind::IntersectionComponent { sigma_c } => {
            let stratum_dim = cfg.stratum_dim(sigma_c)?;
            if let Some(d) = center.center_dim {
                if d > stratum_dim {
                    return Err(SncError::DimensionInconsistent {
                        sigma: sigma_c.clone(),
                        center_dim: d,
                        stratum_dim,
                    });
                }
            }
            let closed = dual.closed_star(sigma_c.as_str())?;
            let star = dual.star(sigma_c.as_str())?;
            let (delta, _) = subset_or(cfg, &center.delta, || Ok(closed.clone()))?;
            if delta != closed {
                return Err(invalid(format!(
                    "delta must be the closed star of `{sigma_c}` for an intersection component"
                )));
            }
            let (delta0, given) =
                subset_or(cfg, &center.delta0, || default_delta0(cfg, &closed, &star))?;
            if given {
                sanity(&delta, &delta0)?;
                if cfg.divisor_regime && delta0 != star {
                    return Err(invalid(format!(
                        "for an SNC divisor delta0 must be the star of `{sigma_c}`"
                    )));
                }
                if !star.is_subset_of(&delta0) || !delta0.is_subset_of(&closed) {
                    return Err(invalid(format!(
                        "delta0 must lie between the star and the closed star of `{sigma_c}`"
                    )));
                }
            }
            (delta, delta0)
        }
        CenterKind::InsideComponent { sigma_c } => {
            let stratum_dim = cfg.stratum_dim(sigma_c)?;
            if let Some(d) = center.center_dim {
                if d >= stratum_dim {
                    return Err(SncError::DimensionInconsistent {
                        sigma: sigma_c.clone(),
                        center_dim: d,
                        stratum_dim,
                    });
                }
            }
            let (delta0, _) = subset_or(cfg, &center.delta0, || Ok(SimplexSubset::empty()))?;
            if !delta0.is_empty() {
                return Err(invalid(
                    "a center inside a component contains no stratum; delta0 must be empty",
                ));
            }
            let (delta, _) = subset_or(cfg, &center.delta, || {
                Ok(dual.closure(&dual.subset([sigma_c.as_str()])?)?)
            })?;
            sanity(&delta, &delta0)?;
            let closed = dual.closed_star(sigma_c.as_str())?;
            let star = dual.star(sigma_c.as_str())?;
            if delta.is_empty() || !delta.is_subset_of(&closed) {
                return Err(invalid(format!(
                    "delta must be a nonempty part of the closed star of `{sigma_c}`"
                )));
            }
            for id in delta.iter() {
                let cofaces = dual.star(id.as_str())?;
                let is_maximal = cofaces
                    .iter()
                    .all(|c| c == id || !delta.contains(c.as_str()));
                if is_maximal && !star.contains(id.as_str()) {
                    return Err(invalid(format!(
                        "maximal simplex `{id}` of delta does not contain `{sigma_c}`"
                    )));
                }
            }
            (delta, delta0)
        }
        CenterKind::Transverse => {
            if !cfg.divisor_regime {
                return Err(invalid(
                    "transverse centers are modeled for SNC divisors only",
                ));
            }
            let (delta0, _) = subset_or(cfg, &center.delta0, || Ok(SimplexSubset::empty()))?;
            if !delta0.is_empty() {
                return Err(invalid(
                    "a transverse center contains no stratum; delta0 must be empty",
                ));
            }
            let (delta, _) = subset_or(cfg, &center.delta, || Ok(SimplexSubset::empty()))?;
            sanity(&delta, &delta0)?;
            (delta, delta0)
        }
    };

    for tau in delta.iter().filter(|t| !delta0.contains(t.as_str())) {
        if cfg.stratum_dim(tau)? == 0 {
            return Err(invalid(format!(
                "the center meets the point stratum of `{tau}` without containing it"
            )));
        }
    }
    let instruction = ConeExtensionInstruction::new(
        dual,
        delta.iter().map(SimplexId::as_str),
        delta0.iter().map(SimplexId::as_str),
        center.new_vertex.clone(),
    )?;
    let eliminated: BTreeSet<SimplexId> = delta0.iter().cloned().collect();
    let apex = center.new_vertex.as_str();
    let created: BTreeSet<SimplexId> = std::iter::once(center.new_vertex.clone())
        .chain(
            instruction
                .delta1()
                .map(|t| cone_id(apex, t.as_str()).into()),
        )
        .collect();
    Ok(Derivation {
        instruction,
        eliminated,
        created,
    })
}

/// `Star(σ_C)` together with the star of every point stratum in the closed
/// star: a point stratum meeting the center lies inside it.
fn default_delta0(
    cfg: &SncConfiguration,
    closed: &SimplexSubset,
    star: &SimplexSubset,
) -> Result<SimplexSubset, SncError> {
    let points: Vec<&str> = closed
        .iter()
        .map(SimplexId::as_str)
        .filter(|id| cfg.meta(id).is_some_and(|m| m.dim == 0))
        .chain(star.iter().map(SimplexId::as_str))
        .collect();
    Ok(cfg.dual.star_closure(&cfg.dual.subset(points)?)?)
}

fn sanity(delta: &SimplexSubset, delta0: &SimplexSubset) -> Result<(), SncError> {
    if !delta.is_subcomplex() {
        return Err(invalid("delta is not a subcomplex"));
    }
    if !delta0.is_star_closed() {
        return Err(invalid("delta0 is not star-closed"));
    }
    if !delta0.is_subset_of(delta) {
        return Err(invalid("delta0 is not contained in delta"));
    }
    Ok(())
}

/// The configuration after a blow-up, with the derivation that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowUpOutcome {
    pub config: SncConfiguration,
    pub derivation: Derivation,
    /// For a center inside a component: whether greedy collapse takes the
    /// new dual complex back onto the old one.
    pub collapses_back: Option<bool>,
}

/// Name given to the exceptional divisor with apex `v`.
pub fn exceptional_name(v: &str) -> String {
    format!("E({v})")
}

/// Applies the blow-up of `center` to `cfg`.
///
/// The exceptional divisor gets dimension `ambient_dim − 1`; the stratum of
/// a new simplex `v#τ` is the exceptional divisor restricted to `D_τ`, of
/// dimension `dim D_τ − 1`. With a center dimension `c` supplied the
/// codimension of the center inside `D_τ`, at least 1, is subtracted
/// instead, so the dimension becomes `min(c, dim D_τ − 1)`. Both floor at 0.
pub fn blow_up(cfg: &SncConfiguration, center: &BlowUpCenter) -> Result<BlowUpOutcome, SncError> {
    let derivation = derive_cone_extension(cfg, center)?;
    let dual = cone_extension(&cfg.dual, &derivation.instruction)?;

    let before: BTreeSet<&SimplexId> = cfg.dual.simplices().iter().map(|s| s.id()).collect();
    let after: BTreeSet<&SimplexId> = dual.simplices().iter().map(|s| s.id()).collect();
    let removed: BTreeSet<SimplexId> = before.difference(&after).map(|s| (*s).clone()).collect();
    let added: BTreeSet<SimplexId> = after.difference(&before).map(|s| (*s).clone()).collect();
    if removed != derivation.eliminated || added != derivation.created {
        return Err(SncError::LedgerMismatch);
    }

    let apex = center.new_vertex.as_str();
    let exc = exceptional_name(apex);
    let mut meta: BTreeMap<String, ComponentMeta> = cfg
        .component_meta
        .iter()
        .filter(|(id, _)| !derivation.eliminated.contains(id.as_str()))
        .map(|(id, m)| (id.clone(), m.clone()))
        .collect();
    meta.insert(
        apex.to_owned(),
        ComponentMeta {
            name: exc.clone(),
            dim: cfg.ambient_dim.saturating_sub(1),
        },
    );
    for tau in derivation.instruction.delta1() {
        let m = &cfg.component_meta[tau.as_str()];
        let codim = center
            .center_dim
            .map_or(1, |c| m.dim.saturating_sub(c).max(1));
        meta.insert(
            cone_id(apex, tau.as_str()),
            ComponentMeta {
                name: format!("{exc}∩{}", m.name),
                dim: m.dim.saturating_sub(codim),
            },
        );
    }
    let config = SncConfiguration::new(dual, meta, cfg.ambient_dim, cfg.divisor_regime)?;
    let collapses_back = match center.kind {
        CenterKind::InsideComponent { .. } => {
            let old = config.dual.subset(before.iter().map(|s| s.as_str()))?;
            Some(greedy_collapse(&config.dual, &old)?.certificate().is_some())
        }
        _ => None,
    };
    Ok(BlowUpOutcome {
        config,
        derivation,
        collapses_back,
    })
}
