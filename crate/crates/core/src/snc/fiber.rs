use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::complex::{DeltaComplex, RawComplex, RawSimplex, SimplexId, VertexId};

use super::SncError;

/// Dual complex of a strict SNC fiber, with the components marked strict.
///
/// Every vertex must be marked: a component that is not strict has no
/// well-defined vertex in the fiber complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "RawDescriptor", try_from = "RawDescriptor")]
pub struct StrictSncDescriptor {
    dual: DeltaComplex,
    strict: BTreeSet<VertexId>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDescriptor {
    vertices: Vec<String>,
    #[serde(default)]
    simplices: Vec<RawSimplex>,
    strict: Vec<VertexId>,
}

impl From<StrictSncDescriptor> for RawDescriptor {
    fn from(d: StrictSncDescriptor) -> Self {
        let RawComplex {
            vertices,
            simplices,
        } = d.dual.to_raw();
        RawDescriptor {
            vertices,
            simplices,
            strict: d.strict.into_iter().collect(),
        }
    }
}

impl TryFrom<RawDescriptor> for StrictSncDescriptor {
    type Error = SncError;

    fn try_from(raw: RawDescriptor) -> Result<Self, SncError> {
        let dual = DeltaComplex::from_raw(&RawComplex {
            vertices: raw.vertices,
            simplices: raw.simplices,
        })?;
        StrictSncDescriptor::new(dual, raw.strict)
    }
}

impl StrictSncDescriptor {
    pub fn new(
        dual: DeltaComplex,
        strict: impl IntoIterator<Item = VertexId>,
    ) -> Result<Self, SncError> {
        let strict: BTreeSet<VertexId> = strict.into_iter().collect();
        for id in &strict {
            if dual.get(id.as_str()).is_none_or(|s| s.dim() != 0) {
                return Err(SncError::InvalidIncidence(format!(
                    "strict component `{id}` is not a vertex"
                )));
            }
        }
        Ok(StrictSncDescriptor { dual, strict })
    }

    pub fn dual(&self) -> &DeltaComplex {
        &self.dual
    }

    pub fn strict(&self) -> &BTreeSet<VertexId> {
        &self.strict
    }
}

/// The fiber complex over `point`, with the bijection from descriptor ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberComplex {
    pub complex: DeltaComplex,
    pub correspondence: BTreeMap<SimplexId, SimplexId>,
}

/// Copies the descriptor's dual complex with every id suffixed `@point`.
pub fn fiber_complex(desc: &StrictSncDescriptor, point: &str) -> Result<FiberComplex, SncError> {
    for v in desc.dual.vertex_indices() {
        let id = desc.dual.id_of(v);
        if !desc.strict.contains(id) {
            return Err(SncError::UnmarkedComponent(id.clone()));
        }
    }
    let rename = |id: &SimplexId| format!("{id}@{point}");
    let complex = desc.dual.relabel(rename)?;
    let correspondence = desc
        .dual
        .simplices()
        .iter()
        .map(|s| (s.id().clone(), SimplexId::new(rename(s.id()))))
        .collect();
    Ok(FiberComplex {
        complex,
        correspondence,
    })
}
