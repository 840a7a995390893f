use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use thiserror::Error;

use crate::complex::{DeltaComplex, SimplexId, SimplexSubset, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("vertex `{0}` has no assigned image")]
    UnassignedVertex(VertexId),
    #[error("`{0}` is not a simplex of the complex it is used with")]
    UnknownSimplex(SimplexId),
    #[error("no target simplex spans the image of `{0}`")]
    NoTargetSimplex(SimplexId),
    #[error("image of `{source_simplex}` is ambiguous among {candidates:?}")]
    AmbiguousTarget {
        source_simplex: SimplexId,
        candidates: Vec<SimplexId>,
    },
    #[error("image of facet `{facet}` is not a face of the image of `{source_simplex}`")]
    FaceIncompatibility {
        source_simplex: SimplexId,
        facet: SimplexId,
    },
}

/// A map of complexes given on vertices and on simplices.
///
/// Each simplex maps to a target simplex spanned by the image of its
/// vertices (repeats collapsed), and images of facets are faces of the
/// image.
#[derive(Debug, Clone)]
pub struct SimplicialMap {
    source: Arc<DeltaComplex>,
    target: Arc<DeltaComplex>,
    vertex_map: BTreeMap<VertexId, VertexId>,
    simplex_map: BTreeMap<SimplexId, SimplexId>,
}

impl SimplicialMap {
    /// Validates a map given on all simplices. The vertex map is read off
    /// the 0-simplices.
    pub fn new(
        source: Arc<DeltaComplex>,
        target: Arc<DeltaComplex>,
        simplex_map: BTreeMap<SimplexId, SimplexId>,
    ) -> Result<Self, MapError> {
        let mut images = vec![usize::MAX; source.len()];
        for (i, s) in source.simplices().iter().enumerate() {
            let img = simplex_map
                .get(s.id())
                .ok_or_else(|| MapError::NoTargetSimplex(s.id().clone()))?;
            images[i] = target
                .index_of(img.as_str())
                .ok_or_else(|| MapError::UnknownSimplex(img.clone()))?;
        }
        for id in simplex_map.keys() {
            if !source.contains(id.as_str()) {
                return Err(MapError::UnknownSimplex(id.clone()));
            }
        }
        for (i, s) in source.simplices().iter().enumerate() {
            check_simplex(&source, &target, &images, i)?;
            if s.dim() == 0 && target.simplex(images[i]).dim() != 0 {
                return Err(MapError::NoTargetSimplex(s.id().clone()));
            }
        }
        let vertex_map = source
            .vertex_indices()
            .map(|v| (source.id_of(v).clone(), target.id_of(images[v]).clone()))
            .collect();
        Ok(SimplicialMap {
            source,
            target,
            vertex_map,
            simplex_map,
        })
    }

    pub fn identity(complex: Arc<DeltaComplex>) -> Self {
        let simplex_map = complex
            .simplices()
            .iter()
            .map(|s| (s.id().clone(), s.id().clone()))
            .collect();
        let vertex_map = complex
            .vertex_indices()
            .map(|v| (complex.id_of(v).clone(), complex.id_of(v).clone()))
            .collect();
        SimplicialMap {
            source: complex.clone(),
            target: complex,
            vertex_map,
            simplex_map,
        }
    }

    pub fn source(&self) -> &Arc<DeltaComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<DeltaComplex> {
        &self.target
    }

    pub fn vertex_map(&self) -> &BTreeMap<VertexId, VertexId> {
        &self.vertex_map
    }

    pub fn simplex_map(&self) -> &BTreeMap<SimplexId, SimplexId> {
        &self.simplex_map
    }

    pub fn apply(&self, id: &str) -> Option<&SimplexId> {
        self.simplex_map.get(id)
    }

    /// Whether distinct simplices have distinct images.
    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.simplex_map.values().all(|v| seen.insert(v))
    }

    pub fn image(&self) -> SimplexSubset {
        self.target
            .subset(self.simplex_map.values().map(SimplexId::as_str))
            .expect("images are target simplices")
    }

    /// Ids of source simplices mapping into `subset`.
    pub fn preimage(&self, subset: &SimplexSubset) -> SimplexSubset {
        self.source
            .subset(
                self.simplex_map
                    .iter()
                    .filter(|(_, img)| subset.contains(img.as_str()))
                    .map(|(s, _)| s.as_str()),
            )
            .expect("keys are source simplices")
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &SimplicialMap) -> Result<SimplicialMap, MapError> {
        let simplex_map = self
            .simplex_map
            .iter()
            .map(|(s, mid)| {
                next.apply(mid.as_str())
                    .map(|img| (s.clone(), img.clone()))
                    .ok_or_else(|| MapError::UnknownSimplex(mid.clone()))
            })
            .collect::<Result<_, _>>()?;
        SimplicialMap::new(self.source.clone(), next.target.clone(), simplex_map)
    }
}

/// Checks one simplex: its image spans exactly the image vertex set, and
/// facet images are faces of its image.
fn check_simplex(
    source: &DeltaComplex,
    target: &DeltaComplex,
    images: &[usize],
    i: usize,
) -> Result<(), MapError> {
    let s = source.simplex(i);
    let mut verts: Vec<usize> = s.vertices().iter().map(|&v| images[v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let img = target.simplex(images[i]);
    if img.vertices() != verts.as_slice() {
        return Err(MapError::NoTargetSimplex(s.id().clone()));
    }
    for &f in s.facets() {
        if !target.is_face(images[f], images[i]) {
            return Err(MapError::FaceIncompatibility {
                source_simplex: s.id().clone(),
                facet: source.id_of(f).clone(),
            });
        }
    }
    Ok(())
}

/// Extends a vertex assignment to a simplicial map.
///
/// Each source simplex maps to the target simplex on the image vertex set.
/// When several target simplices share that vertex set, candidates whose
/// faces do not match the images of the facets are discarded; `resolution`
/// picks the image explicitly where that still leaves a choice.
pub fn vertex_induced_map(
    source: Arc<DeltaComplex>,
    target: Arc<DeltaComplex>,
    assignment: &BTreeMap<VertexId, VertexId>,
    resolution: &BTreeMap<SimplexId, SimplexId>,
) -> Result<SimplicialMap, MapError> {
    for id in assignment.keys().chain(resolution.keys()) {
        if !source.contains(id.as_str()) {
            return Err(MapError::UnknownSimplex(id.clone()));
        }
    }
    let mut by_vertices: HashMap<&[usize], Vec<usize>> = HashMap::new();
    for (i, s) in target.simplices().iter().enumerate() {
        by_vertices.entry(s.vertices()).or_default().push(i);
    }

    let mut images = vec![usize::MAX; source.len()];
    for (i, s) in source.simplices().iter().enumerate() {
        if s.dim() == 0 {
            let img = assignment
                .get(s.id())
                .ok_or_else(|| MapError::UnassignedVertex(s.id().clone()))?;
            let t = target
                .index_of(img.as_str())
                .filter(|&t| target.simplex(t).dim() == 0)
                .ok_or_else(|| MapError::UnknownSimplex(img.clone()))?;
            images[i] = t;
            continue;
        }
        let compatible = |cand: usize| s.facets().iter().all(|&f| target.is_face(images[f], cand));
        if let Some(img) = resolution.get(s.id()) {
            images[i] = target
                .index_of(img.as_str())
                .ok_or_else(|| MapError::UnknownSimplex(img.clone()))?;
            check_simplex(&source, &target, &images, i)?;
            continue;
        }
        let mut verts: Vec<usize> = s.vertices().iter().map(|&v| images[v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let candidates = by_vertices
            .get(verts.as_slice())
            .ok_or_else(|| MapError::NoTargetSimplex(s.id().clone()))?;
        let fitting: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&c| compatible(c))
            .collect();
        match fitting.as_slice() {
            [one] => images[i] = *one,
            [] => {
                let facet = s
                    .facets()
                    .iter()
                    .find(|&&f| !target.is_face(images[f], candidates[0]))
                    .map(|&f| source.id_of(f).clone())
                    .expect("some facet rules out the candidate");
                return Err(MapError::FaceIncompatibility {
                    source_simplex: s.id().clone(),
                    facet,
                });
            }
            many => {
                return Err(MapError::AmbiguousTarget {
                    source_simplex: s.id().clone(),
                    candidates: many.iter().map(|&c| target.id_of(c).clone()).collect(),
                })
            }
        }
    }
    let simplex_map = images
        .iter()
        .enumerate()
        .map(|(i, &t)| (source.id_of(i).clone(), target.id_of(t).clone()))
        .collect();
    SimplicialMap::new(source, target, simplex_map)
}
