//! Finite generalized simplicial complexes (Δ-complexes).
//!
//! A simplex is described by its list of facets rather than by its vertex
//! set, so two distinct simplices may span the same vertices. Vertex tuples
//! are derived during validation and always sorted by the global vertex
//! order, which is the byte-lexicographic order of the labels.

use std::borrow::Borrow;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Identifier of a simplex, unique within its complex.
///
/// 0-simplices are identified with their vertex label.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SimplexId(String);

/// Vertices are 0-simplices and share the id space.
pub type VertexId = SimplexId;

impl SimplexId {
    pub fn new(label: impl Into<String>) -> Self {
        SimplexId(label.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for SimplexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for SimplexId {
    fn from(s: &str) -> Self {
        SimplexId(s.to_owned())
    }
}

impl From<String> for SimplexId {
    fn from(s: String) -> Self {
        SimplexId(s)
    }
}

impl From<&SimplexId> for SimplexId {
    fn from(s: &SimplexId) -> Self {
        s.clone()
    }
}

impl Borrow<str> for SimplexId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("simplex `{simplex}` lists facet `{facet}` which does not exist")]
    DanglingFacet {
        simplex: SimplexId,
        facet: SimplexId,
    },
    #[error("simplex `{simplex}`: {detail}")]
    DimensionMismatch { simplex: SimplexId, detail: String },
    #[error("simplex `{simplex}` lists facet `{facet}` more than once")]
    RepeatedFacet {
        simplex: SimplexId,
        facet: SimplexId,
    },
    #[error(
        "simplex `{simplex}`: facet vertex sets are not the codimension-one faces of a simplex"
    )]
    IncompatibleVertexTuples { simplex: SimplexId },
    #[error("simplex `{simplex}`: facets `{first}` and `{second}` do not share their common face")]
    InconsistentGluing {
        simplex: SimplexId,
        first: SimplexId,
        second: SimplexId,
    },
    #[error("id `{0}` is defined more than once")]
    DuplicateId(SimplexId),
    #[error("unknown simplex `{0}`")]
    UnknownSimplex(SimplexId),
}

/// Serialized form of a complex: the interchange schema read and written by
/// every tool.
///
/// 0-simplices may be omitted from `simplices`; they are implied by
/// `vertices`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawComplex {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub simplices: Vec<RawSimplex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawSimplex {
    pub id: String,
    #[serde(default)]
    pub facets: Vec<String>,
}

impl RawComplex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(mut self, label: &str) -> Self {
        self.vertices.push(label.to_owned());
        self
    }

    pub fn simplex(mut self, id: &str, facets: &[&str]) -> Self {
        self.simplices.push(RawSimplex {
            id: id.to_owned(),
            facets: facets.iter().map(|f| (*f).to_owned()).collect(),
        });
        self
    }
}

/// A validated simplex. Facets are stored in position order: `facets[i]` is
/// the facet omitting the `i`-th vertex of the sorted vertex tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplex {
    id: SimplexId,
    dim: usize,
    facets: Vec<usize>,
    vertices: Vec<usize>,
}

impl Simplex {
    pub fn id(&self) -> &SimplexId {
        &self.id
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Indices of the facets in position order.
    pub fn facets(&self) -> &[usize] {
        &self.facets
    }

    /// Indices of the vertices, sorted by the global vertex order.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }
}

/// An immutable, validated Δ-complex.
///
/// Simplices are stored sorted by `(dim, id)`; a simplex's position in that
/// order is its index. Vertices therefore occupy the first indices, in the
/// global vertex order.
#[derive(Debug, Clone)]
pub struct DeltaComplex {
    simplices: Vec<Simplex>,
    index: HashMap<SimplexId, usize>,
    cofacets: Vec<Vec<usize>>,
}

impl PartialEq for DeltaComplex {
    fn eq(&self, other: &Self) -> bool {
        self.simplices == other.simplices
    }
}

impl Eq for DeltaComplex {}

/// Intermediate per-simplex state during validation.
struct Pending<'a> {
    id: &'a str,
    dim: usize,
    facets: &'a [String],
}

impl DeltaComplex {
    pub fn empty() -> Self {
        DeltaComplex {
            simplices: Vec::new(),
            index: HashMap::new(),
            cofacets: Vec::new(),
        }
    }

    /// Validates a raw description and builds the complex.
    pub fn from_raw(raw: &RawComplex) -> Result<Self, ComplexError> {
        let mut seen: HashSet<&str> = HashSet::new();
        let mut pending: Vec<Pending<'_>> = Vec::new();
        for v in &raw.vertices {
            if !seen.insert(v.as_str()) {
                return Err(ComplexError::DuplicateId(v.as_str().into()));
            }
            pending.push(Pending {
                id: v,
                dim: 0,
                facets: &[],
            });
        }
        let declared_vertices: HashSet<&str> = raw.vertices.iter().map(String::as_str).collect();
        let mut raw_ids: HashSet<&str> = HashSet::new();
        for s in &raw.simplices {
            if !raw_ids.insert(s.id.as_str()) {
                return Err(ComplexError::DuplicateId(s.id.as_str().into()));
            }
            if s.facets.is_empty() {
                // An explicit 0-simplex; implied by `vertices` when listed there.
                if !declared_vertices.contains(s.id.as_str()) {
                    if !seen.insert(s.id.as_str()) {
                        return Err(ComplexError::DuplicateId(s.id.as_str().into()));
                    }
                    pending.push(Pending {
                        id: &s.id,
                        dim: 0,
                        facets: &[],
                    });
                }
                continue;
            }
            if !seen.insert(s.id.as_str()) {
                return Err(ComplexError::DuplicateId(s.id.as_str().into()));
            }
            if s.facets.len() == 1 {
                return Err(ComplexError::DimensionMismatch {
                    simplex: s.id.as_str().into(),
                    detail: "a simplex cannot have exactly one facet".into(),
                });
            }
            pending.push(Pending {
                id: &s.id,
                dim: s.facets.len() - 1,
                facets: &s.facets,
            });
        }

        pending.sort_by(|a, b| (a.dim, a.id).cmp(&(b.dim, b.id)));
        let index: HashMap<&str, usize> =
            pending.iter().enumerate().map(|(i, p)| (p.id, i)).collect();

        let mut simplices: Vec<Simplex> = Vec::with_capacity(pending.len());
        for (i, p) in pending.iter().enumerate() {
            if p.dim == 0 {
                simplices.push(Simplex {
                    id: p.id.into(),
                    dim: 0,
                    facets: Vec::new(),
                    vertices: vec![i],
                });
                continue;
            }
            let mut facet_idx = Vec::with_capacity(p.facets.len());
            for f in p.facets {
                let &fi = index
                    .get(f.as_str())
                    .ok_or_else(|| ComplexError::DanglingFacet {
                        simplex: p.id.into(),
                        facet: f.as_str().into(),
                    })?;
                if pending[fi].dim + 1 != p.dim {
                    return Err(ComplexError::DimensionMismatch {
                        simplex: p.id.into(),
                        detail: format!(
                            "facet `{}` has dimension {}, expected {}",
                            f,
                            pending[fi].dim,
                            p.dim - 1
                        ),
                    });
                }
                if facet_idx.contains(&fi) {
                    return Err(ComplexError::RepeatedFacet {
                        simplex: p.id.into(),
                        facet: f.as_str().into(),
                    });
                }
                facet_idx.push(fi);
            }
            // Facets have smaller dimension, hence smaller index: already built.
            let mut verts: Vec<usize> = facet_idx
                .iter()
                .flat_map(|&f| simplices[f].vertices.iter().copied())
                .collect();
            verts.sort_unstable();
            verts.dedup();
            if verts.len() != p.dim + 1 {
                return Err(ComplexError::IncompatibleVertexTuples {
                    simplex: p.id.into(),
                });
            }
            let mut ordered = vec![usize::MAX; p.dim + 1];
            for &f in &facet_idx {
                let fv = &simplices[f].vertices;
                // The omitted vertex is the unique tuple entry missing from fv.
                let missing: Vec<usize> = (0..verts.len())
                    .filter(|&pos| fv.binary_search(&verts[pos]).is_err())
                    .collect();
                match missing.as_slice() {
                    [pos] if ordered[*pos] == usize::MAX => ordered[*pos] = f,
                    _ => {
                        return Err(ComplexError::IncompatibleVertexTuples {
                            simplex: p.id.into(),
                        })
                    }
                }
            }
            if p.dim >= 2 {
                for i in 0..ordered.len() {
                    for j in (i + 1)..ordered.len() {
                        let via_i = simplices[ordered[i]].facets[j - 1];
                        let via_j = simplices[ordered[j]].facets[i];
                        if via_i != via_j {
                            return Err(ComplexError::InconsistentGluing {
                                simplex: p.id.into(),
                                first: pending[ordered[i]].id.into(),
                                second: pending[ordered[j]].id.into(),
                            });
                        }
                    }
                }
            }
            simplices.push(Simplex {
                id: p.id.into(),
                dim: p.dim,
                facets: ordered,
                vertices: verts,
            });
        }

        Ok(Self::assemble(simplices))
    }

    fn assemble(simplices: Vec<Simplex>) -> Self {
        let mut cofacets = vec![Vec::new(); simplices.len()];
        for (i, s) in simplices.iter().enumerate() {
            for &f in &s.facets {
                cofacets[f].push(i);
            }
        }
        let index = simplices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.id.clone(), i))
            .collect();
        DeltaComplex {
            simplices,
            index,
            cofacets,
        }
    }

    /// Canonical serialized form: vertices sorted, positive-dimensional
    /// simplices sorted by id, facets in position order.
    pub fn to_raw(&self) -> RawComplex {
        let vertices = self
            .vertex_indices()
            .map(|i| self.simplices[i].id.0.clone())
            .collect();
        let mut simplices: Vec<RawSimplex> = self
            .simplices
            .iter()
            .filter(|s| s.dim > 0)
            .map(|s| RawSimplex {
                id: s.id.0.clone(),
                facets: s
                    .facets
                    .iter()
                    .map(|&f| self.simplices[f].id.0.clone())
                    .collect(),
            })
            .collect();
        simplices.sort_by(|a, b| a.id.cmp(&b.id));
        RawComplex {
            vertices,
            simplices,
        }
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Dimension of the complex, `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.last().map(|s| s.dim)
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn simplex(&self, idx: usize) -> &Simplex {
        &self.simplices[idx]
    }

    pub fn id_of(&self, idx: usize) -> &SimplexId {
        &self.simplices[idx].id
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub(crate) fn require(&self, id: &str) -> Result<usize, ComplexError> {
        self.index_of(id)
            .ok_or_else(|| ComplexError::UnknownSimplex(id.into()))
    }

    pub fn get(&self, id: &str) -> Option<&Simplex> {
        self.index_of(id).map(|i| &self.simplices[i])
    }

    pub fn contains(&self, id: &str) -> bool {
        self.index.contains_key(id)
    }

    pub fn cofacets(&self, idx: usize) -> &[usize] {
        &self.cofacets[idx]
    }

    pub fn vertex_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.simplices
            .iter()
            .take_while(|s| s.dim == 0)
            .enumerate()
            .map(|(i, _)| i)
    }

    pub fn vertex_count(&self) -> usize {
        self.simplices.iter().take_while(|s| s.dim == 0).count()
    }

    /// Indices of all simplices of dimension `k`, in id order.
    pub fn indices_of_dim(&self, k: usize) -> std::ops::Range<usize> {
        let start = self.simplices.partition_point(|s| s.dim < k);
        let end = self.simplices.partition_point(|s| s.dim <= k);
        start..end
    }

    /// Number of simplices per dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim().map_or(0, |d| d + 1)];
        for s in &self.simplices {
            f[s.dim] += 1;
        }
        f
    }

    /// Vertex labels of a simplex in the global vertex order.
    pub fn vertex_labels(&self, idx: usize) -> Vec<&SimplexId> {
        self.simplices[idx]
            .vertices
            .iter()
            .map(|&v| &self.simplices[v].id)
            .collect()
    }

    /// The face of `idx` spanned by the vertex indices `verts` (sorted), if
    /// `verts` is a nonempty subset of its vertex tuple.
    pub fn face_with_vertices(&self, idx: usize, verts: &[usize]) -> Option<usize> {
        let mut current = idx;
        loop {
            let s = &self.simplices[current];
            if s.vertices.len() < verts.len() {
                return None;
            }
            if s.vertices.len() == verts.len() {
                return (s.vertices == verts).then_some(current);
            }
            if verts.is_empty() {
                return None;
            }
            // Drop the first tuple vertex not in `verts`.
            let pos = s
                .vertices
                .iter()
                .position(|v| verts.binary_search(v).is_err())?;
            current = s.facets[pos];
        }
    }

    /// The face of `idx` on the given sort positions of its vertex tuple.
    pub fn face_at_positions(&self, idx: usize, positions: &[usize]) -> usize {
        let verts: Vec<usize> = positions
            .iter()
            .map(|&p| self.simplices[idx].vertices[p])
            .collect();
        self.face_with_vertices(idx, &verts)
            .expect("positions index the vertex tuple")
    }

    /// `a ≤ b` in the face order.
    pub fn is_face(&self, a: usize, b: usize) -> bool {
        let va = &self.simplices[a].vertices;
        self.face_with_vertices(b, va) == Some(a)
    }

    /// Indices of all faces of `idx`, including itself.
    pub fn faces_of(&self, idx: usize) -> Vec<usize> {
        let mut mask = vec![false; self.len()];
        self.close_downward(&mut mask, [idx]);
        mask_to_indices(&mask)
    }

    pub(crate) fn close_downward(&self, mask: &mut [bool], seeds: impl IntoIterator<Item = usize>) {
        let mut queue: VecDeque<usize> = VecDeque::new();
        for s in seeds {
            if !mask[s] {
                mask[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(s) = queue.pop_front() {
            for &f in &self.simplices[s].facets {
                if !mask[f] {
                    mask[f] = true;
                    queue.push_back(f);
                }
            }
        }
    }

    pub(crate) fn close_upward(&self, mask: &mut [bool], seeds: impl IntoIterator<Item = usize>) {
        let mut queue: VecDeque<usize> = VecDeque::new();
        for s in seeds {
            if !mask[s] {
                mask[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(s) = queue.pop_front() {
            for &c in &self.cofacets[s] {
                if !mask[c] {
                    mask[c] = true;
                    queue.push_back(c);
                }
            }
        }
    }

    /// Builds a subset from ids, classifying it against this complex.
    pub fn subset<I, S>(&self, ids: I) -> Result<SimplexSubset, ComplexError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut mask = vec![false; self.len()];
        for id in ids {
            mask[self.require(id.as_ref())?] = true;
        }
        Ok(self.subset_from_mask(&mask))
    }

    pub fn full_subset(&self) -> SimplexSubset {
        self.subset_from_mask(&vec![true; self.len()])
    }

    pub(crate) fn mask_of(&self, subset: &SimplexSubset) -> Result<Vec<bool>, ComplexError> {
        let mut mask = vec![false; self.len()];
        for id in subset.iter() {
            mask[self.require(id.as_str())?] = true;
        }
        Ok(mask)
    }

    pub(crate) fn subset_from_mask(&self, mask: &[bool]) -> SimplexSubset {
        let members = mask
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| self.simplices[i].id.clone())
            .collect();
        SimplexSubset {
            members,
            subcomplex: self.mask_is_subcomplex(mask),
            star_closed: self.mask_is_star_closed(mask),
        }
    }

    fn mask_is_subcomplex(&self, mask: &[bool]) -> bool {
        self.simplices
            .iter()
            .enumerate()
            .all(|(i, s)| !mask[i] || s.facets.iter().all(|&f| mask[f]))
    }

    fn mask_is_star_closed(&self, mask: &[bool]) -> bool {
        (0..self.len()).all(|i| !mask[i] || self.cofacets[i].iter().all(|&c| mask[c]))
    }

    /// All cofaces of `tau`, including `tau`.
    pub fn star(&self, tau: &str) -> Result<SimplexSubset, ComplexError> {
        let t = self.require(tau)?;
        Ok(self.subset_from_mask(&self.star_mask(t)))
    }

    pub(crate) fn star_mask(&self, t: usize) -> Vec<bool> {
        let mut mask = vec![false; self.len()];
        self.close_upward(&mut mask, [t]);
        mask
    }

    pub(crate) fn closed_star_mask(&self, t: usize) -> Vec<bool> {
        let star = self.star_mask(t);
        let mut mask = vec![false; self.len()];
        self.close_downward(&mut mask, mask_to_indices(&star));
        mask
    }

    /// Face-closure of the star of `tau`.
    pub fn closed_star(&self, tau: &str) -> Result<SimplexSubset, ComplexError> {
        let t = self.require(tau)?;
        Ok(self.subset_from_mask(&self.closed_star_mask(t)))
    }

    /// Closed star minus star.
    pub fn link(&self, tau: &str) -> Result<SimplexSubset, ComplexError> {
        let t = self.require(tau)?;
        Ok(self.subset_from_mask(&self.link_mask(t)))
    }

    pub(crate) fn link_mask(&self, t: usize) -> Vec<bool> {
        let star = self.star_mask(t);
        let mut closed = self.closed_star_mask(t);
        for (c, s) in closed.iter_mut().zip(&star) {
            *c &= !s;
        }
        closed
    }

    /// Smallest subcomplex containing `subset`.
    pub fn closure(&self, subset: &SimplexSubset) -> Result<SimplexSubset, ComplexError> {
        let seeds = mask_to_indices(&self.mask_of(subset)?);
        let mut mask = vec![false; self.len()];
        self.close_downward(&mut mask, seeds);
        Ok(self.subset_from_mask(&mask))
    }

    /// Closure under cofaces: the smallest star-closed subset containing `subset`.
    pub fn star_closure(&self, subset: &SimplexSubset) -> Result<SimplexSubset, ComplexError> {
        let seeds = mask_to_indices(&self.mask_of(subset)?);
        let mut mask = vec![false; self.len()];
        self.close_upward(&mut mask, seeds);
        Ok(self.subset_from_mask(&mask))
    }

    /// Whether `subset` is closed under taking cofaces.
    pub fn is_star_closed(&self, subset: &SimplexSubset) -> Result<bool, ComplexError> {
        let mask = self.mask_of(subset)?;
        Ok(self.mask_is_star_closed(&mask))
    }

    /// Whether `subset` is closed under taking faces.
    pub fn is_subcomplex(&self, subset: &SimplexSubset) -> Result<bool, ComplexError> {
        let mask = self.mask_of(subset)?;
        Ok(self.mask_is_subcomplex(&mask))
    }

    /// Largest star-closed subset of `subset`.
    ///
    /// A simplex has a coface outside `subset` iff it lies in the closure of
    /// the complement, so the interior is what that closure leaves over.
    pub fn interior(&self, subset: &SimplexSubset) -> Result<SimplexSubset, ComplexError> {
        let mask = self.mask_of(subset)?;
        let outside: Vec<usize> = (0..self.len()).filter(|&i| !mask[i]).collect();
        let mut closed_outside = vec![false; self.len()];
        self.close_downward(&mut closed_outside, outside);
        let inner: Vec<bool> = closed_outside.iter().map(|c| !c).collect();
        Ok(self.subset_from_mask(&inner))
    }

    pub fn complement(&self, subset: &SimplexSubset) -> Result<SimplexSubset, ComplexError> {
        let mask = self.mask_of(subset)?;
        let inv: Vec<bool> = mask.iter().map(|m| !m).collect();
        Ok(self.subset_from_mask(&inv))
    }

    /// The subcomplex `subset` as a complex of its own.
    pub fn restrict(&self, subset: &SimplexSubset) -> Result<DeltaComplex, ComplexError> {
        let mask = self.mask_of(subset)?;
        if !self.mask_is_subcomplex(&mask) {
            let bad = (0..self.len())
                .find(|&i| mask[i] && self.simplices[i].facets.iter().any(|&f| !mask[f]))
                .expect("non-subcomplex has a simplex with a missing facet");
            let facet = self.simplices[bad]
                .facets
                .iter()
                .find(|&&f| !mask[f])
                .map(|&f| self.simplices[f].id.clone())
                .expect("missing facet");
            return Err(ComplexError::DanglingFacet {
                simplex: self.simplices[bad].id.clone(),
                facet,
            });
        }
        Ok(self.restrict_mask(&mask))
    }

    pub(crate) fn restrict_mask(&self, mask: &[bool]) -> DeltaComplex {
        let mut remap = vec![usize::MAX; self.len()];
        let mut simplices = Vec::new();
        for (i, s) in self.simplices.iter().enumerate() {
            if mask[i] {
                remap[i] = simplices.len();
                simplices.push(Simplex {
                    id: s.id.clone(),
                    dim: s.dim,
                    facets: s.facets.iter().map(|&f| remap[f]).collect(),
                    vertices: s.vertices.iter().map(|&v| remap[v]).collect(),
                });
            }
        }
        Self::assemble(simplices)
    }

    /// Renames every simplex through `rename`, revalidating the result.
    pub fn relabel<F>(&self, mut rename: F) -> Result<DeltaComplex, ComplexError>
    where
        F: FnMut(&SimplexId) -> String,
    {
        let names: Vec<String> = self.simplices.iter().map(|s| rename(&s.id)).collect();
        let vertices = self.vertex_indices().map(|i| names[i].clone()).collect();
        let simplices = self
            .simplices
            .iter()
            .enumerate()
            .filter(|(_, s)| s.dim > 0)
            .map(|(i, s)| RawSimplex {
                id: names[i].clone(),
                facets: s.facets.iter().map(|&f| names[f].clone()).collect(),
            })
            .collect();
        DeltaComplex::from_raw(&RawComplex {
            vertices,
            simplices,
        })
    }

    /// Disjoint union; ids must not clash.
    pub fn disjoint_union(&self, other: &DeltaComplex) -> Result<DeltaComplex, ComplexError> {
        let mut raw = self.to_raw();
        let other = other.to_raw();
        raw.vertices.extend(other.vertices);
        raw.simplices.extend(other.simplices);
        DeltaComplex::from_raw(&raw)
    }
}

pub(crate) fn mask_to_indices(mask: &[bool]) -> Vec<usize> {
    mask.iter()
        .enumerate()
        .filter(|(_, &m)| m)
        .map(|(i, _)| i)
        .collect()
}

/// A set of simplex ids inside a host complex, with its classification
/// against that host computed at construction.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimplexSubset {
    members: BTreeSet<SimplexId>,
    subcomplex: bool,
    star_closed: bool,
}

impl SimplexSubset {
    /// The empty subset, which is both a subcomplex and star-closed.
    pub fn empty() -> Self {
        SimplexSubset {
            members: BTreeSet::new(),
            subcomplex: true,
            star_closed: true,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.members.contains(id)
    }

    pub fn iter(&self) -> impl Iterator<Item = &SimplexId> + '_ {
        self.members.iter()
    }

    pub fn ids(&self) -> &BTreeSet<SimplexId> {
        &self.members
    }

    pub fn is_subcomplex(&self) -> bool {
        self.subcomplex
    }

    pub fn is_star_closed(&self) -> bool {
        self.star_closed
    }

    pub fn is_subset_of(&self, other: &SimplexSubset) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Ids as plain strings, sorted.
    pub fn labels(&self) -> Vec<String> {
        self.members.iter().map(|s| s.as_str().to_owned()).collect()
    }
}
