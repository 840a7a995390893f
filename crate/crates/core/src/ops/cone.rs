use std::collections::HashSet;

use crate::complex::{
    mask_to_indices, DeltaComplex, RawComplex, RawSimplex, SimplexId, SimplexSubset, VertexId,
};

use super::OpsError;

/// Id of the cone with apex `apex` over the simplex `base`.
pub fn cone_id(apex: &str, base: &str) -> String {
    format!("{apex}#{base}")
}

/// Data for a cone extension `(Σ \ Δ⁰) ∪ v * (Δ \ Δ⁰)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeExtensionInstruction {
    delta: SimplexSubset,
    delta0: SimplexSubset,
    new_vertex: VertexId,
}

impl ConeExtensionInstruction {
    /// Checks the instruction against `host`: `delta` must be a subcomplex,
    /// `delta0` star-closed and contained in `delta`, and `new_vertex` fresh.
    pub fn new<I, J, S, T>(
        host: &DeltaComplex,
        delta: I,
        delta0: J,
        new_vertex: impl Into<VertexId>,
    ) -> Result<Self, OpsError>
    where
        I: IntoIterator<Item = S>,
        J: IntoIterator<Item = T>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let instr = ConeExtensionInstruction {
            delta: host.subset(delta)?,
            delta0: host.subset(delta0)?,
            new_vertex: new_vertex.into(),
        };
        instr.check(host)?;
        Ok(instr)
    }

    pub fn delta(&self) -> &SimplexSubset {
        &self.delta
    }

    pub fn delta0(&self) -> &SimplexSubset {
        &self.delta0
    }

    pub fn new_vertex(&self) -> &VertexId {
        &self.new_vertex
    }

    /// `Δ \ Δ⁰`, the part that gets coned.
    pub fn delta1(&self) -> impl Iterator<Item = &SimplexId> + '_ {
        self.delta
            .iter()
            .filter(|id| !self.delta0.contains(id.as_str()))
    }

    /// Revalidates against `host`, returning the membership masks of Δ and Δ⁰.
    fn check(&self, host: &DeltaComplex) -> Result<(Vec<bool>, Vec<bool>), OpsError> {
        let delta = host.mask_of(&self.delta)?;
        let delta0 = host.mask_of(&self.delta0)?;
        if !host.is_subcomplex(&self.delta)? {
            return Err(OpsError::NotSubcomplex("delta"));
        }
        if !host.is_star_closed(&self.delta0)? {
            return Err(OpsError::NotStarClosed("delta0"));
        }
        if !self.delta0.is_subset_of(&self.delta) {
            return Err(OpsError::NotContained);
        }
        if host.contains(self.new_vertex.as_str()) {
            return Err(OpsError::VertexClash(self.new_vertex.clone()));
        }
        // Δ¹ = Δ \ Δ⁰ is always a subcomplex: a face of τ ∈ Δ¹ lies in Δ, and
        // were it in Δ⁰, star-closedness would force τ into Δ⁰.
        let delta1: Vec<bool> = delta.iter().zip(&delta0).map(|(d, z)| *d && !*z).collect();
        let delta1_subset = host.subset_from_mask(&delta1);
        assert!(
            delta1_subset.is_subcomplex(),
            "delta minus delta0 must be a subcomplex"
        );
        Ok((delta, delta0))
    }
}

/// Removes Δ⁰ and adjoins the cone with apex `v` over `Δ \ Δ⁰`.
///
/// The cone over `τ` gets id `v#τ` and facets `τ` and `v#φ` for each facet
/// `φ` of `τ` (just `v` when `τ` is a vertex). Coning over an empty Δ¹ adds
/// the isolated vertex `v`.
pub fn cone_extension(
    complex: &DeltaComplex,
    instr: &ConeExtensionInstruction,
) -> Result<DeltaComplex, OpsError> {
    let (delta, delta0) = instr.check(complex)?;
    let apex = instr.new_vertex.as_str();
    let coned: Vec<usize> = (0..complex.len())
        .filter(|&i| delta[i] && !delta0[i])
        .collect();
    let kept: Vec<bool> = delta0.iter().map(|z| !z).collect();
    assemble_cone(complex, &kept, &coned, apex)
}

/// Shared assembly: keep the simplices flagged in `kept` and add `apex`
/// together with the cones over `coned`.
fn assemble_cone(
    complex: &DeltaComplex,
    kept: &[bool],
    coned: &[usize],
    apex: &str,
) -> Result<DeltaComplex, OpsError> {
    let mut raw = RawComplex::new();
    let mut taken: HashSet<String> = HashSet::new();
    for (i, s) in complex.simplices().iter().enumerate() {
        if !kept[i] {
            continue;
        }
        taken.insert(s.id().as_str().to_owned());
        if s.dim() == 0 {
            raw.vertices.push(s.id().as_str().to_owned());
        } else {
            raw.simplices.push(RawSimplex {
                id: s.id().as_str().to_owned(),
                facets: s
                    .facets()
                    .iter()
                    .map(|&f| complex.id_of(f).as_str().to_owned())
                    .collect(),
            });
        }
    }
    raw.vertices.push(apex.to_owned());
    for &t in coned {
        let s = complex.simplex(t);
        let id = cone_id(apex, s.id().as_str());
        if complex.contains(&id) || taken.contains(&id) || id == apex {
            return Err(OpsError::IdCollision(id.into()));
        }
        let mut facets = vec![s.id().as_str().to_owned()];
        if s.dim() == 0 {
            facets.push(apex.to_owned());
        } else {
            facets.extend(
                s.facets()
                    .iter()
                    .map(|&f| cone_id(apex, complex.id_of(f).as_str())),
            );
        }
        taken.insert(id.clone());
        raw.simplices.push(RawSimplex { id, facets });
    }
    Ok(DeltaComplex::from_raw(&raw)?)
}

/// Star subdivision at `tau`: `(Σ \ Star(τ)) ∪ v * Link(τ)`.
pub fn star_subdivision(
    complex: &DeltaComplex,
    tau: &str,
    new_vertex: &str,
) -> Result<DeltaComplex, OpsError> {
    let t = complex.require(tau)?;
    if complex.contains(new_vertex) {
        return Err(OpsError::VertexClash(new_vertex.into()));
    }
    let star = complex.star_mask(t);
    let link = complex.link_mask(t);
    let kept: Vec<bool> = star.iter().map(|s| !s).collect();
    assemble_cone(complex, &kept, &mask_to_indices(&link), new_vertex)
}
