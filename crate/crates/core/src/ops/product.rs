use std::collections::BTreeMap;
use std::sync::Arc;

use crate::complex::{DeltaComplex, RawComplex, RawSimplex, SimplexId};

use super::{OpsError, SimplicialMap};

/// Largest number of vertices `(dim σ₁ + 1)(dim σ₂ + 1)` of a product cell
/// whose faces are enumerated.
pub const MAX_PRODUCT_CELL_VERTICES: usize = 20;

pub fn product_vertex_label(x: &str, y: &str) -> String {
    format!("({x},{y})")
}

/// Canonical id of the product face of `σ₁ ⊗ σ₂` on the vertex cells
/// `cells`, given as `(row, column)` sort positions in the vertex tuples of
/// `t1` and `t2`. The cells project onto all of both tuples.
fn product_simplex_id(t1: &str, t2: &str, cells: &[(usize, usize)]) -> String {
    if cells.len() == 1 {
        return product_vertex_label(t1, t2);
    }
    let body: Vec<String> = cells.iter().map(|(i, j)| format!("{i}:{j}")).collect();
    format!("({t1})x({t2})[{}]", body.join(","))
}

/// Product simplex ids with the two factor simplices each one projects onto.
type Projections = Vec<(String, SimplexId, SimplexId)>;

fn build_product(
    first: &DeltaComplex,
    second: &DeltaComplex,
    staircase_only: bool,
) -> Result<(DeltaComplex, Projections), OpsError> {
    let top = |c: &DeltaComplex| c.dim().map_or(0, |d| d + 1);
    let largest = top(first) * top(second);
    if largest > MAX_PRODUCT_CELL_VERTICES {
        return Err(OpsError::ProductTooLarge(largest));
    }
    let mut raw = RawComplex::new();
    let mut projections = Vec::new();
    for s1 in first.simplices() {
        for s2 in second.simplices() {
            let rows = s1.dim() + 1;
            let cols = s2.dim() + 1;
            let n = rows * cols;
            let t1 = s1.id().as_str();
            let t2 = s2.id().as_str();
            let i1 = first.index_of(t1).expect("own simplex");
            let i2 = second.index_of(t2).expect("own simplex");
            for mask in 1u32..(1u32 << n) {
                let cells: Vec<(usize, usize)> = (0..n)
                    .filter(|b| mask & (1 << b) != 0)
                    .map(|b| (b / cols, b % cols))
                    .collect();
                if !covers(&cells, rows, cols) {
                    continue;
                }
                if staircase_only && !is_chain(&cells) {
                    continue;
                }
                let id = product_simplex_id(t1, t2, &cells);
                projections.push((id.clone(), s1.id().clone(), s2.id().clone()));
                if cells.len() == 1 {
                    raw.vertices.push(id);
                    continue;
                }
                let facets = (0..cells.len())
                    .map(|drop| {
                        let rest: Vec<(usize, usize)> = cells
                            .iter()
                            .enumerate()
                            .filter(|(k, _)| *k != drop)
                            .map(|(_, c)| *c)
                            .collect();
                        facet_id(first, second, i1, i2, &rest)
                    })
                    .collect();
                raw.simplices.push(RawSimplex { id, facets });
            }
        }
    }
    Ok((DeltaComplex::from_raw(&raw)?, projections))
}

fn covers(cells: &[(usize, usize)], rows: usize, cols: usize) -> bool {
    let mut r = vec![false; rows];
    let mut c = vec![false; cols];
    for &(i, j) in cells {
        r[i] = true;
        c[j] = true;
    }
    r.into_iter().all(|x| x) && c.into_iter().all(|x| x)
}

/// Cells sorted lexicographically form a chain in the product order.
fn is_chain(cells: &[(usize, usize)]) -> bool {
    cells.windows(2).all(|w| w[0].1 <= w[1].1)
}

/// Id of the face on `cells` (positions relative to the full cell of
/// simplices `i1`, `i2`), expressed in its own minimal frame.
fn facet_id(
    first: &DeltaComplex,
    second: &DeltaComplex,
    i1: usize,
    i2: usize,
    cells: &[(usize, usize)],
) -> String {
    let mut rows: Vec<usize> = cells.iter().map(|c| c.0).collect();
    rows.sort_unstable();
    rows.dedup();
    let mut cols: Vec<usize> = cells.iter().map(|c| c.1).collect();
    cols.sort_unstable();
    cols.dedup();
    let f1 = first.face_at_positions(i1, &rows);
    let f2 = second.face_at_positions(i2, &cols);
    let local: Vec<(usize, usize)> = cells
        .iter()
        .map(|(i, j)| {
            (
                rows.binary_search(i).expect("own row"),
                cols.binary_search(j).expect("own column"),
            )
        })
        .collect();
    product_simplex_id(first.id_of(f1).as_str(), second.id_of(f2).as_str(), &local)
}

/// `Σ₁ ⊗ Σ₂`: every product `σ₁ ⊗ σ₂` is the full simplex on
/// `V(σ₁) × V(σ₂)`, glued along product face maps.
///
/// Faces are keyed by the unique pair of factor simplices their vertex set
/// projects onto, so a face shared by several product cells is created once.
pub fn simplicial_product(
    first: &DeltaComplex,
    second: &DeltaComplex,
) -> Result<DeltaComplex, OpsError> {
    build_product(first, second, false).map(|(c, _)| c)
}

/// Triangulated cartesian product together with its comparison maps.
#[derive(Debug, Clone)]
pub struct TriangulatedProduct {
    /// Staircase triangulation of `Σ₁ × Σ₂`.
    pub staircase: Arc<DeltaComplex>,
    /// `Σ₁ ⊗ Σ₂`.
    pub tensor: Arc<DeltaComplex>,
    /// Inclusion of the staircase triangulation into the simplicial product.
    pub inclusion: SimplicialMap,
    /// Projections of the simplicial product onto the factors.
    pub projections: (SimplicialMap, SimplicialMap),
}

impl TriangulatedProduct {
    /// Projections of the triangulated product onto the factors, obtained by
    /// composing the inclusion with the product projections.
    pub fn staircase_projections(&self) -> Result<(SimplicialMap, SimplicialMap), OpsError> {
        Ok((
            self.inclusion.then(&self.projections.0)?,
            self.inclusion.then(&self.projections.1)?,
        ))
    }
}

/// Triangulates each cell `σ₁ × σ₂` by the chains of its vertex grid that
/// are monotone in both factor orders.
pub fn cartesian_product_triangulated(
    first: &DeltaComplex,
    second: &DeltaComplex,
) -> Result<TriangulatedProduct, OpsError> {
    let (staircase, _) = build_product(first, second, true)?;
    let (tensor, projections) = build_product(first, second, false)?;
    let staircase = Arc::new(staircase);
    let tensor = Arc::new(tensor);

    let identity: BTreeMap<SimplexId, SimplexId> = staircase
        .simplices()
        .iter()
        .map(|s| (s.id().clone(), s.id().clone()))
        .collect();
    let inclusion = SimplicialMap::new(staircase.clone(), tensor.clone(), identity)?;

    let first_map = projections
        .iter()
        .map(|(id, p, _)| (SimplexId::from(id.as_str()), p.clone()))
        .collect();
    let second_map = projections
        .iter()
        .map(|(id, _, q)| (SimplexId::from(id.as_str()), q.clone()))
        .collect();
    let pi1 = SimplicialMap::new(tensor.clone(), Arc::new(first.clone()), first_map)?;
    let pi2 = SimplicialMap::new(tensor.clone(), Arc::new(second.clone()), second_map)?;

    Ok(TriangulatedProduct {
        staircase,
        tensor,
        inclusion,
        projections: (pi1, pi2),
    })
}
