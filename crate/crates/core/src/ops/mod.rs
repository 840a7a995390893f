//! Structural transformations of complexes.

mod collapse;
mod cone;
mod map;
mod product;

pub use collapse::{
    greedy_collapse, CollapseCertificate, CollapseError, CollapseOutcome, CollapseStep,
};
pub use cone::{cone_extension, cone_id, star_subdivision, ConeExtensionInstruction};
pub use map::{vertex_induced_map, MapError, SimplicialMap};
pub use product::{
    cartesian_product_triangulated, product_vertex_label, simplicial_product, TriangulatedProduct,
    MAX_PRODUCT_CELL_VERTICES,
};

use thiserror::Error;

use crate::complex::{ComplexError, SimplexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpsError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("{0} is not a subcomplex")]
    NotSubcomplex(&'static str),
    #[error("{0} is not star-closed")]
    NotStarClosed(&'static str),
    #[error("the removed set is not contained in the coned subcomplex")]
    NotContained,
    #[error("new vertex `{0}` already exists")]
    VertexClash(SimplexId),
    #[error("generated id `{0}` collides with an existing simplex")]
    IdCollision(SimplexId),
    #[error("product cell with {0} vertices exceeds the supported size")]
    ProductTooLarge(usize),
}
