//! Δ-complexes, their rational homology, and the combinatorial blow-up
//! calculus for dual complexes of simple normal crossing configurations.
//!
//! Homology is generic over the coefficient type through
//! [`homology::Scalar`]; [`Rational`] and [`ChainComplexQ`] fix the exact
//! rational coefficients used by default.

pub mod builtin;
pub mod complex;
pub mod generate;
pub mod homology;
pub mod ops;
pub mod snc;

pub use complex::{
    ComplexError, DeltaComplex, RawComplex, RawSimplex, Simplex, SimplexId, SimplexSubset, VertexId,
};
pub use homology::{
    betti_numbers, euler_characteristic, homology_equal, BettiVector, ChainComplex, HomologyError,
};
pub use ops::OpsError;
pub use snc::{SncConfiguration, SncError};

pub type Rational = num_rational::BigRational;
pub type ChainComplexQ = ChainComplex<Rational>;

use thiserror::Error;

/// Any error raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Ops(#[from] OpsError),
    #[error(transparent)]
    Collapse(#[from] ops::CollapseError),
    #[error(transparent)]
    Snc(#[from] SncError),
    #[error(transparent)]
    Script(#[from] snc::ScriptFailure),
    #[error(transparent)]
    Pair(#[from] snc::PairFailure),
}
