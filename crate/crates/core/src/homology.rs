//! Chain complexes of Δ-complexes and Betti numbers over an exact field.
//!
//! The boundary of a `k`-simplex with sorted vertex tuple `(v_0, …, v_k)` is
//! `Σ (-1)^i facet_i`, where `facet_i` omits `v_i`. Ranks are computed by a
//! fraction-free column reduction, so any integral domain embedded in the
//! rationals gives the same answer; the crate default is [`crate::Rational`].

use std::collections::HashMap;
use std::fmt::Debug;
use std::ops::Neg;

use num_traits::Num;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{DeltaComplex, SimplexId};

/// Coefficient ring for chain computations.
pub trait Scalar: Clone + Num + Neg<Output = Self> + Send + Sync + Debug {}

impl<T> Scalar for T where T: Clone + Num + Neg<Output = T> + Send + Sync + Debug {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("reduced homology of the empty complex is not defined")]
    EmptyComplex,
    #[error("boundary of boundary is nonzero in dimension {0}")]
    BoundarySquareNonzero(usize),
}

/// Sparse matrix stored by columns; each column is sorted by row.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMatrix<T> {
    rows: usize,
    columns: Vec<Vec<(usize, T)>>,
}

impl<T: Scalar> SparseMatrix<T> {
    pub fn new(rows: usize, columns: Vec<Vec<(usize, T)>>) -> Self {
        SparseMatrix { rows, columns }
    }

    pub fn from_dense(rows: &[Vec<T>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let columns = (0..ncols)
            .map(|c| {
                (0..nrows)
                    .filter(|&r| !rows[r][c].is_zero())
                    .map(|r| (r, rows[r][c].clone()))
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: nrows,
            columns,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, c: usize) -> &[(usize, T)] {
        &self.columns[c]
    }

    pub fn entry(&self, r: usize, c: usize) -> T {
        self.columns[c]
            .binary_search_by_key(&r, |(row, _)| *row)
            .map_or_else(|_| T::zero(), |i| self.columns[c][i].1.clone())
    }

    /// `self * rhs` is zero.
    pub fn annihilates(&self, rhs: &SparseMatrix<T>) -> bool {
        if self.cols() != rhs.rows {
            return false;
        }
        rhs.columns.iter().all(|col| {
            let mut acc: HashMap<usize, T> = HashMap::new();
            for (k, b) in col {
                for (r, a) in &self.columns[*k] {
                    let e = acc.entry(*r).or_insert_with(T::zero);
                    *e = e.clone() + a.clone() * b.clone();
                }
            }
            acc.values().all(T::is_zero)
        })
    }

    /// Rank by fraction-free column reduction.
    ///
    /// Columns are processed left to right; a column whose lowest nonzero
    /// row is already owned by an earlier reduced column is replaced by
    /// `b * col - a * pivot_col`, where `a` and `b` are the two entries in
    /// that row.
    pub fn rank(&self) -> usize {
        let mut owner: HashMap<usize, usize> = HashMap::new();
        let mut reduced: Vec<Vec<(usize, T)>> = Vec::new();
        for col in &self.columns {
            let mut c = col.clone();
            while let Some((low, a)) = c.last().cloned() {
                match owner.get(&low) {
                    Some(&p) => {
                        let pivot = &reduced[p];
                        let b = pivot.last().expect("reduced columns are nonzero").1.clone();
                        c = combine(&b, &c, &a, pivot);
                    }
                    None => {
                        owner.insert(low, reduced.len());
                        reduced.push(c);
                        break;
                    }
                }
            }
        }
        reduced.len()
    }
}

/// `x * lhs - y * rhs` on sorted sparse columns, dropping zeros.
fn combine<T: Scalar>(x: &T, lhs: &[(usize, T)], y: &T, rhs: &[(usize, T)]) -> Vec<(usize, T)> {
    let mut out = Vec::with_capacity(lhs.len() + rhs.len());
    let (mut i, mut j) = (0, 0);
    while i < lhs.len() || j < rhs.len() {
        let take_l = j >= rhs.len() || (i < lhs.len() && lhs[i].0 < rhs[j].0);
        let take_r = i >= lhs.len() || (j < rhs.len() && rhs[j].0 < lhs[i].0);
        let (row, v) = if take_l {
            i += 1;
            (lhs[i - 1].0, x.clone() * lhs[i - 1].1.clone())
        } else if take_r {
            j += 1;
            (rhs[j - 1].0, -(y.clone() * rhs[j - 1].1.clone()))
        } else {
            i += 1;
            j += 1;
            (
                lhs[i - 1].0,
                x.clone() * lhs[i - 1].1.clone() - y.clone() * rhs[j - 1].1.clone(),
            )
        };
        if !v.is_zero() {
            out.push((row, v));
        }
    }
    out
}

/// Graded simplex bases and boundary matrices.
///
/// `boundaries[k]` is `∂_k : C_k → C_{k-1}`; `∂_0` has no rows.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainComplex<T> {
    bases: Vec<Vec<SimplexId>>,
    boundaries: Vec<SparseMatrix<T>>,
}

impl<T: Scalar> ChainComplex<T> {
    /// Builds the simplicial chain complex and checks `∂∂ = 0`.
    pub fn of(complex: &DeltaComplex) -> Result<Self, HomologyError> {
        let top = complex.dim().map_or(0, |d| d + 1);
        let mut bases = Vec::with_capacity(top);
        let mut boundaries = Vec::with_capacity(top);
        for k in 0..top {
            let range = complex.indices_of_dim(k);
            bases.push(range.clone().map(|i| complex.id_of(i).clone()).collect());
            let rows = if k == 0 {
                0
            } else {
                complex.indices_of_dim(k - 1).len()
            };
            let row_start = if k == 0 {
                0
            } else {
                complex.indices_of_dim(k - 1).start
            };
            let columns = range
                .map(|i| {
                    let mut col: Vec<(usize, T)> = complex
                        .simplex(i)
                        .facets()
                        .iter()
                        .enumerate()
                        .map(|(pos, &f)| {
                            let sign = if pos % 2 == 0 { T::one() } else { -T::one() };
                            (f - row_start, sign)
                        })
                        .collect();
                    col.sort_by_key(|(r, _)| *r);
                    col
                })
                .collect();
            boundaries.push(SparseMatrix::new(rows, columns));
        }
        let chain = ChainComplex { bases, boundaries };
        chain.check_nilpotent()?;
        Ok(chain)
    }

    pub fn check_nilpotent(&self) -> Result<(), HomologyError> {
        for k in 1..self.boundaries.len() {
            if !self.boundaries[k - 1].annihilates(&self.boundaries[k]) {
                return Err(HomologyError::BoundarySquareNonzero(k));
            }
        }
        Ok(())
    }

    pub fn basis(&self, k: usize) -> &[SimplexId] {
        &self.bases[k]
    }

    pub fn boundary(&self, k: usize) -> &SparseMatrix<T> {
        &self.boundaries[k]
    }

    /// Number of graded pieces, one more than the top dimension.
    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    /// Ranks of every boundary map, computed concurrently.
    pub fn ranks(&self) -> Vec<usize> {
        self.boundaries.par_iter().map(SparseMatrix::rank).collect()
    }

    /// `b_k = dim ker ∂_k − rank ∂_{k+1}`.
    pub fn betti(&self) -> Vec<usize> {
        let ranks = self.ranks();
        (0..self.bases.len())
            .map(|k| {
                let kernel = self.bases[k].len() - ranks[k];
                kernel - ranks.get(k + 1).copied().unwrap_or(0)
            })
            .collect()
    }
}

/// Rational Betti numbers, which for the dual complex of a projective SNC
/// configuration are the dimensions of the weight-zero part of cohomology.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector {
    betti: Vec<usize>,
    w0_dims: Vec<usize>,
    reduced: bool,
}

impl BettiVector {
    pub fn new(betti: Vec<usize>, reduced: bool) -> Self {
        BettiVector {
            w0_dims: betti.clone(),
            betti,
            reduced,
        }
    }

    pub fn betti(&self) -> &[usize] {
        &self.betti
    }

    pub fn w0_dims(&self) -> &[usize] {
        &self.w0_dims
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn get(&self, k: usize) -> usize {
        self.betti.get(k).copied().unwrap_or(0)
    }

    /// Betti numbers without trailing zeros.
    pub fn trimmed(&self) -> &[usize] {
        let end = self
            .betti
            .iter()
            .rposition(|&b| b != 0)
            .map_or(0, |i| i + 1);
        &self.betti[..end]
    }

    /// Alternating sum of the Betti numbers.
    pub fn alternating_sum(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// Equality after padding with zeros.
    pub fn agrees_with(&self, other: &BettiVector) -> bool {
        self.reduced == other.reduced && self.trimmed() == other.trimmed()
    }
}

pub fn boundary_matrices(complex: &DeltaComplex) -> Result<crate::ChainComplexQ, HomologyError> {
    ChainComplex::of(complex)
}

/// Betti numbers over the crate's default exact coefficients.
pub fn betti_numbers(complex: &DeltaComplex, reduced: bool) -> Result<BettiVector, HomologyError> {
    betti_numbers_over::<crate::Rational>(complex, reduced)
}

/// Betti numbers with coefficients in `T`.
pub fn betti_numbers_over<T: Scalar>(
    complex: &DeltaComplex,
    reduced: bool,
) -> Result<BettiVector, HomologyError> {
    if reduced && complex.is_empty() {
        return Err(HomologyError::EmptyComplex);
    }
    let mut b = ChainComplex::<T>::of(complex)?.betti();
    if reduced {
        b[0] -= 1;
    }
    Ok(BettiVector::new(b, reduced))
}

pub fn euler_characteristic(complex: &DeltaComplex) -> i64 {
    complex
        .f_vector()
        .iter()
        .enumerate()
        .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
        .sum()
}

/// Outcome of comparing two complexes by their Betti numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyComparison {
    pub equal: bool,
    pub a: BettiVector,
    pub b: BettiVector,
}

pub fn homology_equal(
    a: &DeltaComplex,
    b: &DeltaComplex,
) -> Result<HomologyComparison, HomologyError> {
    let ba = betti_numbers(a, false)?;
    let bb = betti_numbers(b, false)?;
    Ok(HomologyComparison {
        equal: ba.agrees_with(&bb),
        a: ba,
        b: bb,
    })
}
