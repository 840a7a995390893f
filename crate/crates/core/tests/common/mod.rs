//! Independent reference computations for the property tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use dual_complex::DeltaComplex;

/// Rank of a dense rational matrix by textbook Gaussian elimination.
pub fn dense_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = row[c].clone() / pivot_row[c].clone();
                for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= f.clone() * p.clone();
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Betti numbers from dense boundary matrices written out directly from
/// the facet lists.
pub fn oracle_betti(c: &DeltaComplex) -> Vec<usize> {
    let top = match c.dim() {
        Some(d) => d,
        None => return Vec::new(),
    };
    let by_dim: Vec<Vec<usize>> = (0..=top)
        .map(|k| (0..c.len()).filter(|&i| c.simplex(i).dim() == k).collect())
        .collect();
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        let rows = &by_dim[k - 1];
        let cols = &by_dim[k];
        let mut m = vec![vec![BigRational::zero(); cols.len()]; rows.len()];
        for (j, &s) in cols.iter().enumerate() {
            for (pos, &f) in c.simplex(s).facets().iter().enumerate() {
                let r = rows.iter().position(|&x| x == f).unwrap();
                let sign = if pos % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                m[r][j] += BigRational::from_integer(sign);
            }
        }
        ranks[k] = dense_rank(m);
    }
    (0..=top)
        .map(|k| by_dim[k].len() - ranks[k] - ranks[k + 1])
        .collect()
}

/// Betti numbers of a product from those of the factors.
pub fn kunneth(a: &[usize], b: &[usize]) -> Vec<usize> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn trim(v: &[usize]) -> Vec<usize> {
    let end = v.iter().rposition(|&x| x != 0).map_or(0, |p| p + 1);
    v[..end].to_vec()
}
