//! Exact ranks of integer matrices.
//!
//! Two independent routes: a dense Bareiss elimination over big integers,
//! and a sparse column reduction for boundary matrices of chain complexes.
//! The sparse route keeps every column primitive (entries divided by their
//! gcd) so entries stay small; any overflow of the 64-bit storage is
//! reported rather than wrapped.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};

/// A sparse integer column, sorted by row index, without zero entries.
pub type SparseColumn = Vec<(usize, i64)>;

/// Rank over the rationals of a dense integer matrix by fraction-free
/// (Bareiss) elimination.
pub fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// A finite chain complex of free modules with integer boundary matrices.
///
/// `boundaries[p]` holds one column per cell of degree `p`, expressed in
/// the cells of degree `p - 1`; `boundaries[0]` must be all empty.
#[derive(Debug, Clone, Default)]
pub struct ChainComplex {
    boundaries: Vec<Vec<SparseColumn>>,
}

impl ChainComplex {
    pub fn new(boundaries: Vec<Vec<SparseColumn>>) -> Self {
        ChainComplex { boundaries }
    }

    pub fn cells(&self, degree: usize) -> usize {
        self.boundaries.get(degree).map_or(0, Vec::len)
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.boundaries.len().checked_sub(1)
    }

    /// Ranks of every boundary map; `ranks[p] = rank ∂_p` (with `ranks[0] = 0`).
    ///
    /// Reduces from the top degree down so that any cell already used as a
    /// pivot of `∂_{p+1}` can be skipped in `∂_p` (its column reduces to zero).
    pub fn boundary_ranks(&self) -> Result<Vec<usize>> {
        let top = self.boundaries.len();
        let mut ranks = vec![0; top];
        let mut cleared: Vec<bool> = Vec::new();
        for p in (1..top).rev() {
            let cols = &self.boundaries[p];
            let mut pivots: HashMap<usize, SparseColumn> = HashMap::new();
            let mut next_cleared = vec![false; self.cells(p - 1)];
            for (idx, col) in cols.iter().enumerate() {
                if cleared.get(idx).copied().unwrap_or(false) || col.is_empty() {
                    continue;
                }
                if let Some(low) = reduce_column(col.clone(), &pivots)? {
                    next_cleared[low.0] = true;
                    pivots.insert(low.0, low.1);
                }
            }
            ranks[p] = pivots.len();
            cleared = next_cleared;
        }
        Ok(ranks)
    }

    /// Betti numbers over the rationals, one per degree.
    pub fn betti_numbers(&self) -> Result<Vec<usize>> {
        let ranks = self.boundary_ranks()?;
        let top = self.boundaries.len();
        Ok((0..top)
            .map(|p| {
                let outgoing = ranks[p];
                let incoming = if p + 1 < top { ranks[p + 1] } else { 0 };
                self.cells(p) - outgoing - incoming
            })
            .collect())
    }
}

/// Rank over the rationals of the matrix whose columns are given.
pub fn sparse_rank(columns: &[SparseColumn]) -> Result<usize> {
    let mut pivots: HashMap<usize, SparseColumn> = HashMap::new();
    for col in columns {
        if let Some((low, reduced)) = reduce_column(col.clone(), &pivots)? {
            pivots.insert(low, reduced);
        }
    }
    Ok(pivots.len())
}

/// Eliminates the lowest entry of `col` against stored pivots until it is
/// new or the column vanishes. Returns the pivot row and reduced column.
fn reduce_column(
    mut col: SparseColumn,
    pivots: &HashMap<usize, SparseColumn>,
) -> Result<Option<(usize, SparseColumn)>> {
    normalize(&mut col);
    while let Some(&(low, c)) = col.last() {
        let Some(piv) = pivots.get(&low) else {
            return Ok(Some((low, col)));
        };
        let p = piv.last().expect("stored pivot columns are nonempty").1;
        let g = p.gcd(&c);
        col = combine(p / g, &col, c / g, piv)?;
        normalize(&mut col);
    }
    Ok(None)
}

/// `s·x − t·y` for sorted sparse columns.
fn combine(s: i64, x: &SparseColumn, t: i64, y: &SparseColumn) -> Result<SparseColumn> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let push = |out: &mut SparseColumn, row: usize, v: i128| -> Result<()> {
        if v != 0 {
            out.push((row, i64::try_from(v).map_err(|_| Error::Overflow)?));
        }
        Ok(())
    };
    while i < x.len() || j < y.len() {
        let rx = x.get(i).map_or(usize::MAX, |e| e.0);
        let ry = y.get(j).map_or(usize::MAX, |e| e.0);
        if rx < ry {
            push(&mut out, rx, i128::from(s) * i128::from(x[i].1))?;
            i += 1;
        } else if ry < rx {
            push(&mut out, ry, -i128::from(t) * i128::from(y[j].1))?;
            j += 1;
        } else {
            let v = i128::from(s) * i128::from(x[i].1) - i128::from(t) * i128::from(y[j].1);
            push(&mut out, rx, v)?;
            i += 1;
            j += 1;
        }
    }
    Ok(out)
}

/// Divides a column by the gcd of its entries.
fn normalize(col: &mut SparseColumn) {
    let g = col.iter().fold(0i64, |g, &(_, v)| g.gcd(&v));
    if g > 1 {
        for e in col.iter_mut() {
            e.1 /= g;
        }
    }
}

/// Dense form of a list of sparse columns, rows by columns.
pub fn to_dense(columns: &[SparseColumn], nrows: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; columns.len()]; nrows];
    for (c, col) in columns.iter().enumerate() {
        for &(r, v) in col {
            m[r][c] = v;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bareiss_small_cases() {
        assert_eq!(bareiss_rank(&[]), 0);
        assert_eq!(bareiss_rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(bareiss_rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(bareiss_rank(&[vec![2, 1], vec![1, 2]]), 2);
        assert_eq!(
            bareiss_rank(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]),
            2
        );
        assert_eq!(bareiss_rank(&[vec![0, 3], vec![5, 0], vec![1, 1]]), 2);
    }

    #[test]
    fn sparse_matches_on_non_unit_pivots() {
        let cols = vec![vec![(0, 2), (1, 4)], vec![(0, 3), (1, 6)], vec![(1, 5)]];
        assert_eq!(sparse_rank(&cols).unwrap(), 2);
    }

    #[test]
    fn circle_betti() {
        // 4-cycle: vertices 0..4, edges (0,1),(1,2),(2,3),(0,3)
        let edges = vec![
            vec![(0, -1), (1, 1)],
            vec![(1, -1), (2, 1)],
            vec![(2, -1), (3, 1)],
            vec![(0, -1), (3, 1)],
        ];
        let cc = ChainComplex::new(vec![vec![vec![]; 4], edges]);
        assert_eq!(cc.betti_numbers().unwrap(), vec![1, 1]);
    }

    #[test]
    fn overflow_is_reported() {
        let cols = vec![vec![(0, i64::MAX), (1, 3)], vec![(0, -i64::MAX), (1, 2)]];
        assert_eq!(sparse_rank(&cols), Err(Error::Overflow));
    }

    proptest! {
        #[test]
        fn sparse_rank_agrees_with_bareiss(
            rows in 1usize..7,
            data in prop::collection::vec(prop::collection::vec(-3i64..=3, 7), 7),
        ) {
            let dense: Vec<Vec<i64>> = data[..rows].to_vec();
            let columns: Vec<SparseColumn> = (0..7)
                .map(|c| (0..rows).filter(|&r| dense[r][c] != 0).map(|r| (r, dense[r][c])).collect())
                .collect();
            prop_assert_eq!(sparse_rank(&columns).unwrap(), bareiss_rank(&dense));
            prop_assert_eq!(to_dense(&columns, rows), dense);
        }
    }
}
