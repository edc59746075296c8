//! Generalized Cartan matrices and root arithmetic in the simple-root basis.
//!
//! Roots are integer vectors of coordinates with respect to the simple roots
//! `α_1, …, α_n`. Only the coroot pairings `⟨α_i^∨, ·⟩` and the simple
//! reflections are needed downstream, so no realization of the Kac-Moody
//! algebra is built. Any generalized Cartan matrix is accepted, including
//! affine, hyperbolic and non-symmetrizable ones.

use std::fmt;
use std::ops::{Index, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{checked_add, checked_mul, checked_sub, Error, Result};

/// A validated generalized Cartan matrix `A = (a_ij)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GeneralizedCartanMatrix {
    rank: usize,
    entries: Vec<i64>,
}

/// The finite families offered by [`GeneralizedCartanMatrix::of_type`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanFamily {
    A,
    B,
    C,
    D,
}

impl CartanFamily {
    pub fn letter(self) -> char {
        match self {
            CartanFamily::A => 'A',
            CartanFamily::B => 'B',
            CartanFamily::C => 'C',
            CartanFamily::D => 'D',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'A' => Some(CartanFamily::A),
            'B' => Some(CartanFamily::B),
            'C' => Some(CartanFamily::C),
            'D' => Some(CartanFamily::D),
            _ => None,
        }
    }
}

impl GeneralizedCartanMatrix {
    /// Validates a square integer matrix against the three axioms, reporting
    /// the first violation in row-major order.
    pub fn new(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::NonSquare);
        }
        for i in 0..n {
            if rows[i][i] != 2 {
                return Err(Error::DiagonalNotTwo(i + 1));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                if rows[i][j] > 0 {
                    return Err(Error::PositiveOffDiagonal(i + 1, j + 1));
                }
                if (rows[i][j] == 0) != (rows[j][i] == 0) {
                    return Err(Error::ZeroAsymmetry(i + 1, j + 1));
                }
            }
        }
        Ok(Self {
            rank: n,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    /// Standard Cartan matrix of a finite classical family (Bourbaki
    /// numbering; the short root of `B_n` and the long root of `C_n` sit at
    /// index `n`).
    pub fn of_type(family: CartanFamily, rank: usize) -> Result<Self> {
        let min_rank = match family {
            CartanFamily::A => 1,
            CartanFamily::B | CartanFamily::C => 2,
            CartanFamily::D => 3,
        };
        if rank < min_rank {
            return Err(Error::UnsupportedRank {
                family: family.letter(),
                rank,
            });
        }
        let n = rank;
        let mut rows = vec![vec![0i64; n]; n];
        for i in 0..n {
            rows[i][i] = 2;
        }
        match family {
            CartanFamily::A | CartanFamily::B | CartanFamily::C => {
                for i in 0..n - 1 {
                    rows[i][i + 1] = -1;
                    rows[i + 1][i] = -1;
                }
                if family == CartanFamily::B {
                    rows[n - 1][n - 2] = -2;
                } else if family == CartanFamily::C {
                    rows[n - 2][n - 1] = -2;
                }
            }
            CartanFamily::D => {
                for i in 0..n - 2 {
                    rows[i][i + 1] = -1;
                    rows[i + 1][i] = -1;
                }
                rows[n - 3][n - 1] = -1;
                rows[n - 1][n - 3] = -1;
            }
        }
        Self::new(&rows)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Entry `a_ij` with 0-based indices.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.rank + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.rank).map(<[i64]>::to_vec).collect()
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i + 1,
                bound: self.rank,
            })
        }
    }

    /// `⟨α_i^∨, γ⟩ = Σ_j c_j a_ij` for a root vector `γ = Σ_j c_j α_j`.
    pub fn pairing(&self, i: usize, gamma: &RootVector) -> Result<i64> {
        self.check_index(i)?;
        self.check_len(gamma)?;
        let row = &self.entries[i * self.rank..(i + 1) * self.rank];
        row.iter()
            .zip(&gamma.0)
            .try_fold(0i64, |acc, (&a, &c)| checked_add(acc, checked_mul(a, c)?))
    }

    /// Simple reflection `s_{α_i}(γ) = γ − ⟨α_i^∨, γ⟩ α_i`.
    pub fn reflect(&self, i: usize, gamma: &RootVector) -> Result<RootVector> {
        let p = self.pairing(i, gamma)?;
        let mut out = gamma.clone();
        out.0[i] = checked_sub(out.0[i], p)?;
        Ok(out)
    }

    fn check_len(&self, gamma: &RootVector) -> Result<()> {
        if gamma.0.len() == self.rank {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.rank,
                found: gamma.0.len(),
            })
        }
    }
}

impl fmt::Display for GeneralizedCartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.entries.chunks(self.rank).enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            write!(f, "[{}]", cells.join(""))?;
        }
        Ok(())
    }
}

/// An element of the root lattice in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn zero(rank: usize) -> Self {
        RootVector(vec![0; rank])
    }

    /// The simple root `α_i` (0-based `i`).
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        RootVector(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn checked_add(&self, other: &RootVector) -> Result<RootVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&x, &y)| checked_add(x, y))
            .collect::<Result<Vec<_>>>()
            .map(RootVector)
    }
}

impl Neg for RootVector {
    type Output = RootVector;

    fn neg(self) -> RootVector {
        RootVector(self.0.into_iter().map(|x| -x).collect())
    }
}

impl Index<usize> for RootVector {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}
