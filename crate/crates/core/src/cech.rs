//! Brute-force Čech cohomology over the affine cover by maximal cones.
//!
//! For a weight `m`, the character `χ^m` is a section of `O(D)` over the
//! affine chart of a cone exactly when `φ_m ≥ 0` on every generator of that
//! cone. Cones of the fan are simplicial, so the intersection of a family of
//! maximal cones `σ_ε` is spanned by the rays they all share. The alternating
//! Čech complex of the weight-`m` summand therefore has one basis element per
//! family of maximal cones whose shared rays all have `φ_m ≥ 0`.

use serde::Serialize;

use crate::bott::{check_len, BottData, Ray, Weight};
use crate::error::{Error, Result};
use crate::linalg::{ChainComplex, SparseColumn};
use crate::simplicial::CohomologyDims;
use crate::toric::{weight_box, CohomologyTable, TableBuilder, TableOptions, ToricDivisor};

/// Longest word the oracle accepts (a cover of 16 charts).
pub const MAX_ORACLE_LEN: usize = 4;

/// The alternating Čech complex of one weight: the cover (maximal cones as
/// sign masks, bit `k` set for `ε_k = −`) and, for every subset of the
/// cover, whether the weight has a section on the intersection.
#[derive(Debug, Clone)]
pub struct CechComplex {
    cover: Vec<u64>,
    active: Vec<bool>,
}

impl CechComplex {
    pub fn new(bott: &BottData, div: &ToricDivisor, m: &Weight, cover: Vec<u64>) -> Result<Self> {
        let n = bott.len();
        if n > MAX_ORACLE_LEN {
            return Err(Error::TooLarge {
                len: n,
                max: MAX_ORACLE_LEN,
            });
        }
        check_len(n, div.len())?;
        check_len(n, m.0.len())?;
        let full = (1u64 << n) - 1;
        debug_assert_eq!(cover.len(), 1 << n);
        let (mut neg_plus, mut neg_minus) = (0u64, 0u64);
        for i in 0..n {
            if bott.phi(div, m, Ray::plus(i))? < 0 {
                neg_plus |= 1 << i;
            }
            if bott.phi(div, m, Ray::minus(i))? < 0 {
                neg_minus |= 1 << i;
            }
        }
        let subsets = 1usize << cover.len();
        // common_plus[S]: indices where every cone of S uses e_i^+; likewise minus.
        let mut common_plus = vec![full; subsets];
        let mut common_minus = vec![full; subsets];
        let mut active = vec![false; subsets];
        for s in 1..subsets {
            let low = s.trailing_zeros() as usize;
            let rest = s & (s - 1);
            let cone = cover[low];
            common_plus[s] = common_plus[rest] & !cone & full;
            common_minus[s] = common_minus[rest] & cone;
            active[s] = common_plus[s] & neg_plus == 0 && common_minus[s] & neg_minus == 0;
        }
        Ok(CechComplex { cover, active })
    }

    /// Cover ordered by sign mask.
    pub fn standard_cover(len: usize) -> Vec<u64> {
        (0..1u64 << len).collect()
    }

    pub fn cover(&self) -> &[u64] {
        &self.cover
    }

    /// Whether the weight has a section on the intersection of the cones in
    /// `subset` (a bitmask over cover positions).
    pub fn is_active(&self, subset: usize) -> bool {
        self.active[subset]
    }

    /// Cohomology dimensions over the rationals.
    ///
    /// The coboundary of a `p`-cochain only reaches supersets of active
    /// subsets, which are again active, so the active subsets span a
    /// subcomplex: the cochains of the full simplex on the cover relative to
    /// the down-closed complex `K` of inactive subsets. The full simplex is
    /// acyclic, so `H^p = H̃^{p-1}(K)`; whichever side has fewer cells is
    /// reduced.
    pub fn cohomology(&self) -> Result<CohomologyDims> {
        let active = self.active.iter().filter(|&&a| a).count();
        if active <= self.active.len() - active {
            self.cohomology_direct()
        } else {
            self.cohomology_via_inactive()
        }
    }

    /// Reduces the active cochain complex itself.
    pub fn cohomology_direct(&self) -> Result<CohomologyDims> {
        self.betti(|s| s != 0 && self.active[s], 1)
    }

    /// Reduces the augmented complex of inactive subsets (empty set included).
    pub fn cohomology_via_inactive(&self) -> Result<CohomologyDims> {
        self.betti(|s| !self.active[s], 0)
    }

    /// Betti numbers of the complex whose cells are the subsets accepted by
    /// `member`, in degree `|S| - shift`, with alternating boundary.
    fn betti(&self, member: impl Fn(usize) -> bool, shift: usize) -> Result<CohomologyDims> {
        let width = self.cover.len();
        let subsets = self.active.len();
        let mut index = vec![usize::MAX; subsets];
        let mut by_degree: Vec<Vec<usize>> = vec![Vec::new(); width + 1 - shift];
        for s in 0..subsets {
            if member(s) {
                let deg = s.count_ones() as usize - shift;
                index[s] = by_degree[deg].len();
                by_degree[deg].push(s);
            }
        }
        let boundaries: Vec<Vec<SparseColumn>> = by_degree
            .iter()
            .enumerate()
            .map(|(deg, cells)| {
                cells
                    .iter()
                    .map(|&s| {
                        if deg == 0 {
                            return SparseColumn::new();
                        }
                        let mut col: SparseColumn = (0..width)
                            .filter(|b| s >> b & 1 == 1)
                            .enumerate()
                            .filter_map(|(t, b)| {
                                let face = s & !(1 << b);
                                member(face).then(|| (index[face], if t % 2 == 0 { 1 } else { -1 }))
                            })
                            .collect();
                        col.sort_unstable();
                        col
                    })
                    .collect()
            })
            .collect();
        let betti = ChainComplex::new(boundaries).betti_numbers()?;
        Ok(betti.iter().enumerate().map(|(d, &b)| (d, b as u64)).collect())
    }
}

/// Čech cohomology of the toric divisor in weight `m`.
pub fn cech_weight(bott: &BottData, div: &ToricDivisor, m: &Weight) -> Result<CohomologyDims> {
    if bott.len() > MAX_ORACLE_LEN {
        return Err(Error::TooLarge {
            len: bott.len(),
            max: MAX_ORACLE_LEN,
        });
    }
    cech_weight_with_cover(bott, div, m, CechComplex::standard_cover(bott.len()))
}

/// As [`cech_weight`], with the cover charts listed in the given order.
pub fn cech_weight_with_cover(
    bott: &BottData,
    div: &ToricDivisor,
    m: &Weight,
    cover: Vec<u64>,
) -> Result<CohomologyDims> {
    CechComplex::new(bott, div, m, cover)?.cohomology()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CechTable {
    /// Totals over the weight box and the one-layer shell around it.
    pub table: CohomologyTable,
    /// Shell weights with nonzero cohomology; nonempty means the box is wrong.
    pub shell_nonzero: Vec<Weight>,
}

/// Sums [`cech_weight`] over the weight box and a one-layer shell around it.
pub fn cech_table(bott: &BottData, div: &ToricDivisor, opts: &TableOptions) -> Result<CechTable> {
    if bott.len() > MAX_ORACLE_LEN {
        return Err(Error::TooLarge {
            len: bott.len(),
            max: MAX_ORACLE_LEN,
        });
    }
    let inner = weight_box(bott, div)?;
    let outer = inner.enlarged(1)?;
    if outer.volume() > u128::from(opts.cap) {
        return Err(Error::BoxTooLarge { cap: opts.cap });
    }
    let mut out = TableBuilder::new(bott.len(), opts);
    let mut shell_nonzero = Vec::new();
    for m in outer.points() {
        let dims = cech_weight(bott, div, &m)?;
        if !dims.is_zero() && !inner.contains(&m) {
            shell_nonzero.push(m.clone());
        }
        for (degree, dim) in dims.iter() {
            out.record(&m.0, degree, dim);
        }
    }
    Ok(CechTable {
        table: out.finish(),
        shell_nonzero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bott::Word;
    use crate::root_system::{CartanFamily, GeneralizedCartanMatrix};

    fn bott(rank: usize, word: &[usize]) -> BottData {
        let gcm = GeneralizedCartanMatrix::of_type(CartanFamily::A, rank).unwrap();
        BottData::new(gcm, Word::from_one_based(word).unwrap()).unwrap()
    }

    #[test]
    fn projective_line_h1() {
        let b = bott(1, &[1]);
        let div = ToricDivisor::picard(vec![-2]);
        assert_eq!(cech_weight(&b, &div, &Weight(vec![1])).unwrap(), CohomologyDims::single(1, 1));
    }

    #[test]
    fn global_section_is_acyclic() {
        let b = bott(2, &[1, 2]);
        let div = ToricDivisor::picard(vec![1, 1]);
        assert_eq!(
            cech_weight(&b, &div, &Weight(vec![0, 0])).unwrap(),
            CohomologyDims::single(0, 1)
        );
    }

    #[test]
    fn sl4_witness() {
        let b = bott(3, &[2, 1, 3, 2]);
        let div = ToricDivisor::picard(vec![2; 4]);
        assert_eq!(
            cech_weight(&b, &div, &Weight(vec![-3, -2, -2, 0])).unwrap(),
            CohomologyDims::single(1, 1)
        );
        assert!(cech_weight(&b, &div, &Weight(vec![0, -2, -2, -3])).unwrap().is_zero());
    }

    #[test]
    fn activity_grows_with_the_family() {
        let b = bott(2, &[1, 2, 1]);
        let div = ToricDivisor::picard(vec![-1, 2, -3]);
        let c = CechComplex::new(&b, &div, &Weight(vec![1, -1, 2]), CechComplex::standard_cover(3)).unwrap();
        for s in 1usize..256 {
            for extra in 0..8 {
                if c.is_active(s) {
                    assert!(c.is_active(s | 1 << extra));
                }
            }
        }
    }

    #[test]
    fn both_reductions_agree() {
        let b = bott(3, &[2, 1, 3, 2]);
        let div = ToricDivisor::picard(vec![2, -1, 1, 0]);
        let bx = weight_box(&b, &div).unwrap().enlarged(1).unwrap();
        for m in bx.points().step_by(7) {
            let c = CechComplex::new(&b, &div, &m, CechComplex::standard_cover(4)).unwrap();
            assert_eq!(c.cohomology_direct().unwrap(), c.cohomology_via_inactive().unwrap(), "{m:?}");
        }
    }

    #[test]
    fn tables() {
        let opts = TableOptions::default();
        let t = cech_table(&bott(1, &[1]), &ToricDivisor::picard(vec![3]), &opts).unwrap();
        assert_eq!(t.table.dims, vec![4, 0]);
        assert!(t.shell_nonzero.is_empty());
        let t = cech_table(&bott(2, &[1, 1]), &ToricDivisor::picard(vec![1, 0]), &opts).unwrap();
        assert_eq!(t.table.dims, vec![2, 0, 0]);
        let t = cech_table(&bott(2, &[2, 1, 2]), &ToricDivisor::picard(vec![0; 3]), &opts).unwrap();
        assert_eq!(t.table.dims, vec![1, 0, 0, 0]);
    }

    #[test]
    fn too_large() {
        let b = bott(3, &[1, 2, 3, 1, 2]);
        let div = ToricDivisor::picard(vec![0; 5]);
        assert_eq!(
            cech_weight(&b, &div, &Weight::zero(5)),
            Err(Error::TooLarge { len: 5, max: 4 })
        );
    }
}
