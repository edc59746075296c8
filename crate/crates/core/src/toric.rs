//! Cohomology of torus-invariant divisors on the toric special fiber.
//!
//! The cohomology splits over the characters `m` of the torus. A weight
//! contributes nothing when some index `i` has `φ_m(e_i^+)` and `φ_m(e_i^-)`
//! of different signs (then `Σ_m` is a cone), and otherwise contributes one
//! dimension in degree `j_m = #{i : φ_m(e_i^+) < 0}` (then `Σ_m` is the
//! boundary complex of a `j_m`-dimensional cross-polytope).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bott::{check_len, BottData, DivisorCoeffs, Weight};
use crate::error::{checked_add, checked_mul, checked_sub, Error, Result};
use crate::simplicial::demazure_weight;

/// `Σ a_i D_{e_i^+} + Σ b_i D_{e_i^-}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ToricDivisor {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl ToricDivisor {
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        check_len(a.len(), b.len())?;
        Ok(ToricDivisor { a, b })
    }

    /// The degeneration of `Σ a_i Z_i`: no weight on the `e_i^-` rays.
    pub fn picard(a: Vec<i64>) -> Self {
        let b = vec![0; a.len()];
        ToricDivisor { a, b }
    }

    /// Minus the sum of all invariant prime divisors.
    pub fn canonical(len: usize) -> Self {
        ToricDivisor {
            a: vec![-1; len],
            b: vec![-1; len],
        }
    }

    /// `K − D`.
    pub fn serre_dual(&self) -> Result<Self> {
        let flip = |v: &[i64]| -> Result<Vec<i64>> {
            v.iter().map(|&x| checked_sub(-1, x)).collect()
        };
        Ok(ToricDivisor {
            a: flip(&self.a)?,
            b: flip(&self.b)?,
        })
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn is_picard(&self) -> bool {
        self.b.iter().all(|&x| x == 0)
    }

    pub fn picard_coeffs(&self) -> Result<DivisorCoeffs> {
        if self.is_picard() {
            Ok(DivisorCoeffs(self.a.clone()))
        } else {
            Err(Error::NotInPicardBasis)
        }
    }
}

impl From<&DivisorCoeffs> for ToricDivisor {
    fn from(c: &DivisorCoeffs) -> Self {
        ToricDivisor::picard(c.0.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum WeightClassification {
    AllZero,
    /// One-dimensional cohomology in degree `j_m`, zero elsewhere.
    Concentrated(usize),
}

/// Closed-form cohomology of a single weight.
pub fn classify_weight(bott: &BottData, div: &ToricDivisor, m: &Weight) -> Result<WeightClassification> {
    check_len(bott.len(), div.len())?;
    check_len(bott.len(), m.0.len())?;
    let mut negative = 0;
    for i in 0..bott.len() {
        let plus = i128::from(m.0[i]) + i128::from(div.a[i]);
        let minus = i128::from(div.b[i]) - i128::from(m.0[i]) - bott.tail_dot(i, &m.0)?;
        match (plus < 0, minus < 0) {
            (true, true) => negative += 1,
            (false, false) => {}
            _ => return Ok(WeightClassification::AllZero),
        }
    }
    Ok(WeightClassification::Concentrated(negative))
}

/// An integer box `lo ≤ m ≤ hi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct WeightBox {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl WeightBox {
    pub fn contains(&self, m: &Weight) -> bool {
        m.0.len() == self.lo.len()
            && m.0
                .iter()
                .zip(self.lo.iter().zip(&self.hi))
                .all(|(x, (lo, hi))| lo <= x && x <= hi)
    }

    /// Number of lattice points, saturating.
    pub fn volume(&self) -> u128 {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(&lo, &hi)| (i128::from(hi) - i128::from(lo) + 1) as u128)
            .fold(1u128, u128::saturating_mul)
    }

    /// The box grown by `k` in every direction.
    pub fn enlarged(&self, k: i64) -> Result<WeightBox> {
        Ok(WeightBox {
            lo: self.lo.iter().map(|&x| checked_sub(x, k)).collect::<Result<_>>()?,
            hi: self.hi.iter().map(|&x| checked_add(x, k)).collect::<Result<_>>()?,
        })
    }

    /// All lattice points in lexicographic order.
    pub fn points(&self) -> BoxPoints<'_> {
        BoxPoints {
            bx: self,
            next: Some(self.lo.clone()),
        }
    }
}

pub struct BoxPoints<'a> {
    bx: &'a WeightBox,
    next: Option<Vec<i64>>,
}

impl Iterator for BoxPoints<'_> {
    type Item = Weight;

    fn next(&mut self) -> Option<Weight> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        for k in (0..succ.len()).rev() {
            if succ[k] < self.bx.hi[k] {
                succ[k] += 1;
                self.next = Some(succ);
                break;
            }
            succ[k] = self.bx.lo[k];
        }
        Some(Weight(cur))
    }
}

/// A box containing every weight whose cohomology is nonzero.
///
/// Built from `i = N` down by interval arithmetic: with
/// `T_i = b_i − Σ_{j>i} β_ij m_j` ranging over `[S_lo, S_hi]`, a weight with
/// matched signs at `i` has `m_i ∈ [−a_i, T_i] ∪ [T_i + 1, −a_i − 1]`. The box
/// takes `m_i ∈ [min(−a_i, S_lo), max(−a_i, S_hi)]`, which also holds every
/// corner `x^ε` when `b = 0`.
pub fn weight_box(bott: &BottData, div: &ToricDivisor) -> Result<WeightBox> {
    check_len(bott.len(), div.len())?;
    let n = bott.len();
    let mut lo = vec![0i64; n];
    let mut hi = vec![0i64; n];
    for i in (0..n).rev() {
        let (mut s_lo, mut s_hi) = (div.b[i], div.b[i]);
        for j in i + 1..n {
            let beta = bott.beta(i, j);
            let p = checked_mul(beta, lo[j])?;
            let q = checked_mul(beta, hi[j])?;
            s_lo = checked_sub(s_lo, p.max(q))?;
            s_hi = checked_sub(s_hi, p.min(q))?;
        }
        let corner = checked_sub(0, div.a[i])?;
        lo[i] = corner.min(s_lo);
        hi[i] = corner.max(s_hi);
    }
    Ok(WeightBox { lo, hi })
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Witness {
    pub weight: Weight,
    pub degree: usize,
}

/// `h^0, …, h^N` of a toric divisor, with optional witness weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub dims: Vec<u64>,
    pub euler: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Witness>>,
    pub witnesses_truncated: bool,
}

impl CohomologyTable {
    pub fn is_zero_in(&self, degree: usize) -> bool {
        self.dims.get(degree).copied().unwrap_or(0) == 0
    }
}

pub const DEFAULT_POINT_CAP: u64 = 100_000_000;
pub const DEFAULT_WITNESS_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableOptions {
    /// Maximum number of enumeration steps (box points, for the naive
    /// scans) before giving up.
    pub cap: u64,
    pub collect_witnesses: bool,
    /// Witnesses beyond this many (lexicographically smallest kept) are dropped.
    pub witness_cap: usize,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            cap: DEFAULT_POINT_CAP,
            collect_witnesses: false,
            witness_cap: DEFAULT_WITNESS_CAP,
        }
    }
}

impl TableOptions {
    pub fn with_witnesses(mut self) -> Self {
        self.collect_witnesses = true;
        self
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }
}

/// Accumulates per-degree counts; order of insertion does not matter.
pub(crate) struct TableBuilder {
    dims: Vec<u64>,
    witnesses: Option<BTreeSet<Witness>>,
    witness_cap: usize,
    truncated: bool,
}

impl TableBuilder {
    pub(crate) fn new(len: usize, opts: &TableOptions) -> Self {
        TableBuilder {
            dims: vec![0; len + 1],
            witnesses: opts.collect_witnesses.then(BTreeSet::new),
            witness_cap: opts.witness_cap,
            truncated: false,
        }
    }

    pub(crate) fn record(&mut self, m: &[i64], degree: usize, dim: u64) {
        if dim == 0 {
            return;
        }
        if degree >= self.dims.len() {
            self.dims.resize(degree + 1, 0);
        }
        self.dims[degree] += dim;
        if let Some(ws) = self.witnesses.as_mut() {
            ws.insert(Witness {
                weight: Weight(m.to_vec()),
                degree,
            });
            if ws.len() > self.witness_cap {
                ws.pop_last();
                self.truncated = true;
            }
        }
    }

    /// Records the `count` weights `m` with `m_0 = first, first + 1, …`,
    /// each contributing one dimension in `degree`.
    fn record_run(&mut self, m: &mut [i64], first: i64, count: u64, degree: usize) -> Result<()> {
        self.dims[degree] = self.dims[degree].checked_add(count).ok_or(Error::Overflow)?;
        if let Some(ws) = self.witnesses.as_mut() {
            // only the smallest few of a run can be among the smallest overall
            let keep = count.min(self.witness_cap as u64 + 1) as i64;
            for t in 0..keep {
                m[0] = first + t;
                ws.insert(Witness {
                    weight: Weight(m.to_vec()),
                    degree,
                });
                if ws.len() > self.witness_cap {
                    ws.pop_last();
                    self.truncated = true;
                }
            }
        }
        Ok(())
    }

    pub(crate) fn finish(self) -> CohomologyTable {
        let euler = self
            .dims
            .iter()
            .enumerate()
            .map(|(i, &h)| if i % 2 == 0 { h as i64 } else { -(h as i64) })
            .sum();
        CohomologyTable {
            dims: self.dims,
            euler,
            witnesses: self.witnesses.map(|w| w.into_iter().collect()),
            witnesses_truncated: self.truncated,
        }
    }
}

/// Cohomology table by the closed-form classification.
///
/// Scans the weight box from the last coordinate inward and abandons a
/// whole sub-box as soon as the already-fixed coordinates give a mixed-sign
/// index. The first coordinate is never enumerated: for fixed later
/// coordinates its admissible values form two intervals, counted directly.
/// The cap bounds the number of enumeration steps.
pub fn cohomology_table(bott: &BottData, div: &ToricDivisor, opts: &TableOptions) -> Result<CohomologyTable> {
    let bx = weight_box(bott, div)?;
    let n = bott.len();
    let mut scan = Scan {
        bott,
        div,
        bx: &bx,
        m: vec![0; n],
        visited: 0,
        cap: opts.cap,
        out: TableBuilder::new(n, opts),
    };
    scan.descend(n, 0)?;
    Ok(scan.out.finish())
}

struct Scan<'a> {
    bott: &'a BottData,
    div: &'a ToricDivisor,
    bx: &'a WeightBox,
    m: Vec<i64>,
    visited: u64,
    cap: u64,
    out: TableBuilder,
}

impl Scan<'_> {
    /// Coordinates `level..N` are fixed and sign-matched; `negative` of them
    /// have both values negative.
    fn descend(&mut self, level: usize, negative: usize) -> Result<()> {
        let i = level - 1;
        let tail = i128::from(self.div.b[i]) - self.bott.tail_dot(i, &self.m)?;
        let corner = -i128::from(self.div.a[i]);
        let (lo, hi) = (i128::from(self.bx.lo[i]), i128::from(self.bx.hi[i]));
        // both φ ≥ 0: −a_i ≤ m_i ≤ T_i; both φ < 0: T_i < m_i < −a_i
        let ranges = [(corner, tail, negative), (tail + 1, corner - 1, negative + 1)];
        for (from, to, neg) in ranges {
            let (from, to) = (from.max(lo), to.min(hi));
            if from > to {
                continue;
            }
            if i == 0 {
                // the last free coordinate: count the whole run at once
                self.step()?;
                self.out.record_run(&mut self.m, from as i64, (to - from + 1) as u64, neg)?;
                continue;
            }
            for v in from..=to {
                self.step()?;
                self.m[i] = v as i64;
                self.descend(i, neg)?;
            }
        }
        self.m[i] = 0;
        Ok(())
    }

    fn step(&mut self) -> Result<()> {
        self.visited += 1;
        if self.visited > self.cap {
            return Err(Error::BoxTooLarge { cap: self.cap });
        }
        Ok(())
    }
}

/// Cohomology table by computing `Σ_m` and its reduced cohomology for every
/// point of the weight box.
pub fn demazure_table(bott: &BottData, div: &ToricDivisor, opts: &TableOptions) -> Result<CohomologyTable> {
    let bx = weight_box(bott, div)?;
    if bx.volume() > u128::from(opts.cap) {
        return Err(Error::BoxTooLarge { cap: opts.cap });
    }
    let mut out = TableBuilder::new(bott.len(), opts);
    for m in bx.points() {
        for (degree, dim) in demazure_weight(bott, div, &m)?.iter() {
            out.record(&m.0, degree, dim);
        }
    }
    Ok(out.finish())
}
