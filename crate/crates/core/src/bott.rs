//! Bott-tower combinatorics of a word in the simple reflections.
//!
//! A word `β_1 … β_N` (letters are simple roots) determines the integers
//! `β_ij = ⟨β_i^∨, β_j⟩`, the fan of the toric special fiber with rays
//! `e_i^+` (standard basis) and `e_i^- = −e_i^+ − Σ_{j>i} β_ij e_j^+`, and the
//! invariants `α_ij^ε`. All indices in this API are 0-based; errors report
//! 1-based positions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{checked_add, checked_mul, checked_sub, Error, Result};
use crate::root_system::{GeneralizedCartanMatrix, RootVector};
use crate::toric::ToricDivisor;

/// A word in the simple reflections, stored with 0-based letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Word(letters))
    }

    /// Builds a word from 1-based letters, as written in input files.
    pub fn from_one_based(letters: &[usize]) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                bound: usize::MAX,
            });
        }
        Word::new(letters.iter().map(|l| l - 1).collect())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|l| l + 1).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A choice of sign per letter; indexes the maximal cones of the fan.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(pub Vec<Sign>);

impl SignVector {
    pub fn uniform(len: usize, sign: Sign) -> Self {
        SignVector(vec![sign; len])
    }

    /// Bit `k` of `mask` set means `ε_k = −`.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        SignVector(
            (0..len)
                .map(|k| if mask >> k & 1 == 1 { Sign::Minus } else { Sign::Plus })
                .collect(),
        )
    }

    pub fn mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Sign::Minus)
            .fold(0, |m, (k, _)| m | 1 << k)
    }

    /// All `2^len` sign vectors, ordered by mask.
    pub fn all(len: usize) -> impl Iterator<Item = SignVector> {
        assert!(len < 64, "sign vectors of length {len} cannot be enumerated");
        (0..1u64 << len).map(move |mask| SignVector::from_mask(len, mask))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn with_flipped(&self, k: usize) -> SignVector {
        let mut out = self.clone();
        out.0[k] = out.0[k].flip();
        out
    }
}

impl std::ops::Index<usize> for SignVector {
    type Output = Sign;

    fn index(&self, k: usize) -> &Sign {
        &self.0[k]
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.symbol()))
    }
}

impl FromStr for SignVector {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                other => Err(format!("invalid sign {other:?}")),
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(SignVector)
    }
}

/// A one-dimensional cone of the fan: `e_index^sign`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ray {
    pub index: usize,
    pub sign: Sign,
}

impl Ray {
    pub fn plus(index: usize) -> Self {
        Ray {
            index,
            sign: Sign::Plus,
        }
    }

    pub fn minus(index: usize) -> Self {
        Ray {
            index,
            sign: Sign::Minus,
        }
    }

    pub fn opposite(self) -> Self {
        Ray {
            index: self.index,
            sign: self.sign.flip(),
        }
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}{}", self.index + 1, self.sign.symbol())
    }
}

/// Coefficients `a_i` of `D = Σ a_i Z_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorCoeffs(pub Vec<i64>);

/// A character of the torus, in the basis dual to `(e_i^+)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(len: usize) -> Self {
        Weight(vec![0; len])
    }
}

/// Affine form `Σ_j coeffs[j]·a_j` in the divisor coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinearForm(pub Vec<i64>);

impl LinearForm {
    pub fn eval(&self, a: &[i64]) -> Result<i64> {
        self.0
            .iter()
            .zip(a)
            .try_fold(0i64, |acc, (&c, &x)| checked_add(acc, checked_mul(c, x)?))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}a{}", j + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", j + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Derived invariants of a (Cartan matrix, word) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BottData {
    gcm: GeneralizedCartanMatrix,
    word: Word,
    beta: Vec<Vec<i64>>,
    rays_plus: Vec<Vec<i64>>,
    rays_minus: Vec<Vec<i64>>,
}

impl BottData {
    pub fn new(gcm: GeneralizedCartanMatrix, word: Word) -> Result<Self> {
        for &l in word.letters() {
            gcm.check_index(l)?;
        }
        let n = word.len();
        let letters = word.letters();
        let beta: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| gcm.entry(letters[i], letters[j])).collect())
            .collect();
        let rays_plus: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        let rays_minus: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match j.cmp(&i) {
                        std::cmp::Ordering::Less => 0,
                        std::cmp::Ordering::Equal => -1,
                        std::cmp::Ordering::Greater => -beta[i][j],
                    })
                    .collect()
            })
            .collect();
        Ok(BottData {
            gcm,
            word,
            beta,
            rays_plus,
            rays_minus,
        })
    }

    /// Length `N` of the word, i.e. the dimension of the variety.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn gcm(&self) -> &GeneralizedCartanMatrix {
        &self.gcm
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn beta(&self, i: usize, j: usize) -> i64 {
        self.beta[i][j]
    }

    pub fn beta_matrix(&self) -> &[Vec<i64>] {
        &self.beta
    }

    /// Primitive generator of `ray` in the basis `(e_i^+)`.
    pub fn ray_vector(&self, ray: Ray) -> &[i64] {
        match ray.sign {
            Sign::Plus => &self.rays_plus[ray.index],
            Sign::Minus => &self.rays_minus[ray.index],
        }
    }

    pub(crate) fn check_position(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i + 1,
                bound: self.len(),
            })
        }
    }

    pub(crate) fn check_signs(&self, eps: &SignVector) -> Result<()> {
        check_len(self.len(), eps.len())
    }

    fn check_pair(&self, i: usize, j: usize, eps: &SignVector) -> Result<()> {
        self.check_position(i)?;
        self.check_position(j)?;
        self.check_signs(eps)?;
        if i >= j {
            return Err(Error::NotStrictlyIncreasing(i + 1, j + 1));
        }
        Ok(())
    }

    /// `α_ij^ε` straight from its definition: push `β_j` through the
    /// reflections `s_{β_k}`, `i < k < j`, `ε_k = −`, largest `k` acting
    /// first, then pair with `β_i^∨`.
    pub fn alpha_reflect(&self, i: usize, j: usize, eps: &SignVector) -> Result<i64> {
        self.check_pair(i, j, eps)?;
        let letters = self.word.letters();
        let rank = self.gcm.rank();
        let mut gamma = RootVector::simple(rank, letters[j]);
        for k in (i + 1..j).rev() {
            if eps[k] == Sign::Minus {
                gamma = self.gcm.reflect(letters[k], &gamma)?;
            }
        }
        self.gcm.pairing(letters[i], &gamma)
    }

    /// `α_ij^ε` as a signed sum over chains `i = i_0 < … < i_k = j` whose
    /// interior vertices all carry `ε = −`, each chain weighted by
    /// `(−1)^{k+1} Π β_{i_x i_{x+1}}`.
    pub fn alpha_path(&self, i: usize, j: usize, eps: &SignVector) -> Result<i64> {
        self.check_pair(i, j, eps)?;
        chain_sum(&self.beta, eps, i, j, 1, 1)
    }

    /// `C_i^ε = a_i + Σ_{j>i, ε_j=+} α_ij^ε a_j`.
    ///
    /// Reads only `ε_{i+1}, …, ε_N`.
    pub fn big_c(&self, coeffs: &DivisorCoeffs, i: usize, eps: &SignVector) -> Result<i64> {
        self.check_position(i)?;
        self.check_signs(eps)?;
        check_len(self.len(), coeffs.0.len())?;
        let mut c = coeffs.0[i];
        for j in i + 1..self.len() {
            if eps[j] == Sign::Plus {
                let alpha = self.alpha_reflect(i, j, eps)?;
                c = checked_add(c, checked_mul(alpha, coeffs.0[j])?)?;
            }
        }
        Ok(c)
    }

    /// The distinct linear forms `C_i^ε` over all suffixes `ε_{i+1..N}`.
    ///
    /// Walks the suffixes depth-first, carrying the coroot
    /// `(Π s_{β_k})^{-1} β_i^∨` so each `α_ij^ε` is a single pairing.
    pub fn c_forms(&self, i: usize) -> Result<BTreeSet<LinearForm>> {
        self.check_position(i)?;
        let n = self.len();
        let mut coeffs = vec![0i64; n];
        coeffs[i] = 1;
        let mut coroot = vec![0i64; self.gcm.rank()];
        coroot[self.word.letters()[i]] = 1;
        let mut out = BTreeSet::new();
        self.c_forms_rec(i + 1, &mut coeffs, &coroot, &mut out)?;
        Ok(out)
    }

    fn c_forms_rec(
        &self,
        j: usize,
        coeffs: &mut Vec<i64>,
        coroot: &[i64],
        out: &mut BTreeSet<LinearForm>,
    ) -> Result<()> {
        if j == self.len() {
            out.insert(LinearForm(coeffs.clone()));
            return Ok(());
        }
        let letter = self.word.letters()[j];
        let alpha = coroot_pairing(&self.gcm, coroot, letter)?;
        // ε_j = +: contributes α_ij a_j, coroot unchanged.
        coeffs[j] = alpha;
        self.c_forms_rec(j + 1, coeffs, coroot, out)?;
        // ε_j = −: no a_j term, coroot reflected by s_{β_j}.
        coeffs[j] = 0;
        let mut reflected = coroot.to_vec();
        reflected[letter] = checked_sub(reflected[letter], alpha)?;
        self.c_forms_rec(j + 1, coeffs, &reflected, out)
    }

    /// Minimum and maximum of `α_ij^ε` over all interior sign patterns.
    pub fn alpha_range(&self, i: usize, j: usize) -> Result<(i64, i64)> {
        self.check_position(i)?;
        self.check_position(j)?;
        if i >= j {
            return Err(Error::NotStrictlyIncreasing(i + 1, j + 1));
        }
        let mut coroot = vec![0i64; self.gcm.rank()];
        coroot[self.word.letters()[i]] = 1;
        let mut range = (i64::MAX, i64::MIN);
        self.alpha_range_rec(i + 1, j, &coroot, &mut range)?;
        Ok(range)
    }

    fn alpha_range_rec(&self, k: usize, j: usize, coroot: &[i64], range: &mut (i64, i64)) -> Result<()> {
        let letters = self.word.letters();
        if k == j {
            let alpha = coroot_pairing(&self.gcm, coroot, letters[j])?;
            range.0 = range.0.min(alpha);
            range.1 = range.1.max(alpha);
            return Ok(());
        }
        self.alpha_range_rec(k + 1, j, coroot, range)?;
        let p = coroot_pairing(&self.gcm, coroot, letters[k])?;
        let mut reflected = coroot.to_vec();
        reflected[letters[k]] = checked_sub(reflected[letters[k]], p)?;
        self.alpha_range_rec(k + 1, j, &reflected, range)
    }

    /// Corner weight `x^ε`, built from `i = N` downward:
    /// `x_i = −a_i` if `ε_i = +`, else `x_i = −Σ_{j>i} β_ij x_j`.
    pub fn x_vector(&self, coeffs: &DivisorCoeffs, eps: &SignVector) -> Result<Weight> {
        self.check_signs(eps)?;
        check_len(self.len(), coeffs.0.len())?;
        let n = self.len();
        let mut x = vec![0i64; n];
        for i in (0..n).rev() {
            x[i] = match eps[i] {
                Sign::Plus => checked_sub(0, coeffs.0[i])?,
                Sign::Minus => {
                    let mut s = 0i64;
                    for j in i + 1..n {
                        s = checked_add(s, checked_mul(self.beta[i][j], x[j])?)?;
                    }
                    checked_sub(0, s)?
                }
            };
        }
        Ok(Weight(x))
    }

    /// Closed-form expansion of `x^ε` over chains starting at `i` whose
    /// vertices before the endpoint all carry `ε = −`.
    pub fn x_vector_path(&self, coeffs: &DivisorCoeffs, eps: &SignVector) -> Result<Weight> {
        self.check_signs(eps)?;
        check_len(self.len(), coeffs.0.len())?;
        let n = self.len();
        let mut x = vec![0i64; n];
        for (i, xi) in x.iter_mut().enumerate() {
            let mut total = if eps[i] == Sign::Plus {
                checked_sub(0, coeffs.0[i])?
            } else {
                0
            };
            if eps[i] == Sign::Minus {
                for h in i + 1..n {
                    if eps[h] == Sign::Plus {
                        let paths = chain_sum(&self.beta, eps, i, h, 1, 1)?;
                        total = checked_add(total, checked_mul(paths, coeffs.0[h])?)?;
                    }
                }
            }
            *xi = total;
        }
        Ok(Weight(x))
    }

    /// `φ_m(ray) = ⟨m, ray⟩ + h_D(ray)`, where `h_D` takes value `a_i` on
    /// `e_i^+` and `b_i` on `e_i^-`.
    pub fn phi(&self, div: &ToricDivisor, m: &Weight, ray: Ray) -> Result<i128> {
        self.check_position(ray.index)?;
        check_len(self.len(), m.0.len())?;
        check_len(self.len(), div.len())?;
        let i = ray.index;
        let v = match ray.sign {
            Sign::Plus => i128::from(m.0[i]) + i128::from(div.a[i]),
            Sign::Minus => i128::from(div.b[i]) - i128::from(m.0[i]) - self.tail_dot(i, &m.0)?,
        };
        Ok(v)
    }

    /// `Σ_{j>i} β_ij m_j`, overflow-checked in 128-bit arithmetic.
    pub(crate) fn tail_dot(&self, i: usize, m: &[i64]) -> Result<i128> {
        let row = &self.beta[i];
        let mut s = 0i128;
        for j in i + 1..self.len() {
            s = s
                .checked_add(i128::from(row[j]) * i128::from(m[j]))
                .ok_or(Error::Overflow)?;
        }
        Ok(s)
    }
}

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, found })
    }
}

/// `⟨d, α_l⟩` for a coroot `d = Σ_k d_k α_k^∨`.
fn coroot_pairing(gcm: &GeneralizedCartanMatrix, coroot: &[i64], l: usize) -> Result<i64> {
    coroot.iter().enumerate().try_fold(0i64, |acc, (k, &d)| {
        if d == 0 {
            Ok(acc)
        } else {
            checked_add(acc, checked_mul(d, gcm.entry(k, l))?)
        }
    })
}

/// Sum over chains `from = i_0 < i_1 < … < i_k = to` with every vertex
/// strictly between `from` and `to` carrying `ε = −`, of
/// `(−1)^{k+1} Π β_{i_x i_{x+1}}`. `sign` and `prod` carry the partial chain.
fn chain_sum(beta: &[Vec<i64>], eps: &SignVector, from: usize, to: usize, sign: i64, prod: i64) -> Result<i64> {
    let mut total = 0i64;
    for next in from + 1..=to {
        let p = checked_mul(prod, beta[from][next])?;
        if next == to {
            total = checked_add(total, checked_mul(sign, p)?)?;
        } else if eps[next] == Sign::Minus && p != 0 {
            total = checked_add(total, chain_sum(beta, eps, next, to, -sign, p)?)?;
        }
    }
    Ok(total)
}
