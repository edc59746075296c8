//! Finite simplicial complexes and their reduced cohomology over the
//! rationals, and the complex `Σ_m` of rays on which `φ_m` is negative.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::bott::{check_len, BottData, Ray, Weight};
use crate::error::Result;
use crate::linalg::{ChainComplex, SparseColumn};
use crate::toric::ToricDivisor;

/// Finitely supported cohomology dimensions, keyed by degree.
///
/// Only nonzero dimensions are stored, so equality is structural.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct CohomologyDims(BTreeMap<usize, u64>);

impl CohomologyDims {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(degree: usize, dim: u64) -> Self {
        let mut d = Self::default();
        d.add(degree, dim);
        d
    }

    pub fn get(&self, degree: usize) -> u64 {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn add(&mut self, degree: usize, dim: u64) {
        if dim > 0 {
            *self.0.entry(degree).or_insert(0) += dim;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    /// `Σ (−1)^i dim_i`.
    pub fn euler(&self) -> i64 {
        self.iter()
            .map(|(d, v)| if d % 2 == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }
}

impl FromIterator<(usize, u64)> for CohomologyDims {
    fn from_iter<I: IntoIterator<Item = (usize, u64)>>(iter: I) -> Self {
        let mut d = CohomologyDims::zero();
        for (k, v) in iter {
            d.add(k, v);
        }
        d
    }
}

impl fmt::Display for CohomologyDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(d, v)| format!("{d}:{v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// An abstract simplicial complex on at most 64 labelled vertices.
///
/// Faces are bitmasks over vertex positions and always include the empty
/// face when the complex is nonempty. The void complex has no faces at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex<V> {
    vertices: Vec<V>,
    faces: BTreeSet<u64>,
}

impl<V> SimplicialComplex<V> {
    /// Builds the complex generated by the given faces (lists of vertex
    /// positions), closing under subsets.
    pub fn from_generators(vertices: Vec<V>, generators: &[Vec<usize>]) -> Self {
        assert!(vertices.len() <= 64, "at most 64 vertices are supported");
        let mut faces = BTreeSet::new();
        for g in generators {
            let mask = g.iter().fold(0u64, |m, &v| {
                assert!(v < vertices.len(), "vertex {v} out of range");
                m | 1 << v
            });
            insert_with_subsets(&mut faces, mask);
        }
        // every vertex is a face
        for v in 0..vertices.len() {
            insert_with_subsets(&mut faces, 1 << v);
        }
        let c = SimplicialComplex { vertices, faces };
        debug_assert!(c.is_closed());
        c
    }

    /// Builds a complex from an explicit face list, which must already be
    /// closed under subsets.
    pub fn from_faces(vertices: Vec<V>, faces: BTreeSet<u64>) -> Self {
        let c = SimplicialComplex { vertices, faces };
        assert!(c.is_closed(), "face set is not closed under subsets");
        c
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn faces(&self) -> impl Iterator<Item = u64> + '_ {
        self.faces.iter().copied()
    }

    /// True iff the complex has no faces, not even the empty one.
    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Number of faces of each dimension `0, 1, …` (the empty face excluded).
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for &face in &self.faces {
            let k = face.count_ones() as usize;
            if k == 0 {
                continue;
            }
            if f.len() < k {
                f.resize(k, 0);
            }
            f[k - 1] += 1;
        }
        f
    }

    pub fn is_closed(&self) -> bool {
        let nonempty = !self.vertices.is_empty();
        if nonempty != self.faces.contains(&0) {
            return false;
        }
        self.faces.iter().all(|&f| {
            f >> self.vertices.len() == 0
                && bits(f).all(|b| self.faces.contains(&(f & !(1 << b))))
        })
    }

    /// `Σ (−1)^i f_i − 1`.
    pub fn reduced_euler(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &n)| if i % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum::<i64>()
            - 1
    }

    /// Augmented chain complex: degree `k + 1` holds the `k`-faces, degree 0
    /// the empty face.
    fn augmented_chain_complex(&self) -> ChainComplex {
        let top = self.faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
        let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
        for &f in &self.faces {
            by_size[f.count_ones() as usize].push(f);
        }
        let index: Vec<BTreeMap<u64, usize>> = by_size
            .iter()
            .map(|fs| fs.iter().enumerate().map(|(i, &f)| (f, i)).collect())
            .collect();
        let boundaries = by_size
            .iter()
            .enumerate()
            .map(|(size, fs)| {
                if size == 0 {
                    return vec![SparseColumn::new(); fs.len()];
                }
                fs.iter()
                    .map(|&f| {
                        let mut col: SparseColumn = bits(f)
                            .enumerate()
                            .map(|(pos, b)| {
                                let sign = if pos % 2 == 0 { 1 } else { -1 };
                                (index[size - 1][&(f & !(1 << b))], sign)
                            })
                            .collect();
                        col.sort_unstable();
                        col
                    })
                    .collect()
            })
            .collect();
        ChainComplex::new(boundaries)
    }
}

fn bits(mask: u64) -> impl Iterator<Item = u32> {
    (0..64).filter(move |b| mask >> b & 1 == 1)
}

fn insert_with_subsets(faces: &mut BTreeSet<u64>, mask: u64) {
    if !faces.insert(mask) {
        return;
    }
    for b in bits(mask) {
        insert_with_subsets(faces, mask & !(1 << b));
    }
}

/// Dimensions of `H̃^i(c; Q)`, from exact ranks of the coboundary maps.
///
/// The void complex has all dimensions zero; distinguish it from an acyclic
/// nonempty complex with [`SimplicialComplex::is_void`].
pub fn reduced_cohomology<V>(c: &SimplicialComplex<V>) -> Result<CohomologyDims> {
    if c.is_void() {
        return Ok(CohomologyDims::zero());
    }
    let betti = c.augmented_chain_complex().betti_numbers()?;
    // Over a field, reduced cohomology and reduced homology have equal
    // dimensions; H̃^{-1} vanishes for a nonempty complex.
    Ok(betti
        .iter()
        .enumerate()
        .skip(1)
        .map(|(deg, &b)| (deg - 1, b as u64))
        .collect())
}

/// `Σ_m`: rays with `φ_m < 0`, with a face for every subset containing no
/// opposite pair `{e_i^+, e_i^-}`. Vertices are ordered by index, then sign.
pub fn sigma_m(bott: &BottData, div: &ToricDivisor, m: &Weight) -> Result<SimplicialComplex<Ray>> {
    check_len(bott.len(), div.len())?;
    check_len(bott.len(), m.0.len())?;
    let mut vertices = Vec::new();
    for i in 0..bott.len() {
        for ray in [Ray::plus(i), Ray::minus(i)] {
            if bott.phi(div, m, ray)? < 0 {
                vertices.push(ray);
            }
        }
    }
    if vertices.is_empty() {
        return Ok(SimplicialComplex {
            vertices,
            faces: BTreeSet::new(),
        });
    }
    // Group vertex positions by index; a face picks at most one per group.
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (pos, ray) in vertices.iter().enumerate() {
        match groups.last_mut() {
            Some(g) if vertices[g[0]].index == ray.index => g.push(pos),
            _ => groups.push(vec![pos]),
        }
    }
    let mut faces = BTreeSet::from([0u64]);
    for g in &groups {
        let current: Vec<u64> = faces.iter().copied().collect();
        for f in current {
            for &pos in g {
                faces.insert(f | 1 << pos);
            }
        }
    }
    Ok(SimplicialComplex::from_faces(vertices, faces))
}

/// Cohomology of the toric divisor in the weight `m`, via the simplicial
/// complex `Σ_m`: `H^0 = Q` if `Σ_m` is void, otherwise
/// `H^i = H̃^{i-1}(Σ_m)`.
pub fn demazure_weight(bott: &BottData, div: &ToricDivisor, m: &Weight) -> Result<CohomologyDims> {
    let sigma = sigma_m(bott, div, m)?;
    if sigma.is_void() {
        return Ok(CohomologyDims::single(0, 1));
    }
    Ok(reduced_cohomology(&sigma)?
        .iter()
        .map(|(d, v)| (d + 1, v))
        .collect())
}
