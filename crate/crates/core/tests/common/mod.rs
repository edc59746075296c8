//! Random and exhaustive instance families shared by the integration tests.
#![allow(dead_code)]

use bottsam_core::{BottData, CartanFamily, DivisorCoeffs, GeneralizedCartanMatrix, ToricDivisor, Word};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A GCM of the given rank with off-diagonal entries in `[min_entry, 0]`.
pub fn random_gcm(rng: &mut impl Rng, rank: usize, min_entry: i64) -> GeneralizedCartanMatrix {
    let mut rows = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        rows[i][i] = 2;
        for j in i + 1..rank {
            if rng.gen_bool(0.6) {
                rows[i][j] = rng.gen_range(min_entry..=-1);
                rows[j][i] = rng.gen_range(min_entry..=-1);
            }
        }
    }
    GeneralizedCartanMatrix::new(&rows).expect("generated matrix satisfies the axioms")
}

pub fn random_bott(rng: &mut impl Rng, max_rank: usize, min_len: usize, max_len: usize, min_entry: i64) -> BottData {
    let rank = rng.gen_range(1..=max_rank);
    let gcm = random_gcm(rng, rank, min_entry);
    let len = rng.gen_range(min_len..=max_len);
    let letters = (0..len).map(|_| rng.gen_range(0..rank)).collect();
    BottData::new(gcm, Word::new(letters).unwrap()).unwrap()
}

pub fn random_vec(rng: &mut impl Rng, len: usize, bound: i64) -> Vec<i64> {
    (0..len).map(|_| rng.gen_range(-bound..=bound)).collect()
}

pub fn random_coeffs(rng: &mut impl Rng, len: usize, bound: i64) -> DivisorCoeffs {
    DivisorCoeffs(random_vec(rng, len, bound))
}

pub fn random_toric(rng: &mut impl Rng, len: usize, bound: i64) -> ToricDivisor {
    ToricDivisor::new(random_vec(rng, len, bound), random_vec(rng, len, bound)).unwrap()
}

pub fn type_a(rank: usize, one_based: &[usize]) -> BottData {
    let gcm = GeneralizedCartanMatrix::of_type(CartanFamily::A, rank).unwrap();
    BottData::new(gcm, Word::from_one_based(one_based).unwrap()).unwrap()
}

/// Every word of length `1..=max_len` over the letters of type `A_rank`.
pub fn all_type_a_words(rank: usize, max_len: usize) -> Vec<BottData> {
    let gcm = GeneralizedCartanMatrix::of_type(CartanFamily::A, rank).unwrap();
    let mut out = Vec::new();
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        words = words
            .iter()
            .flat_map(|w| {
                (0..rank).map(move |l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
        out.extend(words.iter().map(|w| BottData::new(gcm.clone(), Word::new(w.clone()).unwrap()).unwrap()));
    }
    out
}

/// Every integer vector of the given length with entries in `[lo, hi]`.
pub fn all_vectors(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (lo..=hi).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// The forms `C_i^ε` of the `A_3` word `(2,1,3,2)`, as coefficient vectors.
pub fn sl4_table() -> Vec<Vec<Vec<i64>>> {
    vec![
        vec![
            vec![1, 0, 0, 0],
            vec![1, -1, 0, 0],
            vec![1, 0, -1, 0],
            vec![1, -1, -1, 0],
            vec![1, -1, 0, 1],
            vec![1, 0, -1, 1],
            vec![1, -1, -1, 2],
        ],
        vec![vec![0, 1, 0, 0], vec![0, 1, 0, -1]],
        vec![vec![0, 0, 1, 0], vec![0, 0, 1, -1]],
        vec![vec![0, 0, 0, 1]],
    ]
}
