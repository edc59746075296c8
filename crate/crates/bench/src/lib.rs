//! Fixed instances shared by the benchmarks.

use bottsam_core::{BottData, CartanFamily, GeneralizedCartanMatrix, ToricDivisor, Word};

/// `A_rank` with a 1-based word.
pub fn type_a(rank: usize, word: &[usize]) -> BottData {
    let gcm = GeneralizedCartanMatrix::of_type(CartanFamily::A, rank).expect("valid rank");
    BottData::new(gcm, Word::from_one_based(word).expect("valid word")).expect("letters in range")
}

/// The reduced word `2132` of the longest element of `S_4` and `D = 2 Σ Z_i`.
pub fn sl4_positive() -> (BottData, ToricDivisor) {
    (type_a(3, &[2, 1, 3, 2]), ToricDivisor::picard(vec![2; 4]))
}

/// A word of length `len` cycling through the simple reflections of `A_3`.
pub fn long_word(len: usize) -> BottData {
    let word: Vec<usize> = (0..len).map(|i| [1, 2, 3, 2][i % 4]).collect();
    type_a(3, &word)
}
