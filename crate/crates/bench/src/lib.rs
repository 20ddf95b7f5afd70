//! Fixed inputs shared by the benchmarks.

use alexzero::CfWord;

/// Words of increasing length with mixed signs and magnitudes.
pub fn sample_words() -> Vec<CfWord> {
    [
        vec![1, 1],
        vec![2, -1, 3],
        vec![1, -1, 1, -1, 1, -1],
        vec![3, 2, -1, 1, -2, 3, 1, -1],
        vec![2, -3, 1, 1, -2, 2, -1, 3, 1, -2, 1, 2],
    ]
    .into_iter()
    .map(|a| CfWord::new(a).expect("nonzero entries"))
    .collect()
}
