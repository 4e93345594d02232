#![allow(dead_code)]

use fuzzy_gamma::enumerate::{enumerate_structures, SearchSpec};
use fuzzy_gamma::{fixtures, GammaStructure};

/// Cases enumerated exhaustively for decider agreement and the suite run.
pub const CASES: [(usize, usize); 5] = [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)];

/// Every labeled structure of [`CASES`].
pub fn labeled_structures() -> Vec<GammaStructure> {
    CASES
        .iter()
        .flat_map(|&(n, m)| enumerate_structures(&SearchSpec::new(n, m)).unwrap())
        .collect()
}

/// The first 200 isomorphism-class representatives of [`CASES`].
pub fn two_hundred() -> Vec<GammaStructure> {
    let reps: Vec<GammaStructure> = CASES
        .iter()
        .flat_map(|&(n, m)| enumerate_structures(&SearchSpec::new(n, m).up_to_iso()).unwrap())
        .take(200)
        .collect();
    assert_eq!(reps.len(), 200);
    reps
}

/// Fixtures followed by the 200 representatives.
pub fn fixtures_and_two_hundred() -> Vec<(String, GammaStructure)> {
    fixtures::all()
        .into_iter()
        .map(|(n, s)| (n.to_string(), s))
        .chain(
            two_hundred()
                .into_iter()
                .enumerate()
                .map(|(k, s)| (format!("rep{k}"), s)),
        )
        .collect()
}

/// `(f ∘ g)(a)` straight from the definition: a triple loop over
/// `y, γ, z` with `a <= y γ z`.
pub fn naive_compose(s: &GammaStructure, f: &[f64], g: &[f64]) -> Vec<f64> {
    let n = s.size();
    (0..n)
        .map(|a| {
            let mut best = 0.0f64;
            for (y, &fy) in f.iter().enumerate() {
                for k in 0..s.gamma_count() {
                    for (z, &gz) in g.iter().enumerate() {
                        if s.leq(a, s.mul(y, k, z)) {
                            best = best.max(fy.min(gz));
                        }
                    }
                }
            }
            best
        })
        .collect()
}

/// All `L^n` grid vectors, element 0 most significant.
pub fn grid(n: usize, levels: usize) -> Vec<Vec<f64>> {
    let total = levels.pow(n as u32);
    (0..total)
        .map(|mut k| {
            let mut v = vec![0.0; n];
            for i in (0..n).rev() {
                v[i] = (k % levels) as f64 / (levels - 1) as f64;
                k /= levels;
            }
            v
        })
        .collect()
}
