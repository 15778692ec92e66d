//! Test-only oracles, independent of the series engine.

#![allow(dead_code)]

/// Counts monomials by exhaustive enumeration of exponent vectors.
///
/// Each generator is `(degree, weight, exterior)` with `weight ≥ 1`.
/// Returns `counts[k][q]` for `k ≤ k_max`, `q ≤ q_max`.
pub fn brute_force_counts(
    generators: &[(u64, u64, bool)],
    k_max: usize,
    q_max: usize,
) -> Vec<Vec<u64>> {
    let mut counts = vec![vec![0u64; q_max + 1]; k_max + 1];
    let mut exponents = vec![0u64; generators.len()];
    enumerate(generators, 0, k_max as u64, &mut exponents, &mut counts);
    counts
}

fn enumerate(
    generators: &[(u64, u64, bool)],
    index: usize,
    k_max: u64,
    exponents: &mut Vec<u64>,
    counts: &mut Vec<Vec<u64>>,
) {
    if index == generators.len() {
        let mut weight = 0;
        let mut degree = 0;
        for (&(d, w, _), &e) in generators.iter().zip(exponents.iter()) {
            weight += w * e;
            degree += d * e;
        }
        if weight <= k_max && (degree as usize) < counts[0].len() {
            counts[weight as usize][degree as usize] += 1;
        }
        return;
    }
    let (_, w, exterior) = generators[index];
    assert!(w >= 1, "oracle needs positive weights");
    let used: u64 = generators[..index]
        .iter()
        .zip(exponents.iter())
        .map(|(&(_, w, _), &e)| w * e)
        .sum();
    let mut max_exp = (k_max - used) / w;
    if exterior {
        max_exp = max_exp.min(1);
    }
    for e in 0..=max_exp {
        exponents[index] = e;
        enumerate(generators, index + 1, k_max, exponents, counts);
    }
    exponents[index] = 0;
}

/// Plain convolution truncated at `q_max`.
pub fn convolve(a: &[u64], b: &[u64], q_max: usize) -> Vec<u64> {
    (0..=q_max)
        .map(|q| {
            (0..=q)
                .map(|i| a.get(i).copied().unwrap_or(0) * b.get(q - i).copied().unwrap_or(0))
                .sum()
        })
        .collect()
}

/// Degree of `Q_{i_1} Q_{i_2} ⋯ Q_{i_r} x` for `|x| = base`, applying the
/// innermost operation first with `|Q_i y| = 2|y| + i`.
pub fn iterated_operation_degree(word: &[u32], base: u64) -> u64 {
    word.iter().rev().fold(base, |d, &i| 2 * d + u64::from(i))
}
