mod common;

use confspace::confighomology::{
    bct_generators, braid_betti, builtin_surfaces, config_betti, verify_n_independence,
    ManifoldData,
};
use confspace::gradedcount::{
    full_degree_rank, rank_table, series_product, table_slice, PoincareSeries,
};
use confspace::loopspace::{
    enumerate_admissible, loop_space_generators, word_reduced_degree, AdmissibleWord, GeneratorId,
    GeneratorSpec,
};
use num_bigint::BigUint;
use proptest::prelude::*;

use common::{brute_force_counts, convolve, iterated_operation_degree};

fn grades(gens: &[GeneratorSpec]) -> Vec<(u64, u64, bool)> {
    gens.iter()
        .map(|g| (g.reduced_degree, g.weight, g.exterior))
        .collect()
}

fn series(values: &[u64]) -> PoincareSeries {
    PoincareSeries::from_u64s(values)
}

#[test]
fn genus_formula_at_two_points() {
    for g in 1u64..=10 {
        let surface = ManifoldData::nonorientable(g as u32).unwrap();
        let ranks = config_betti(&surface, 2).unwrap().to_u64s().unwrap();
        assert_eq!(ranks, vec![1, g + 1, 1 + (g * g + g) / 2, g], "g = {g}");
    }
}

#[test]
fn braid_table_matches_brute_force() {
    let ys = loop_space_generators(2, 0, 2, 8).unwrap();
    let oracle = brute_force_counts(&grades(&ys), 8, 8);
    for (k, row) in oracle.iter().enumerate() {
        let mut expected = row.clone();
        while expected.len() > 1 && expected.last() == Some(&0) {
            expected.pop();
        }
        assert_eq!(
            braid_betti(k).unwrap().to_u64s().unwrap(),
            expected,
            "k = {k}"
        );
    }
}

#[test]
fn higher_dimensional_manifolds_match_brute_force() {
    let manifolds = [
        ManifoldData::new("rp3", 3, vec![1, 1, 1, 1]).unwrap(),
        ManifoldData::new("s2xs1", 3, vec![1, 1, 1, 1]).unwrap(),
        ManifoldData::new("cp2", 4, vec![1, 0, 1, 0, 1]).unwrap(),
    ];
    for m in &manifolds {
        let gens = bct_generators(m, 5).unwrap();
        let oracle = brute_force_counts(&grades(&gens), 5, 25);
        for (k, row) in oracle.iter().enumerate() {
            let ranks = config_betti(m, k).unwrap();
            for (q, &count) in row.iter().enumerate() {
                assert_eq!(
                    ranks.coefficient(q),
                    BigUint::from(count),
                    "{} k={k} q={q}",
                    m.name()
                );
            }
        }
    }
}

#[test]
fn n_independence_on_surfaces() {
    for surface in builtin_surfaces() {
        for k in 0..=6 {
            let report = verify_n_independence(&surface, k, &[1, 2, 3]).unwrap();
            assert!(report.passed(), "{report:?}");
        }
    }
}

#[test]
fn large_counts_do_not_overflow() {
    // weight-200 part of the genus-10 algebra is far past u64
    let surface = ManifoldData::orientable(10);
    let ranks = config_betti(&surface, 200).unwrap();
    assert!(ranks.to_u64s().is_none());
    assert_eq!(ranks.coefficient(0), BigUint::from(1u32));
}

proptest! {
    #[test]
    fn admissible_words_are_sorted_and_valid(lambda_max in 0u32..5, weight_cap in 1u64..40) {
        let words = enumerate_admissible(lambda_max, weight_cap);
        prop_assert_eq!(&words[0], &AdmissibleWord::empty());
        for pair in words.windows(2) {
            prop_assert!(pair[0] < pair[1]);
        }
        for w in &words {
            prop_assert!(w.entries().iter().all(|&i| i >= 1 && i <= lambda_max));
            prop_assert!(w.entries().windows(2).all(|p| p[0] <= p[1]));
            prop_assert!(w.weight() <= weight_cap);
        }
        // count: nondecreasing words of length r over λ letters is C(λ + r − 1, r)
        let mut expected = 0u64;
        let mut r = 0u32;
        while (1u64 << r) <= weight_cap {
            expected += if lambda_max == 0 { u64::from(r == 0) } else {
                binomial(u64::from(lambda_max + r - 1), u64::from(r))
            };
            r += 1;
        }
        prop_assert_eq!(words.len() as u64, expected);
    }

    #[test]
    fn reduced_degree_plus_label_shift_is_full_degree(
        mut word in prop::collection::vec(1u32..6, 0..5),
        q in 0u64..4,
    ) {
        word.sort_unstable();
        let w = AdmissibleWord::new(word.clone()).unwrap();
        for n in 1u64..=3 {
            prop_assert_eq!(
                word_reduced_degree(&w, q) + n * (1u64 << word.len()),
                iterated_operation_degree(&word, q + n)
            );
        }
    }

    #[test]
    fn generator_bounds(m in 1u32..5, q in 0u32..5, cap in 1u64..20) {
        prop_assume!(q <= m);
        for g in loop_space_generators(m - q, q, m, cap).unwrap() {
            prop_assert!(g.weight.is_power_of_two());
            prop_assert!(g.weight <= cap);
            prop_assert!(g.word().excess() + q < m || g.word().is_empty());
            prop_assert_eq!(g.exterior, q == m);
            let bound = if m - q <= 2 { 2 * g.weight } else { u64::from(m - q) * g.weight };
            prop_assert!(g.reduced_degree < bound + u64::from(q) * g.weight);
        }
    }

    #[test]
    fn engine_matches_brute_force(
        raw in prop::collection::vec((0u64..5, 1u64..4, any::<bool>()), 0..6),
        k_max in 0usize..6,
        q_max in 0usize..10,
    ) {
        let gens: Vec<GeneratorSpec> = raw
            .iter()
            .enumerate()
            .map(|(copy, &(d, w, ext))| GeneratorSpec {
                id: GeneratorId { handle_degree: 0, copy: copy as u32, word: AdmissibleWord::empty() },
                reduced_degree: d,
                weight: w,
                exterior: ext,
            })
            .collect();
        let table = rank_table(&gens, k_max, q_max).unwrap();
        let oracle = brute_force_counts(&raw, k_max, q_max);
        for (k, row) in oracle.iter().enumerate() {
            for (q, &count) in row.iter().enumerate() {
                prop_assert_eq!(table.rank(k, q), BigUint::from(count));
            }
        }
    }

    #[test]
    fn full_degree_grading_agrees(
        betti in prop::collection::vec(0u32..3, 1..4),
        k in 0usize..6,
        n in 1u64..4,
    ) {
        let mut b = vec![1];
        b.extend(betti);
        let m = ManifoldData::new("random", (b.len() - 1) as u32, b).unwrap();
        let gens = bct_generators(&m, k.max(1) as u64).unwrap();
        let ranks = config_betti(&m, k).unwrap();
        for q in 0..=ranks.q_max() + 2 {
            prop_assert_eq!(
                full_degree_rank(&gens, n, q + k * n as usize, k).unwrap(),
                ranks.coefficient(q)
            );
        }
        // below the minimal degree n·k nothing survives
        if k > 0 {
            prop_assert_eq!(full_degree_rank(&gens, n, k * n as usize - 1, k).unwrap(), BigUint::from(0u32));
        }
    }

    #[test]
    fn multiplying_by_y0_is_injective(g in 0u32..6, k in 0usize..10) {
        let gens = bct_generators(&ManifoldData::orientable(g), (k + 1) as u64).unwrap();
        let table = rank_table(&gens, k + 1, 2 * k + 4).unwrap();
        let lower = table_slice(&table, k).unwrap();
        let upper = table_slice(&table, k + 1).unwrap();
        for q in 0..=2 * k + 4 {
            prop_assert!(lower.coefficient(q) <= upper.coefficient(q));
        }
    }

    #[test]
    fn product_commutes_and_associates(
        a in prop::collection::vec(0u64..50, 1..8),
        b in prop::collection::vec(0u64..50, 1..8),
        c in prop::collection::vec(0u64..50, 1..8),
        q_max in 0usize..12,
    ) {
        let (sa, sb, sc) = (series(&a), series(&b), series(&c));
        let ab = series_product(&sa, &sb, q_max);
        prop_assert_eq!(&ab, &series_product(&sb, &sa, q_max));
        prop_assert_eq!(
            series_product(&ab, &sc, q_max),
            series_product(&sa, &series_product(&sb, &sc, q_max), q_max)
        );
        prop_assert_eq!(ab.to_u64s().unwrap(), convolve(&a, &b, q_max));
    }
}

fn binomial(n: u64, r: u64) -> u64 {
    (0..r).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
