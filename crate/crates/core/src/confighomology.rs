//! Mod-2 homology of unordered configuration spaces `F_k(M)/Σ_k` and of the
//! classical braid groups.
//!
//! `H_*C(M; S^n)` is a tensor product of loop-space homologies, one factor
//! `H_*(Ω^{m−q} S^{m+n})` per mod-2 Betti class of degree `q`. Its weight-`k`
//! part is `H̄_* D_k(M; S^n)`, which the Thom isomorphism identifies with
//! `H_{*−kn}(F_k(M)/Σ_k)`. In reduced degrees the shift disappears, so the
//! Betti numbers of `F_k(M)/Σ_k` are read off a single row of a
//! [`BigradedRankTable`].

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::gradedcount::{
    full_degree_rank, rank_table, table_slice, BigradedRankTable, CountError, PoincareSeries,
};
use crate::loopspace::{loop_space_generators, GeneratorSpec, LoopSpaceError};
use crate::report::VerificationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("manifold dimension must be at least 1")]
    ZeroDimension,
    #[error("expected {expected} Betti numbers for a {dimension}-manifold, got {got}")]
    BettiLength {
        dimension: u32,
        expected: usize,
        got: usize,
    },
    #[error("manifold must be connected (β_0 = 1), got β_0 = {0}")]
    NotConnected(u32),
    #[error("non-orientable genus must be at least 1")]
    ZeroNonOrientableGenus,
    #[error("label sphere dimension n must be at least 1")]
    ZeroLabelDimension,
    #[error(transparent)]
    LoopSpace(#[from] LoopSpaceError),
    #[error(transparent)]
    Count(#[from] CountError),
}

/// A closed connected manifold, seen only through its mod-2 Betti numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldData {
    dimension: u32,
    mod2_betti: Vec<u32>,
    name: String,
}

impl ManifoldData {
    pub fn new(
        name: impl Into<String>,
        dimension: u32,
        mod2_betti: Vec<u32>,
    ) -> Result<Self, ConfigError> {
        if dimension == 0 {
            return Err(ConfigError::ZeroDimension);
        }
        let expected = dimension as usize + 1;
        if mod2_betti.len() != expected {
            return Err(ConfigError::BettiLength {
                dimension,
                expected,
                got: mod2_betti.len(),
            });
        }
        if mod2_betti[0] != 1 {
            return Err(ConfigError::NotConnected(mod2_betti[0]));
        }
        Ok(Self {
            dimension,
            mod2_betti,
            name: name.into(),
        })
    }

    /// `S_g`, with Betti numbers `(1, 2g, 1)`.
    pub fn orientable(genus: u32) -> Self {
        let name = match genus {
            0 => "sphere".to_string(),
            1 => "torus".to_string(),
            g => format!("orientable:{g}"),
        };
        Self {
            dimension: 2,
            mod2_betti: vec![1, 2 * genus, 1],
            name,
        }
    }

    /// `N_g`, with Betti numbers `(1, g, 1)`.
    pub fn nonorientable(genus: u32) -> Result<Self, ConfigError> {
        if genus == 0 {
            return Err(ConfigError::ZeroNonOrientableGenus);
        }
        let name = match genus {
            1 => "rp2".to_string(),
            2 => "klein".to_string(),
            g => format!("nonorientable:{g}"),
        };
        Ok(Self {
            dimension: 2,
            mod2_betti: vec![1, genus, 1],
            name,
        })
    }

    pub fn sphere() -> Self {
        Self::orientable(0)
    }

    pub fn torus() -> Self {
        Self::orientable(1)
    }

    pub fn projective_plane() -> Self {
        Self {
            dimension: 2,
            mod2_betti: vec![1, 1, 1],
            name: "rp2".to_string(),
        }
    }

    pub fn klein_bottle() -> Self {
        Self {
            dimension: 2,
            mod2_betti: vec![1, 2, 1],
            name: "klein".to_string(),
        }
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn mod2_betti(&self) -> &[u32] {
        &self.mod2_betti
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

/// Surfaces exercised by the built-in verification suites.
pub fn builtin_surfaces() -> Vec<ManifoldData> {
    vec![
        ManifoldData::sphere(),
        ManifoldData::torus(),
        ManifoldData::orientable(2),
        ManifoldData::projective_plane(),
        ManifoldData::klein_bottle(),
        ManifoldData::nonorientable(3).expect("genus 3 is positive"),
    ]
}

/// Generators of `H_*C(M; S^n)`: for each degree `q` and each of the `β_q`
/// classes, the generators of `H_*(Ω^{m−q} S^{m+n})` up to `weight_cap`.
pub fn bct_generators(
    manifold: &ManifoldData,
    weight_cap: u64,
) -> Result<Vec<GeneratorSpec>, ConfigError> {
    let m = manifold.dimension;
    let mut out = Vec::new();
    for (q, &beta) in (0..=m).zip(&manifold.mod2_betti) {
        if beta == 0 {
            continue;
        }
        let factor = loop_space_generators(m - q, q, m, weight_cap)?;
        for copy in 0..beta {
            out.extend(factor.iter().cloned().map(|g| g.with_copy(copy)));
        }
    }
    Ok(out)
}

/// Degree cap beyond which every weight-`k` rank vanishes: each generator
/// has reduced degree at most `m` times its weight.
fn config_q_max(dimension: u32, k: usize) -> usize {
    let m = dimension as usize;
    (2 * k + m).max(m * k)
}

/// Mod-2 Betti numbers of `F_k(M)/Σ_k`, trailing zeros removed.
pub fn config_betti(manifold: &ManifoldData, k: usize) -> Result<PoincareSeries, ConfigError> {
    let gens = bct_generators(manifold, k.max(1) as u64)?;
    let table = rank_table(&gens, k, config_q_max(manifold.dimension, k))?;
    Ok(table_slice(&table, k)?.trimmed())
}

/// Table of braid group Betti numbers for `0 ≤ k ≤ k_max`, with
/// `C(ℝ²; S^n) ≃ Ω²S^{n+2}` supplying the generators `y_j`.
fn braid_table(k_max: usize) -> Result<BigradedRankTable, ConfigError> {
    let ys = loop_space_generators(2, 0, 2, k_max.max(1) as u64)?;
    // a weight-k monomial in the y_j has reduced degree at most k - 1
    Ok(rank_table(&ys, k_max, k_max)?)
}

/// Mod-2 Betti numbers of Artin's braid group `B_k`; `B_0` and `B_1` are
/// trivial.
pub fn braid_betti(k: usize) -> Result<PoincareSeries, ConfigError> {
    Ok(table_slice(&braid_table(k)?, k)?.trimmed())
}

fn braids_decomposition_rank(braids: &BigradedRankTable, k: usize, q: usize) -> BigUint {
    let mut total = BigUint::zero();
    for l in 0..=q.min(k) {
        total += braids.rank(k - l, q - l);
    }
    if q >= 2 && k >= 1 {
        for l in 0..=(q - 2).min(k - 1) {
            total += braids.rank(k - l - 1, q - l - 2);
        }
    }
    total
}

/// `rank H_q(F_k(ℝP²)/Σ_k)` assembled from braid group homology:
/// `⊕_{ℓ ≤ min(q,k)} H_{q−ℓ}(B_{k−ℓ}) ⊕ ⊕_{ℓ ≤ min(q−2,k−1)} H_{q−ℓ−2}(B_{k−ℓ−1})`.
pub fn rp2_betti_via_braids(k: usize, q: usize) -> Result<BigUint, ConfigError> {
    Ok(braids_decomposition_rank(&braid_table(k)?, k, q))
}

/// Compares the braid decomposition against direct enumeration on ℝP² for
/// `1 ≤ k ≤ k_max`, `0 ≤ q ≤ k + 2`.
pub fn verify_braid_decomposition(k_max: usize) -> Result<VerificationReport, ConfigError> {
    let rp2 = ManifoldData::projective_plane();
    let braids = braid_table(k_max)?;
    let mut report = VerificationReport::new("braid-decomposition");
    for k in 1..=k_max {
        let direct = config_betti(&rp2, k)?;
        for q in 0..=k + 2 {
            report.check(
                || "rp2".to_string(),
                k,
                q,
                direct.coefficient(q),
                braids_decomposition_rank(&braids, k, q),
            );
        }
    }
    Ok(report)
}

/// Checks that counting weight-`k` monomials by full degree `q + kn` gives
/// `config_betti(manifold, k)[q]` for every supplied `n`.
pub fn verify_n_independence(
    manifold: &ManifoldData,
    k: usize,
    n_values: &[u64],
) -> Result<VerificationReport, ConfigError> {
    if n_values.contains(&0) {
        return Err(ConfigError::ZeroLabelDimension);
    }
    let gens = bct_generators(manifold, k.max(1) as u64)?;
    let expected = config_betti(manifold, k)?;
    let mut report = VerificationReport::new("n-independence");
    for q in 0..=config_q_max(manifold.dimension, k) {
        for &n in n_values {
            let shift = usize::try_from(n).expect("label dimension fits in usize") * k;
            let actual = full_degree_rank(&gens, n, q + shift, k)?;
            report.check(
                || format!("{} n={n}", manifold.name),
                k,
                q,
                expected.coefficient(q),
                actual,
            );
        }
    }
    Ok(report)
}
