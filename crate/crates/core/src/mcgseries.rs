//! Mod-2 Poincaré series of the mapping class group `Γ^k(ℝP²)`.
//!
//! For `k ≥ 2` the SO(3)-Borel construction on `F_k(ℝP²)/Σ_k` is a
//! `K(Γ^k(ℝP²), 1)` and its Serre spectral sequence collapses, so
//! `H^*(Γ^k(ℝP²); F2) ≅ H^*(BSO(3); F2) ⊗ H^*(F_k(ℝP²)/Σ_k; F2)` as
//! `F2[w_2, w_3]`-modules. Only the additive (series) statement is modelled.

use num_bigint::BigUint;
use thiserror::Error;

use crate::confighomology::{config_betti, ConfigError, ManifoldData};
use crate::gradedcount::{series_product, PoincareSeries};
use crate::report::VerificationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum McgError {
    #[error(
        "k = {0} marked points: the Borel construction is a K(π,1) with collapsing spectral sequence only for k ≥ 2"
    )]
    TooFewPoints(usize),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct McgQuery {
    k: usize,
    q_max: usize,
}

impl McgQuery {
    pub fn new(k: usize, q_max: usize) -> Result<Self, McgError> {
        if k < 2 {
            return Err(McgError::TooFewPoints(k));
        }
        Ok(Self { k, q_max })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q_max(&self) -> usize {
        self.q_max
    }
}

/// Series of `F2[w_2, w_3]`: the number of pairs `(a, b)` with `2a + 3b = q`.
pub fn bso3_series(q_max: usize) -> PoincareSeries {
    let coefficients = (0..=q_max)
        .map(|q| {
            let count = (0..=q / 2).filter(|a| (q - 2 * a) % 3 == 0).count();
            BigUint::from(count)
        })
        .collect();
    PoincareSeries::from_coefficients(coefficients)
}

/// Fiber series of `F_k(ℝP²)/Σ_k` times the `BSO(3)` series.
pub fn mcg_rp2_series(query: &McgQuery) -> Result<PoincareSeries, McgError> {
    let fiber = config_betti(&ManifoldData::projective_plane(), query.k)?;
    Ok(series_product(
        &fiber,
        &bso3_series(query.q_max),
        query.q_max,
    ))
}

/// For `k = 2` the Borel construction is `K(D_8, 1)`, whose mod-2 series
/// `(1 + t)/((1 − t)(1 − t²)) = 1/(1 − t)²` has coefficient `q + 1`.
pub fn verify_k2_dihedral(q_max: usize) -> Result<VerificationReport, McgError> {
    let series = mcg_rp2_series(&McgQuery::new(2, q_max)?)?;
    let mut report = VerificationReport::new("dihedral");
    for q in 0..=q_max {
        report.check(
            || "k=2".to_string(),
            2,
            q,
            BigUint::from(q + 1),
            series.coefficient(q),
        );
    }
    Ok(report)
}
