//! Truncated bivariate generating functions over arbitrary-precision
//! integers.
//!
//! A free graded-commutative algebra on generators of bidegree
//! (reduced degree, weight) has Hilbert series
//! `∏ (1 + t^d s^w)` over exterior generators times `∏ 1/(1 − t^d s^w)` over
//! polynomial ones. [`rank_table`] expands that product densely up to the
//! caps `(k_max, q_max)`.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::loopspace::{GeneratorId, GeneratorSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("generator {0} has weight 0 and reduced degree 0; monomial counts would be infinite")]
    DegenerateGenerator(GeneratorId),
    #[error("generator {0} appears more than once")]
    DuplicateGenerator(GeneratorId),
    #[error("weight {k} is outside the table range 0..={k_max}")]
    WeightOutOfRange { k: usize, k_max: usize },
}

/// Truncated one-variable Poincaré series with nonnegative coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PoincareSeries {
    coefficients: Vec<BigUint>,
}

impl PoincareSeries {
    /// `1 + 0 t + … + 0 t^{q_max}`
    pub fn one(q_max: usize) -> Self {
        let mut coefficients = vec![BigUint::zero(); q_max + 1];
        coefficients[0] = BigUint::one();
        Self { coefficients }
    }

    /// An empty coefficient vector is read as the zero series truncated at
    /// degree 0.
    pub fn from_coefficients(mut coefficients: Vec<BigUint>) -> Self {
        if coefficients.is_empty() {
            coefficients.push(BigUint::zero());
        }
        Self { coefficients }
    }

    pub fn from_u64s(values: &[u64]) -> Self {
        Self::from_coefficients(values.iter().map(|&v| BigUint::from(v)).collect())
    }

    pub fn q_max(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coefficients
    }

    /// Coefficient at `q`, zero past the truncation degree.
    pub fn coefficient(&self, q: usize) -> BigUint {
        self.coefficients.get(q).cloned().unwrap_or_default()
    }

    /// Drops trailing zero coefficients, keeping at least the constant term.
    pub fn trimmed(mut self) -> Self {
        while self.coefficients.len() > 1 && self.coefficients.last().is_some_and(Zero::is_zero) {
            self.coefficients.pop();
        }
        self
    }

    /// Re-truncates at `q_max`, zero-padding when extending.
    pub fn truncated(mut self, q_max: usize) -> Self {
        self.coefficients.resize(q_max + 1, BigUint::zero());
        self
    }

    /// Coefficients as `u64`, if they all fit.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.coefficients
            .iter()
            .map(|c| u64::try_from(c).ok())
            .collect()
    }
}

/// Convolution of two series, truncated at `q_max`.
pub fn series_product(a: &PoincareSeries, b: &PoincareSeries, q_max: usize) -> PoincareSeries {
    let mut out = vec![BigUint::zero(); q_max + 1];
    for (i, ai) in a.coefficients.iter().enumerate().take(q_max + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coefficients.iter().enumerate().take(q_max + 1 - i) {
            out[i + j] += ai * bj;
        }
    }
    PoincareSeries { coefficients: out }
}

/// Monomial counts indexed by (weight `k`, reduced degree `q`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedRankTable {
    k_max: usize,
    q_max: usize,
    ranks: Vec<BigUint>,
}

impl BigradedRankTable {
    fn unit(k_max: usize, q_max: usize) -> Self {
        let mut ranks = vec![BigUint::zero(); (k_max + 1) * (q_max + 1)];
        ranks[0] = BigUint::one();
        Self {
            k_max,
            q_max,
            ranks,
        }
    }

    fn index(&self, k: usize, q: usize) -> usize {
        k * (self.q_max + 1) + q
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    pub fn q_max(&self) -> usize {
        self.q_max
    }

    /// Rank at `(k, q)`; zero outside the table.
    pub fn rank(&self, k: usize, q: usize) -> BigUint {
        if k > self.k_max || q > self.q_max {
            return BigUint::zero();
        }
        self.ranks[self.index(k, q)].clone()
    }

    /// Multiplies in `1/(1 − t^degree s^weight)`, or `1 + t^degree s^weight`
    /// when `exterior`.
    fn multiply_generator(&mut self, degree: u64, weight: u64, exterior: bool) {
        let (Ok(d), Ok(w)) = (usize::try_from(degree), usize::try_from(weight)) else {
            return;
        };
        if d > self.q_max || w > self.k_max {
            return;
        }
        if exterior {
            // descending so each source cell is read before it is updated
            for k in (w..=self.k_max).rev() {
                for q in (d..=self.q_max).rev() {
                    self.add_shifted(k, q, w, d);
                }
            }
        } else {
            // ascending so a cell may absorb the generator any number of times
            for k in w..=self.k_max {
                for q in d..=self.q_max {
                    self.add_shifted(k, q, w, d);
                }
            }
        }
    }

    fn add_shifted(&mut self, k: usize, q: usize, w: usize, d: usize) {
        let src = self.index(k - w, q - d);
        if self.ranks[src].is_zero() {
            return;
        }
        let dst = self.index(k, q);
        let addend = self.ranks[src].clone();
        self.ranks[dst] += addend;
    }
}

/// Weight-`k` row of the table as a series in the reduced degree.
pub fn table_slice(table: &BigradedRankTable, k: usize) -> Result<PoincareSeries, CountError> {
    if k > table.k_max {
        return Err(CountError::WeightOutOfRange {
            k,
            k_max: table.k_max,
        });
    }
    let start = table.index(k, 0);
    Ok(PoincareSeries {
        coefficients: table.ranks[start..start + table.q_max + 1].to_vec(),
    })
}

fn check_generators(generators: &[GeneratorSpec]) -> Result<(), CountError> {
    let mut seen = HashSet::new();
    for g in generators {
        if g.weight == 0 && g.reduced_degree == 0 {
            return Err(CountError::DegenerateGenerator(g.id.clone()));
        }
        if !seen.insert(&g.id) {
            return Err(CountError::DuplicateGenerator(g.id.clone()));
        }
    }
    Ok(())
}

/// Counts monomials in the free graded-commutative algebra on `generators`
/// by total weight and total reduced degree.
pub fn rank_table(
    generators: &[GeneratorSpec],
    k_max: usize,
    q_max: usize,
) -> Result<BigradedRankTable, CountError> {
    check_generators(generators)?;
    let mut table = BigradedRankTable::unit(k_max, q_max);
    for g in generators {
        table.multiply_generator(g.reduced_degree, g.weight, g.exterior);
    }
    Ok(table)
}

/// Number of weight-`weight` monomials of degree `total_degree` when every
/// generator is graded by its full degree `reduced_degree + n · weight`.
pub fn full_degree_rank(
    generators: &[GeneratorSpec],
    n: u64,
    total_degree: usize,
    weight: usize,
) -> Result<BigUint, CountError> {
    check_generators(generators)?;
    let mut table = BigradedRankTable::unit(weight, total_degree);
    for g in generators {
        table.multiply_generator(g.full_degree(n), g.weight, g.exterior);
    }
    Ok(table.rank(weight, total_degree))
}
