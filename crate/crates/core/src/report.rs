//! Outcome of a cross-check between two independent computations.

use num_bigint::BigUint;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// What was being compared, e.g. the manifold or the label dimension.
    pub context: String,
    pub k: usize,
    pub q: usize,
    pub expected: BigUint,
    pub actual: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    /// Number of (k, q) cells compared.
    pub cells_checked: u64,
    pub mismatches: Vec<Mismatch>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            cells_checked: 0,
            mismatches: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub(crate) fn check(
        &mut self,
        context: impl FnOnce() -> String,
        k: usize,
        q: usize,
        expected: BigUint,
        actual: BigUint,
    ) {
        self.cells_checked += 1;
        if expected != actual {
            self.mismatches.push(Mismatch {
                context: context(),
                k,
                q,
                expected,
                actual,
            });
        }
    }

    /// Folds another report's cells and mismatches into this one.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.cells_checked += other.cells_checked;
        self.mismatches.extend(other.mismatches);
    }
}
