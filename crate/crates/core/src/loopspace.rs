//! Dyer–Lashof monomial generators of the mod-2 homology of iterated loop
//! spaces of spheres.
//!
//! `H_*(Ω^j S^{n+j}; F2)` is a polynomial algebra on the classes `Q_I x_n`
//! for admissible words `I` with `λ(I) ≤ j − 1`. Every generator is graded by
//! its *reduced degree* (homological degree minus `n` times its weight), so
//! nothing in this module depends on the label sphere dimension `n`.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoopSpaceError {
    #[error("admissible word entries must be positive, got {0:?}")]
    NonPositiveEntry(Vec<u32>),
    #[error("admissible word entries must be nondecreasing, got {0:?}")]
    NotNondecreasing(Vec<u32>),
    #[error(
        "loop order {loop_order} does not match ambient dimension {ambient_dim} minus handle degree {handle_degree}"
    )]
    LoopOrderMismatch {
        loop_order: u32,
        handle_degree: u32,
        ambient_dim: u32,
    },
    #[error("weight cap must be at least 1")]
    ZeroWeightCap,
}

/// A nondecreasing sequence `i_1 ≤ … ≤ i_r` of positive integers.
///
/// Words are totally ordered shorter-first, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AdmissibleWord(Vec<u32>);

impl AdmissibleWord {
    pub fn new(entries: Vec<u32>) -> Result<Self, LoopSpaceError> {
        if entries.contains(&0) {
            return Err(LoopSpaceError::NonPositiveEntry(entries));
        }
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(LoopSpaceError::NotNondecreasing(entries));
        }
        Ok(Self(entries))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// `ℓ(I)`
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ(I)`, the last (largest) entry; 0 for the empty word.
    pub fn excess(&self) -> u32 {
        self.0.last().copied().unwrap_or(0)
    }

    /// `2^ℓ(I)`
    pub fn weight(&self) -> u64 {
        1u64 << self.0.len()
    }
}

impl Ord for AdmissibleWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for AdmissibleWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AdmissibleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (pos, i) in self.0.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, ")")
    }
}

/// Longest word length `r` with `2^r ≤ weight_cap`.
fn max_length(weight_cap: u64) -> usize {
    if weight_cap == 0 {
        0
    } else {
        (u64::BITS - 1 - weight_cap.leading_zeros()) as usize
    }
}

/// All admissible words with entries `≤ lambda_max` and `2^len ≤ weight_cap`,
/// shorter first and lexicographic within a length. Always contains the
/// empty word.
pub fn enumerate_admissible(lambda_max: u32, weight_cap: u64) -> Vec<AdmissibleWord> {
    let mut out = vec![AdmissibleWord::empty()];
    if lambda_max == 0 {
        return out;
    }
    let mut current = Vec::new();
    for len in 1..=max_length(weight_cap) {
        extend_words(len, 1, lambda_max, &mut current, &mut out);
    }
    out
}

fn extend_words(
    len: usize,
    min_entry: u32,
    lambda_max: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<AdmissibleWord>,
) {
    if current.len() == len {
        out.push(AdmissibleWord(current.clone()));
        return;
    }
    for i in min_entry..=lambda_max {
        current.push(i);
        extend_words(len, i, lambda_max, current, out);
        current.pop();
    }
}

/// `i_1 + 2 i_2 + … + 2^{r−1} i_r + 2^r q`: the degree of `Q_I u` with the
/// `n · 2^r` label contribution removed.
pub fn word_reduced_degree(word: &AdmissibleWord, handle_degree: u64) -> u64 {
    let body: u64 = word
        .entries()
        .iter()
        .enumerate()
        .map(|(pos, &i)| u64::from(i) << pos)
        .sum();
    body + (handle_degree << word.len())
}

/// Stable identity of a generator inside a tensor product of loop-space
/// homologies: which Betti class it sits over, and which `Q_I` hits it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorId {
    pub handle_degree: u32,
    /// Index of the basis class among the `β_q` classes of degree `q`.
    pub copy: u32,
    pub word: AdmissibleWord,
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.word.is_empty() {
            write!(f, "Q{}", self.word)?;
        }
        write!(f, "u[{}.{}]", self.handle_degree, self.copy)
    }
}

/// One algebra generator `Q_I u_α`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub id: GeneratorId,
    pub reduced_degree: u64,
    pub weight: u64,
    /// Exterior generators square to zero (the top class `u` with `u² = 0`).
    pub exterior: bool,
}

impl GeneratorSpec {
    pub fn handle_degree(&self) -> u32 {
        self.id.handle_degree
    }

    pub fn word(&self) -> &AdmissibleWord {
        &self.id.word
    }

    /// Degree in `H_*C(M; S^n)` for a given label sphere dimension `n`.
    pub fn full_degree(&self, n: u64) -> u64 {
        self.reduced_degree + n * self.weight
    }

    pub(crate) fn with_copy(mut self, copy: u32) -> Self {
        self.id.copy = copy;
        self
    }
}

/// Generators of `H_*(Ω^{loop_order} S^{ambient_dim + n})` sitting over a
/// class of degree `handle_degree`, truncated at `weight_cap`.
///
/// Loop order 0 yields the single exterior fundamental class. Output is
/// ordered by weight, then reduced degree, then word.
pub fn loop_space_generators(
    loop_order: u32,
    handle_degree: u32,
    ambient_dim: u32,
    weight_cap: u64,
) -> Result<Vec<GeneratorSpec>, LoopSpaceError> {
    if weight_cap == 0 {
        return Err(LoopSpaceError::ZeroWeightCap);
    }
    if handle_degree > ambient_dim || ambient_dim - handle_degree != loop_order {
        return Err(LoopSpaceError::LoopOrderMismatch {
            loop_order,
            handle_degree,
            ambient_dim,
        });
    }
    let q = u64::from(handle_degree);
    if loop_order == 0 {
        return Ok(vec![GeneratorSpec {
            id: GeneratorId {
                handle_degree,
                copy: 0,
                word: AdmissibleWord::empty(),
            },
            reduced_degree: q,
            weight: 1,
            exterior: true,
        }]);
    }
    let mut gens: Vec<GeneratorSpec> = enumerate_admissible(loop_order - 1, weight_cap)
        .into_iter()
        .map(|word| GeneratorSpec {
            reduced_degree: word_reduced_degree(&word, q),
            weight: word.weight(),
            exterior: false,
            id: GeneratorId {
                handle_degree,
                copy: 0,
                word,
            },
        })
        .collect();
    gens.sort_by(|a, b| {
        (a.weight, a.reduced_degree, &a.id.word).cmp(&(b.weight, b.reduced_degree, &b.id.word))
    });
    Ok(gens)
}
