//! Exact mod-2 Betti numbers of unordered configuration spaces of surfaces,
//! of Artin's braid groups, and Poincaré series of the mapping class groups
//! `Γ^k(ℝP²)`.
//!
//! The pipeline:
//!
//! * [`loopspace`] lists the Dyer–Lashof generators `Q_I u` of each
//!   iterated loop space homology, graded by reduced degree and weight.
//! * [`gradedcount`] counts monomials in those generators by
//!   (weight, reduced degree) with truncated bivariate series.
//! * [`confighomology`] assembles the generators from a manifold's mod-2
//!   Betti numbers and slices out `H_*(F_k(M)/Σ_k; F2)`.
//! * [`mcgseries`] multiplies the `ℝP²` series by the `BSO(3)` series.
//!
//! ```
//! use confspace::confighomology::{config_betti, ManifoldData};
//!
//! let ranks = config_betti(&ManifoldData::projective_plane(), 3).unwrap();
//! assert_eq!(ranks.to_u64s().unwrap(), vec![1, 2, 3, 3, 1]);
//! ```

pub mod cli;
pub mod confighomology;
pub mod gradedcount;
pub mod loopspace;
pub mod mcgseries;
pub mod report;

pub use confighomology::{braid_betti, config_betti, ManifoldData};
pub use gradedcount::{BigradedRankTable, PoincareSeries};
pub use loopspace::{AdmissibleWord, GeneratorSpec};
