//! Solvable primitive permutation groups.
//!
//! A solvable primitive group is an affine group `N ⋊ H` with `H ≤ GL(n, l)`
//! irreducible and solvable. This crate recognizes and constructs such groups,
//! checks the cohomology and complement facts behind their classification on
//! small cases, and classifies Eisenstein quartics over the 2-adic numbers.

pub mod affine;
pub mod blocks;
pub mod cohomology;
pub mod dyadic;
pub mod enumerate;
pub mod error;
pub mod extensions;
pub mod modrep;
pub mod perm;

pub use affine::{AffineMap, AffineRecovery, AffineReport, AffineStructure};
pub use blocks::Partition;
pub use cohomology::{CohomologyReport, SweepReport};
pub use dyadic::{QuarticReport, ScanTally, TwoAdicNumber, Verdict};
pub use enumerate::{ClassificationEntry, Manifest};
pub use error::{Error, Result};
pub use extensions::{ComplementSummary, ExtensionPresentation};
pub use modrep::{FlMatrix, LinearRepresentation, Subspace};
pub use perm::{Permutation, PermutationGroup, SubgroupList};
