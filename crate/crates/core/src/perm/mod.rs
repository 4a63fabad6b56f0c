//! Finite permutation groups on `{0, …, degree-1}`.

mod chain;
mod group;
pub mod io;
mod permutation;
mod subgroups;
mod table;

pub use group::{prime_power, smallest_prime_factor, PermutationGroup};
pub use permutation::{compose, Permutation};
pub(crate) use subgroups::{conjugacy_classes, subgroup_sets};
pub use subgroups::{enumerate_subgroups, is_maximal, normal_subgroups, SubgroupList, MAX_SUBGROUP_SCAN_ORDER};
pub use table::{ElemSet, ElementTable};
