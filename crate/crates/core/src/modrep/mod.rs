//! `F_l[G]`-modules given by generator matrices.

pub mod field;
mod gl;
mod rep;
mod subspace;

pub use field::FlMatrix;
pub use gl::{
    gl_generators, gl_group, gl_order, irreducible_solvable_subgroups, matrix_to_permutation, natural_representation,
    permutation_to_matrix,
};
pub(crate) use rep::greedy_basis;
pub use rep::{
    clifford_restriction_semisimple, idempotent_split, invariant_subspaces, is_faithful, is_simple,
    minimal_normal_subgroup, module_from_conjugation, module_from_conjugation_with_basis, ConjugationModule,
    IdempotentSplit, LinearRepresentation, MAX_MODULE_SIZE, MAX_REP_GROUP_ORDER,
};
pub use subspace::Subspace;
