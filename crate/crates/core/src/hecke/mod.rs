//! Seminormal representations of the Iwahori–Hecke algebra `H_n` on
//! standard skew tableaux, their invariants, and the Wedderburn check.

mod invariants;
mod representation;
mod seminormal;
mod wedderburn;

pub use invariants::{invariant_subspace, non_invariant_span, normalized_invariant};
pub use representation::{
    act_word, build_representation, classical_limit, hecke_parameter, symmetric_group_failures, HeckeWord,
    RelationFailure, SkewRepresentation,
};
pub use seminormal::{block_entries, seminormal_matrix, seminormal_matrix_with, BlockConvention};
pub use wedderburn::{
    matrix_unit_lift, prescreen_point, reduced_word, wedderburn_check, wedderburn_check_symbolic, LiftTerm,
    MatrixUnitLift, Permutation, WedderburnReport, MAX_LIFT_SIZE,
};
