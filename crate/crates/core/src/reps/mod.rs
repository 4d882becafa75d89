//! Matrix realizations of the fundamental and adjoint modules, classical
//! and deformed, with evaluation of elements and tensors.
//!
//! Fundamental basis parities are `(even, odd, even)`; the adjoint basis
//! is `(J+, v+, J0, v-, J-)`. Tensor products use the graded Kronecker
//! product, so evaluation intertwines the Koszul product on `A ⊗ A`.

mod families;
mod matrix;
mod verify;

pub use families::{build_rep, CoproductRep, RepFamily, RepTag, ADJOINT_PARITIES, FUNDAMENTAL_PARITIES};
pub use matrix::{matrix_exp_nilpotent, super_kron, SuperMatrix};
pub use verify::{
    coproduct_checks, cross_oracle_check, map_consistency_checks, parity_checks, verify_family,
    verify_relations, verify_reps,
};

#[cfg(test)]
mod tests;
