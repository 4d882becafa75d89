//! Adjoint action, tensor operators for the adjoint representation, and
//! covariance checks against the adjoint matrices.
//!
//! `ad a(t) = μ(id ⊗ S) Δ(a) (t ⊗ 1)` with the Koszul sign of moving `t`
//! past the second leg of `Δ(a)`.

mod adjoint;
mod family;

pub use adjoint::{adjoint_action, adjoint_action_closed, closed_form_checks};
pub use family::{
    build_tensor_ops, check_tensor_ops, covariance_checks, FamilyTag, TensorOperatorFamily, INDEX_NAMES,
};

#[cfg(test)]
mod tests;
