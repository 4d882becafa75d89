//! The dual of the quantized Borel subalgebra generated by `H, X, V+`,
//! derived from the pairing `<E_{klm}, e^{pqr}> = δ`, and the isomorphism
//! `ρ` back onto it.
//!
//! Dual elements are handled two ways: finitely supported combinations of
//! `e^{klm}` multiplied through the structure-constant tables, and word
//! polynomials in `x, y, z` paired exactly with any basis element. Every
//! identity is compared on basis indices of total degree at most `D`.

mod borel;
mod dual;
mod tables;
mod verify;

pub use borel::{borel_normal_form, BorelElement, BorelIndex};
pub use dual::{
    dual_coproduct, dual_product, DualFunctional, DualGen, DualPoly, DualTensorFunctional, DualTensorPoly,
    Pairing, PairingSign,
};
pub use tables::{compute_structure_constants, StructureConstants};
pub use verify::{check_duality, DEFAULT_CUTOFF};
