//! Deformation maps between the deformed and the classical presentations.
//!
//! The forward ansatz expresses the deformed generators through functions
//! of `J+`; the inverse ansatz expresses the classical generators through
//! functions of `T = exp(hX)`. For a chosen `f1` (resp. `g1`) the remaining
//! functions follow in closed form, and the six consistency equations of
//! each system can be evaluated as series.

mod maps;
mod series;
mod systems;

pub use maps::{check_maps, DeformationMap, MapKind, MapTarget};
pub use series::{
    arcsinh_coeffs, arctanh_coeffs, exp_coeffs, log_one_plus_coeffs, neg_log_one_minus_coeffs, FnSeries,
};
pub use systems::{
    first_f1, first_g1, residual_f_system, residual_g_system, second_f1, second_g1, solve_f_system,
    solve_g_system, sqrt_term, x_image, FSolution, GSolution,
};
