//! Twisting elements `G = 1⊗1 + h G1 + h² G2 + h³ G3` for both maps, written
//! in the deformed generators, and the identities they satisfy: the
//! map-twist relation, the cocycle condition, and the similarity relation
//! linking the two maps.
//!
//! Only the first three orders of `G` are known, so every residual is
//! compared modulo `h^{TWIST_ORDER + 1}`.

mod series;

pub use series::{
    build_twist, check_cocycle, check_map_twist, check_similarity, check_twists, derive_u_cubic,
    derived_similarity_checks, gauge_transform, invert_twist, similarity_operator, similarity_operator_with,
    twist_matrix_checks, SimilarityOperator, TwistSeries, TWIST_ORDER, U_CUBIC,
};

#[cfg(test)]
mod tests;
