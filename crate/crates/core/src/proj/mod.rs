//! Concrete oriented-theory models: the nilpotent K-ring of a
//! multiprojective space, its β-graded Borel-Moore realization, the
//! dimension filtration, Chern class operators, Chow rings, and pullback /
//! pushforward along projections and linear embeddings.
//!
//! Conventions: the K-ring of `P^{d_1} x ... x P^{d_s}` is
//! `Z[x_1..x_s]/(x_i^{d_i+1})` with `x_i = 1 - [O_i(-1)]`, justified by the
//! projective bundle formula basis `[O(-k)]`, `k = 0..d_i`. In the
//! Borel-Moore realization β carries homological degree +1, so the
//! fundamental class of the space is `β^d · 1`; in cohomological coefficient
//! rings β has degree -1. The two gradings are never mixed in one ring.
//! The first Chern class operator is fixed as
//! `c̃₁(L)(α) = β⁻¹ (1 - [L⁻¹]) · α` (an orientation convention).

mod bm;
mod connective;
mod kclass;
mod space;

pub use bm::{chern_operator, BMClass};
pub use connective::{chow_ring, connective_group, gr_map, ChowClass, ConnectiveClass};
pub use kclass::{
    class_of_bundle, class_of_linear_stratum, filtration_level, pullback_linear,
    pullback_projection, pushforward_linear, KClass, LineBundleSpec,
};
pub use space::MultiProj;
