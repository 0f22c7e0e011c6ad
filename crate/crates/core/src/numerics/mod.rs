//! Adaptive quadrature and supremum search shared by every norm computation.

pub mod quadrature;
pub mod supremum;

pub use quadrature::{
    integrate_finite, integrate_halfline_exp, integrate_halfline_exp_with, integrate_with,
    QuadOptions, QuadValue, QuadratureResult,
};
pub use supremum::{
    boundary_extrapolate, geometric_radii, golden_section_max, search_radii, sup_over_radius,
    BoundaryLimit, Divergence, SupEstimate, DIVERGENCE_THRESHOLD, EXTRAPOLATION_POINTS,
};
