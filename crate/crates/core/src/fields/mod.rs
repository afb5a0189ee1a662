//! Monopole field data and integration of forms over chains.

mod circle;
mod forms;
mod integrate;
mod quadrature;

pub use circle::{distance_to_integer, CircleValue};
pub use forms::{
    curvature_form, dphi, string_potential, FormField, MonopoleConfig, Pole, SingularLocus,
    SINGULAR_ANGLE_TOL,
};
pub use integrate::{arc_integral, flux, integrate_2form, line_integral, triangle_integral};
pub use quadrature::{
    gauss_legendre, QuadratureSpec, TriangleMode, DEFAULT_EDGE_ORDER, DEFAULT_NUMERIC_ORDER,
};
