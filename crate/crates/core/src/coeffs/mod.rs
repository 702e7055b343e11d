//! Interbasis expansion coefficients.

pub mod angular;
pub mod s;
pub mod table;
pub mod w;
pub mod z;

pub use angular::{angular_integral_edge, angular_integral_i};
pub use s::{s_coeff, s_overlap, SCoeffQuery};
pub use table::{Cell, CoeffKind, CoeffQuery, CoefficientTable, TableRow};
pub use w::{
    projection_radius, w_coeff, w_coeff_3f2, w_coeff_closed_form, w_coeff_hahn, w_coeff_integral, w_projection_oracle,
    WCoeffQuery, WMethod,
};
pub use z::{z_coeff, z_log_cot, ZCoeffQuery};
