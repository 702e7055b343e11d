//! Special-function kernel: log-gamma, Bessel J, ₁F₁, terminating ₃F₂,
//! continuous Hahn polynomials and the sine-power phase integral.

pub mod bessel;
pub mod dd;
pub mod gamma;
pub mod hahn;
pub mod hyper;
pub mod phase;
pub mod sine_power;

pub use bessel::{bessel_j, bessel_j_all, bessel_j_signed};
pub use gamma::{abs_gamma_sq, gamma, ln_gamma, rgamma};
pub use hahn::{continuous_hahn, symmetric_hahn_3f2, HahnParams};
pub use hyper::{bailey_sides, hyp3f2_terminating, kummer_1f1, Hyp3F2Params, Z_MAX};
pub use phase::{i_pow, neg_i_pow, sign};
pub use sine_power::sine_power_integral;
