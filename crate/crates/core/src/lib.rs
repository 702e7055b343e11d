pub mod bases;
pub mod cli;
pub mod coeffs;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod quadrature;
pub mod specfun;

pub use error::{Error, Result};
pub use num_complex::Complex64;
