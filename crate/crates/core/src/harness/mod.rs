//! Numerical verification of the basis and coefficient identities.

pub mod config;
pub mod fd;
pub mod report;
pub mod suite;
pub mod verify;

pub use crate::quadrature::{QuadratureKind, QuadratureRule};
pub use config::{SuiteConfig, Tolerances};
pub use fd::OperatorTag;
pub use report::{Params, VerificationReport};
pub use suite::{run_suite, Suite};
