//! Parabolic ↔ Cartesian coefficients.

use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZCoeffQuery {
    pub k: f64,
    pub beta: f64,
    pub alpha_abs: f64,
}

impl ZCoeffQuery {
    pub fn new(k: f64, beta: f64, alpha_abs: f64) -> Result<Self> {
        if !(k > 0.0 && k.is_finite() && beta.is_finite()) {
            return Err(Error::Contract(format!(
                "Z query needs k > 0 and finite beta, got k={k}, beta={beta}"
            )));
        }
        if !(0.0..=PI).contains(&alpha_abs) {
            return Err(Error::Contract(format!("|alpha| must lie in [0, pi], got {alpha_abs}")));
        }
        Ok(ZCoeffQuery { k, beta, alpha_abs })
    }
}

/// `Z = (cot(|α|/2))^{iβ/k} / (2√(πk sin|α|))`; the same for both parities.
pub fn z_coeff(q: &ZCoeffQuery) -> Result<Complex64> {
    let a = q.alpha_abs;
    if a <= 0.0 || a >= PI {
        return Err(Error::Singularity(format!("Z is singular at |alpha| = {a}")));
    }
    let modulus = 1.0 / (2.0 * (PI * q.k * a.sin()).sqrt());
    let (s, c) = (q.beta / q.k * z_log_cot(a)).sin_cos();
    Ok(Complex64::new(c, s) * modulus)
}

/// `ln cot(|α|/2)`, the phase rate of Z in β/k.
pub fn z_log_cot(alpha_abs: f64) -> f64 {
    -(0.5 * alpha_abs).tan().ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_angle_has_no_phase() {
        for b in [-3.0, 0.0, 2.5] {
            let v = z_coeff(&ZCoeffQuery::new(1.7, b, PI / 2.0).unwrap()).unwrap();
            assert!((v - Complex64::new(1.0 / (2.0 * (PI * 1.7).sqrt()), 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn zero_beta_is_real_positive() {
        for i in 1..30 {
            let v = z_coeff(&ZCoeffQuery::new(2.0, 0.0, i as f64 * 0.1).unwrap()).unwrap();
            assert!(v.im == 0.0 && v.re > 0.0);
        }
    }

    #[test]
    fn sixty_degrees() {
        let v = z_coeff(&ZCoeffQuery::new(1.0, 1.0, PI / 3.0).unwrap()).unwrap();
        let modulus = 1.0 / (2.0 * (PI * (PI / 3.0).sin()).sqrt());
        assert!((v.norm() - modulus).abs() < 1e-15);
        assert!((modulus - 0.30313058116423247).abs() < 1e-15);
        assert!((v.arg() - 3f64.sqrt().ln()).abs() < 1e-15);
    }

    #[test]
    fn endpoints_are_singular() {
        assert!(matches!(
            z_coeff(&ZCoeffQuery::new(1.0, 1.0, 0.0).unwrap()),
            Err(Error::Singularity(_))
        ));
        assert!(matches!(
            z_coeff(&ZCoeffQuery::new(1.0, 1.0, PI).unwrap()),
            Err(Error::Singularity(_))
        ));
    }
}
