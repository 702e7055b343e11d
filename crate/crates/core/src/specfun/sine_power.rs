//! ∫₀^π sin^α φ · e^{iβφ} dφ in closed form.

use crate::error::{Error, Result};
use crate::specfun::gamma::{gamma, rgamma};
use crate::specfun::phase::sin_cos_pi;
use num_complex::Complex64;
use std::f64::consts::PI;

/// `(π / 2^α) e^{iπβ/2} Γ(1+α) / (Γ(1+(α+β)/2) Γ(1+(α−β)/2))` for α > −1.
pub fn sine_power_integral(alpha: f64, beta: f64) -> Result<Complex64> {
    if alpha <= -1.0 || !alpha.is_finite() || !beta.is_finite() {
        return Err(Error::Range(format!(
            "sine power integral needs alpha > -1, got {alpha}"
        )));
    }
    let (s, c) = sin_cos_pi(beta / 2.0);
    let modulus = PI / 2f64.powf(alpha)
        * gamma(1.0 + alpha)?
        * rgamma(1.0 + (alpha + beta) / 2.0)
        * rgamma(1.0 + (alpha - beta) / 2.0);
    Ok(Complex64::new(c, s) * modulus)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elementary_cases() {
        let v = sine_power_integral(0.0, 0.0).unwrap();
        assert!((v - Complex64::new(PI, 0.0)).norm() < 1e-15);
        let v = sine_power_integral(1.0, 1.0).unwrap();
        assert!((v - Complex64::new(0.0, PI / 2.0)).norm() < 1e-15, "{v}");
        let v = sine_power_integral(2.0, 0.0).unwrap();
        assert!((v - Complex64::new(PI / 2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn integer_frequency_zeros() {
        // ∫ e^{2iφ} dφ over [0, π] vanishes; Γ(0) in the denominator.
        let v = sine_power_integral(0.0, 2.0).unwrap();
        assert!(v.norm() < 1e-15);
    }

    #[test]
    fn rejects_nonintegrable_power() {
        assert!(matches!(sine_power_integral(-1.0, 0.0), Err(Error::Range(_))));
    }
}
