//! Cartesian ↔ polar coefficients.

use crate::bases::Parity;
use crate::error::{Error, Result};
use crate::specfun::{neg_i_pow, sign};
use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::{PI, TAU};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SCoeffQuery {
    pub parity: Parity,
    pub m: i64,
    pub alpha: f64,
}

impl SCoeffQuery {
    pub fn new(parity: Parity, m: i64, alpha: f64) -> Result<Self> {
        if !(-PI..PI).contains(&alpha) {
            return Err(Error::Contract(format!("alpha must lie in [-pi, pi), got {alpha}")));
        }
        Ok(SCoeffQuery { parity, m, alpha })
    }
}

/// `S⁺ = (−i)^|m| cos mα / √(2π)`, `S⁻ = −sign(sin α) (−i)^|m| sin mα / √(2π)`.
pub fn s_coeff(q: &SCoeffQuery) -> Complex64 {
    let phase = neg_i_pow(q.m.unsigned_abs() as i64 % 4);
    let (s, c) = (q.m as f64 * q.alpha).sin_cos();
    let amp = match q.parity {
        Parity::Even => c,
        Parity::Odd => -sign(q.alpha.sin()) * s,
    };
    phase * (amp / TAU.sqrt())
}

/// `∫_{−π}^{π} S_{mα} S*_{m'α} dα` in closed form: `(δ_{mm'} ± δ_{m,−m'}) / 2`,
/// plus for even parity at `m = m' = 0`, where both deltas fire, the value 1.
pub fn s_overlap(parity: Parity, m: i64, m2: i64) -> f64 {
    let same = if m == m2 { 1.0 } else { 0.0 };
    let mirror = if m == -m2 { 1.0 } else { 0.0 };
    match parity {
        Parity::Even => 0.5 * (same + mirror),
        Parity::Odd => 0.5 * (same - mirror),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let r = 1.0 / TAU.sqrt();
        for a in [-3.0, -0.2, 0.0, 1.1, 3.1] {
            assert_eq!(
                s_coeff(&SCoeffQuery::new(Parity::Even, 0, a).unwrap()),
                Complex64::new(r, 0.0)
            );
            assert_eq!(s_coeff(&SCoeffQuery::new(Parity::Odd, 0, a).unwrap()).norm(), 0.0);
        }
        let v = s_coeff(&SCoeffQuery::new(Parity::Even, 2, PI / 2.0).unwrap());
        assert!((v - Complex64::new(r, 0.0)).norm() < 1e-15);
        assert!(SCoeffQuery::new(Parity::Even, 0, PI).is_err());
    }

    #[test]
    fn bounded_and_even_in_alpha() {
        for m in -12..=12 {
            for i in 1..40 {
                let a = -PI + i as f64 * 0.157;
                for p in [Parity::Even, Parity::Odd] {
                    let v = s_coeff(&SCoeffQuery::new(p, m, a).unwrap());
                    let w = s_coeff(&SCoeffQuery::new(p, m, -a).unwrap());
                    assert!(v.norm() <= 1.0 / TAU.sqrt() + 1e-16);
                    assert!((v - w).norm() < 1e-15);
                }
            }
        }
    }
}
