//! The angular integrals
//! `I⁺ₙⱼ(m) = ∫₀^{2π} (1+cos φ)ⁿ (1−cos φ)ʲ e^{−imφ} dφ` and
//! `I⁻ₙⱼ(m) = ∫₀^{2π} (1+cos φ)ⁿ (1−cos φ)ʲ sin φ e^{−imφ} dφ`.

use crate::bases::Parity;
use crate::specfun::phase::minus_one_pow;
use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `∫₀^{2π} cos^p φ e^{−imφ} dφ = 2π C(p, (p−|m|)/2) / 2^p` when `p − |m|` is even and non-negative.
fn cos_power_moment(p: u32, m: i64) -> f64 {
    let am = m.unsigned_abs();
    if am > p as u64 || (p as u64 - am) % 2 == 1 {
        return 0.0;
    }
    TAU * binomial(p, ((p as u64 - am) / 2) as u32) / 2f64.powi(p as i32)
}

/// Coefficients of `(1+c)ⁿ(1−c)ʲ` as a polynomial in `c`.
fn expand(n: u32, j: u32) -> Vec<f64> {
    let mut coef = vec![0.0; (n + j + 1) as usize];
    for a in 0..=n {
        for b in 0..=j {
            coef[(a + b) as usize] += binomial(n, a) * binomial(j, b) * minus_one_pow(b as i64);
        }
    }
    coef
}

/// Exact value of `I±ₙⱼ(m)` for any `n, j ≥ 0` and integer `m`.
///
/// The even integral is real, the odd one purely imaginary.
pub fn angular_integral_i(parity: Parity, n: u32, j: u32, m: i64) -> Complex64 {
    let coef = expand(n, j);
    match parity {
        Parity::Even => {
            let v: f64 = coef
                .iter()
                .enumerate()
                .map(|(p, c)| c * cos_power_moment(p as u32, m))
                .sum();
            Complex64::new(v, 0.0)
        }
        Parity::Odd => {
            // sin φ e^{−imφ} = (e^{−i(m−1)φ} − e^{−i(m+1)φ}) / 2i
            let v: f64 = coef
                .iter()
                .enumerate()
                .map(|(p, c)| c * (cos_power_moment(p as u32, m - 1) - cos_power_moment(p as u32, m + 1)))
                .sum();
            Complex64::new(0.0, -v / 2.0)
        }
    }
}

/// The short closed forms valid at the edge of the support:
/// `I⁺ = 2π(−1)^{n−m} / 2^|m|` when `n + j = |m|`,
/// `I⁻ = sign(m) iπ (−1)^{n+|m|} 2^{1−|m|}` when `n + j + 1 = |m|`,
/// and zero when `n + j` (resp. `n + j + 1`) is below `|m|`.
/// Returns `None` above the edge, where neither form applies.
pub fn angular_integral_edge(parity: Parity, n: u32, j: u32, m: i64) -> Option<Complex64> {
    let am = m.unsigned_abs() as i64;
    let deg = (n + j) as i64;
    match parity {
        Parity::Even => {
            if deg < am {
                Some(Complex64::new(0.0, 0.0))
            } else if deg == am {
                Some(Complex64::new(
                    TAU * minus_one_pow(n as i64 - m) / 2f64.powi(am as i32),
                    0.0,
                ))
            } else {
                None
            }
        }
        Parity::Odd => {
            if deg + 1 < am {
                Some(Complex64::new(0.0, 0.0))
            } else if deg + 1 == am {
                let v = m.signum() as f64 * PI * minus_one_pow(n as i64 + am) * 2f64.powi(1 - am as i32);
                Some(Complex64::new(0.0, v))
            } else {
                None
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::periodic_trapezoid;

    fn oracle(parity: Parity, n: u32, j: u32, m: i64) -> Complex64 {
        periodic_trapezoid(64, 0.0, TAU, |t| {
            let c = t.cos();
            let base = (1.0 + c).powi(n as i32) * (1.0 - c).powi(j as i32);
            let f = if parity == Parity::Odd { base * t.sin() } else { base };
            Complex64::new(0.0, -(m as f64) * t).exp() * f
        })
    }

    #[test]
    fn examples() {
        assert!((angular_integral_i(Parity::Even, 0, 0, 0) - Complex64::new(TAU, 0.0)).norm() < 1e-15);
        assert!((angular_integral_i(Parity::Even, 1, 0, 1) - Complex64::new(PI, 0.0)).norm() < 1e-15);
        assert!((angular_integral_i(Parity::Odd, 0, 0, 1) - Complex64::new(0.0, -PI)).norm() < 1e-15);
        assert!((angular_integral_i(Parity::Even, 1, 1, 2) - Complex64::new(-PI / 2.0, 0.0)).norm() < 1e-15);
        assert_eq!(angular_integral_i(Parity::Odd, 0, 0, 2).norm(), 0.0);
    }

    #[test]
    fn matches_trapezoid_oracle() {
        for p in [Parity::Even, Parity::Odd] {
            for n in 0..=6 {
                for j in 0..=6 {
                    for m in -10..=10 {
                        let a = angular_integral_i(p, n, j, m);
                        let b = oracle(p, n, j, m);
                        assert!((a - b).norm() < 1e-10, "{p} n={n} j={j} m={m}: {a} vs {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn edge_forms_agree_with_general_formula() {
        for p in [Parity::Even, Parity::Odd] {
            for n in 0..=5 {
                for j in 0..=5 {
                    for m in -10..=10 {
                        if let Some(e) = angular_integral_edge(p, n, j, m) {
                            let g = angular_integral_i(p, n, j, m);
                            assert!((e - g).norm() < 1e-12, "{p} n={n} j={j} m={m}: {e} vs {g}");
                        }
                    }
                }
            }
        }
    }
}
