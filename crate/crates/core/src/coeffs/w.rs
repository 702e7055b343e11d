//! Parabolic ↔ polar coefficients W±, by four routes:
//!
//! * `closed_form`: three-term recurrence of the symmetric continuous Hahn
//!   polynomials (stable for large |m|),
//! * `three_f_two`: the terminating ₃F₂ sum,
//! * `hahn`: the continuous Hahn polynomial times its gamma prefactor,
//! * `integral`: the angular integral, after `cos φ = tanh τ`.
//!
//! A fifth, independent value comes from [`w_projection_oracle`], which
//! projects the parabolic wave function onto `e^{imφ}` on a circle.

use crate::bases::{psi_parabolic, ParabolicIndex, Parity};
use crate::error::{Error, Result};
use crate::geometry::{polar_to_parabolic, PointPolar};
use crate::quadrature::{periodic_trapezoid, TanhLine};
use crate::specfun::gamma::{abs_gamma_sq, ln_abs_gamma};
use crate::specfun::{
    bessel_j, continuous_hahn, hyp3f2_terminating, neg_i_pow, symmetric_hahn_3f2, HahnParams, Hyp3F2Params,
};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

/// Largest |m| accepted by the direct-sum routes; beyond it the factorial
/// growth of the terms swamps the result.
pub const DIRECT_MAX_M: u64 = 60;

/// Relative tolerance of the integral route's step-halving estimate.
pub const INTEGRAL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WCoeffQuery {
    pub parity: Parity,
    pub k: f64,
    pub beta: f64,
    pub m: i64,
}

impl WCoeffQuery {
    pub fn new(parity: Parity, k: f64, beta: f64, m: i64) -> Result<Self> {
        if !(k > 0.0 && k.is_finite() && beta.is_finite()) {
            return Err(Error::Contract(format!(
                "W query needs k > 0 and finite beta, got k={k}, beta={beta}"
            )));
        }
        Ok(WCoeffQuery { parity, k, beta, m })
    }

    fn x(&self) -> f64 {
        self.beta / (2.0 * self.k)
    }

    fn n(&self) -> u64 {
        self.m.unsigned_abs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WMethod {
    ClosedForm,
    Hahn,
    ThreeFTwo,
    Integral,
}

impl WMethod {
    pub const ALL: [WMethod; 4] = [
        WMethod::ClosedForm,
        WMethod::Hahn,
        WMethod::ThreeFTwo,
        WMethod::Integral,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            WMethod::ClosedForm => "closed_form",
            WMethod::Hahn => "hahn",
            WMethod::ThreeFTwo => "three_f_two",
            WMethod::Integral => "integral",
        }
    }
}

impl fmt::Display for WMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for WMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        WMethod::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::Contract(format!("unknown method `{s}`")))
    }
}

pub fn w_coeff(q: &WCoeffQuery, method: WMethod) -> Result<Complex64> {
    match method {
        WMethod::ClosedForm => Ok(w_coeff_closed_form(q)),
        WMethod::Hahn => w_coeff_hahn(q),
        WMethod::ThreeFTwo => w_coeff_3f2(q),
        WMethod::Integral => w_coeff_integral(q),
    }
}

fn gamma_sq(a: f64, x: f64) -> f64 {
    abs_gamma_sq(a, x).expect("a + ix with a > 0 is never a pole")
}

fn guard(q: &WCoeffQuery) -> Result<()> {
    if q.n() > DIRECT_MAX_M {
        return Err(Error::Range(format!(
            "|m| = {} exceeds {DIRECT_MAX_M} for direct summation",
            q.n()
        )));
    }
    Ok(())
}

/// W± through the Hahn three-term recurrence. Real for even parity, purely
/// imaginary for odd parity by construction.
pub fn w_coeff_closed_form(q: &WCoeffQuery) -> Complex64 {
    let x = q.x();
    let n = q.n();
    let root = (PI.powi(3) * q.k).sqrt();
    match q.parity {
        Parity::Even => {
            let g = symmetric_hahn_3f2(n as u32, 0.25, x);
            Complex64::new(gamma_sq(0.25, x) * g / (2.0 * root), 0.0)
        }
        Parity::Odd => {
            if n == 0 {
                return Complex64::new(0.0, 0.0);
            }
            let g = symmetric_hahn_3f2(n as u32 - 1, 0.75, x);
            Complex64::new(0.0, -2.0 * q.m as f64 * gamma_sq(0.75, x) * g / root)
        }
    }
}

/// `W⁺ = (−i)^|m| |Γ(¼+ix)|² / (2√(π³k)) · ₃F₂(−|m|, |m|, ¼+ix; ½, ½; 1)`,
/// `W⁻ = 2m (−i)^|m| |Γ(¾+ix)|² / √(π³k) · ₃F₂(1−|m|, 1+|m|, ¾+ix; 3/2, 3/2; 1)`, `x = β/2k`.
pub fn w_coeff_3f2(q: &WCoeffQuery) -> Result<Complex64> {
    guard(q)?;
    let x = q.x();
    let n = q.n() as f64;
    let root = (PI.powi(3) * q.k).sqrt();
    let phase = neg_i_pow((q.n() % 4) as i64);
    let c = |re: f64, im: f64| Complex64::new(re, im);
    match q.parity {
        Parity::Even => {
            let f = hyp3f2_terminating(&Hyp3F2Params::new(
                [c(-n, 0.0), c(n, 0.0), c(0.25, x)],
                [c(0.5, 0.0), c(0.5, 0.0)],
            ))?;
            Ok(phase * f * (gamma_sq(0.25, x) / (2.0 * root)))
        }
        Parity::Odd => {
            if q.m == 0 {
                return Ok(c(0.0, 0.0));
            }
            let f = hyp3f2_terminating(&Hyp3F2Params::new(
                [c(1.0 - n, 0.0), c(1.0 + n, 0.0), c(0.75, x)],
                [c(1.5, 0.0), c(1.5, 0.0)],
            ))?;
            Ok(phase * f * (2.0 * q.m as f64 * gamma_sq(0.75, x) / root))
        }
    }
}

/// `W⁺ = (−1)^|m| |m|! |Γ(¼+ix)|² p_|m|(x; ¼,¼,¼,¼) / (2√(πk) Γ²(½+|m|))`, and
/// `W⁻ = i sign(m) (−1)^|m| |m|! |Γ(¾+ix)|² p_{|m|−1}(x; ¾,¾,¾,¾) / (2√(πk) Γ²(½+|m|))`.
pub fn w_coeff_hahn(q: &WCoeffQuery) -> Result<Complex64> {
    guard(q)?;
    let x = q.x();
    let n = q.n();
    let nf = n as f64;
    let ratio = (ln_abs_gamma(nf + 1.0)? - 2.0 * ln_abs_gamma(nf + 0.5)?).exp();
    let sign_n = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let pre = sign_n * ratio / (2.0 * (PI * q.k).sqrt());
    match q.parity {
        Parity::Even => {
            let p = continuous_hahn(&HahnParams::symmetric(n as u32, x, 0.25))?;
            Ok(p * (pre * gamma_sq(0.25, x)))
        }
        Parity::Odd => {
            if n == 0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            let p = continuous_hahn(&HahnParams::symmetric(n as u32 - 1, x, 0.75))?;
            Ok(Complex64::i() * p * (q.m.signum() as f64 * pre * gamma_sq(0.75, x)))
        }
    }
}

/// `(−i)^|m| / (π√(2k)) ∫₀^π (1+cos φ)^{−¼−ix} (1−cos φ)^{−¼+ix} {cos, sin}(mφ) dφ`.
///
/// With `cos φ = tanh τ` the integrand becomes `e^{−2ixτ} sech^{½}τ {cos, sin}(mφ(τ))`
/// on the real line, `φ(τ) = 2 atan(e^{−τ})`, and the endpoint singularities
/// turn into exponential decay.
pub fn w_coeff_integral(q: &WCoeffQuery) -> Result<Complex64> {
    w_coeff_integral_with(q, &TanhLine::default(), INTEGRAL_TOL)
}

pub fn w_coeff_integral_with(q: &WCoeffQuery, rule: &TanhLine, tol: f64) -> Result<Complex64> {
    if q.parity == Parity::Odd && q.m == 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let x = q.x();
    let m = q.m as f64;
    let odd = q.parity == Parity::Odd;
    let est = rule.integrate(|t| {
        let phi = 2.0 * (-t).exp().atan();
        let ang = if odd { (m * phi).sin() } else { (m * phi).cos() };
        let w = (-0.5 * ln_cosh(t)).exp() * ang;
        let (s, c) = (-2.0 * x * t).sin_cos();
        Complex64::new(c * w, s * w)
    });
    let scale = 1.0 / (PI * (2.0 * q.k).sqrt());
    let value = neg_i_pow((q.n() % 4) as i64) * est.value * scale;
    let err = est.error * scale;
    if err > tol * (1.0 + value.norm()) {
        return Err(Error::Quadrature(format!(
            "W integral for m={}, beta/k={}: step-halving change {err:e}",
            q.m,
            q.beta / q.k
        )));
    }
    Ok(value)
}

fn ln_cosh(t: f64) -> f64 {
    let a = t.abs();
    a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
}

/// Smallest |J_|m|(kr)| accepted by the projection oracle.
pub const PROJECTION_MIN_BESSEL: f64 = 0.05;

/// W from the angular projection of the parabolic function on the circle of radius `r`:
/// `∫₀^{2π} Ψ±(ξ(r,φ), η(r,φ)) e^{−imφ} dφ / (√(2πk) J_|m|(kr))`,
/// by the periodic trapezoid rule with `nodes` points.
pub fn w_projection_oracle(q: &WCoeffQuery, r: f64, nodes: usize) -> Result<Complex64> {
    let order = u32::try_from(q.n()).map_err(|_| Error::Range(format!("m={}", q.m)))?;
    let j = bessel_j(order, q.k * r)?;
    if j.abs() < PROJECTION_MIN_BESSEL {
        return Err(Error::Node(format!(
            "|J_{order}({})| = {:.3e} is below {PROJECTION_MIN_BESSEL}; pick another radius",
            q.k * r,
            j.abs()
        )));
    }
    let idx = ParabolicIndex::new(q.k, q.beta, q.parity)?;
    let m = q.m as f64;
    let mut failure = None;
    let integral = periodic_trapezoid(nodes, 0.0, TAU, |phi| {
        let p = polar_to_parabolic(PointPolar { r, phi });
        match psi_parabolic(&idx, p) {
            Ok(v) => v * Complex64::new(0.0, -m * phi).exp(),
            Err(e) => {
                failure.get_or_insert(e);
                Complex64::new(0.0, 0.0)
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(integral / ((TAU * q.k).sqrt() * j))
}

/// A radius near `r0` where `|J_|m|(kr)|` is comfortably away from zero,
/// searched outward in small steps.
pub fn projection_radius(k: f64, m: i64, r0: f64, r_max: f64) -> Option<f64> {
    let order = u32::try_from(m.unsigned_abs()).ok()?;
    let mut best: Option<(f64, f64)> = None;
    let steps = 400;
    for i in 0..=steps {
        let r = r0 + (r_max - r0) * i as f64 / steps as f64;
        let j = bessel_j(order, k * r).ok()?.abs();
        if j >= 2.0 * PROJECTION_MIN_BESSEL {
            return Some(r);
        }
        if best.is_none_or(|(_, b)| j > b) {
            best = Some((r, j));
        }
    }
    best.filter(|(_, j)| *j >= PROJECTION_MIN_BESSEL).map(|(r, _)| r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: Parity, k: f64, b: f64, m: i64) -> WCoeffQuery {
        WCoeffQuery::new(p, k, b, m).unwrap()
    }

    const W00: f64 = 1.1803405990160962;

    #[test]
    fn zero_order_values() {
        let v = w_coeff_3f2(&q(Parity::Even, 1.0, 0.0, 0)).unwrap();
        assert!((v.re - W00).abs() < 1e-14 && v.im == 0.0);
        let g = 3.625609908221908f64;
        assert!((W00 - g * g / (2.0 * PI.powf(1.5))).abs() < 1e-14);
        for b in [-2.0, 0.0, 3.3] {
            for m in WMethod::ALL {
                assert_eq!(w_coeff(&q(Parity::Odd, 1.3, b, 0), m).unwrap().norm(), 0.0);
            }
        }
    }

    #[test]
    fn hahn_small_cases() {
        assert!(w_coeff_hahn(&q(Parity::Even, 1.0, 0.0, 1)).unwrap().norm() < 1e-16);
        // m = −1, β = k: i·sign(m)·(−1)·|Γ(¾+i/2)|² / (2√(πk) Γ(3/2)²)
        let k = 1.7;
        let want = Complex64::new(0.0, gamma_sq(0.75, 0.5) / (2.0 * (PI * k).sqrt() * PI / 4.0));
        let got = w_coeff_hahn(&q(Parity::Odd, k, k, -1)).unwrap();
        assert!((got - want).norm() < 1e-14, "{got} vs {want}");
        assert!((w_coeff_3f2(&q(Parity::Odd, k, k, -1)).unwrap() - want).norm() < 1e-14);
    }

    #[test]
    fn high_precision_reference_values() {
        let cases = [
            (Parity::Even, 1.0, 0.5, 2, Complex64::new(0.18270082883553906, 0.0)),
            (Parity::Even, 1.0, 1.7, 3, Complex64::new(-0.34768923088808246, 0.0)),
            (Parity::Even, 1.3, -2.0, -1, Complex64::new(0.16013572193256846, 0.0)),
            (Parity::Even, 2.0, 1.0, -2, Complex64::new(0.1291889949980124, 0.0)),
            (Parity::Odd, 1.0, 0.5, 2, Complex64::new(0.0, 0.30859972712756697)),
            (Parity::Odd, 1.0, 1.7, 3, Complex64::new(0.0, -0.3480255063952048)),
            (Parity::Odd, 1.3, -2.0, -1, Complex64::new(0.0, 0.149805278506468)),
            (Parity::Odd, 2.0, 1.0, -2, Complex64::new(0.0, -0.21821295972422077)),
        ];
        for (p, k, b, m, want) in cases {
            for method in WMethod::ALL {
                let got = w_coeff(&q(p, k, b, m), method).unwrap();
                assert!((got - want).norm() < 1e-12, "{p} {k} {b} {m} {method}: {got}");
            }
        }
    }

    #[test]
    fn large_order_recurrence_values() {
        let cases = [
            (Parity::Even, 1.0, 0.7, 40, -0.007845582056003211),
            (Parity::Odd, 1.0, 0.7, -33, -0.09821804627497228),
            (Parity::Even, 2.0, -5.0, 55, -0.00868295408334076),
            (Parity::Odd, 0.5, 1.3, 60, 0.07426586912586519),
            (Parity::Even, 1.0, 0.0, 8, 0.1992782829507695),
            (Parity::Odd, 1.0, 2.5, 7, 0.2107815516641355),
        ];
        for (p, k, b, m, want) in cases {
            let got = w_coeff_closed_form(&q(p, k, b, m));
            let v = if p == Parity::Even { got.re } else { got.im };
            assert!((v - want).abs() < 1e-12, "{p} {k} {b} {m}: {got}");
        }
    }

    #[test]
    fn direct_routes_guard_large_orders() {
        assert!(matches!(
            w_coeff_3f2(&q(Parity::Even, 1.0, 0.0, 61)),
            Err(Error::Range(_))
        ));
        assert!(matches!(
            w_coeff_hahn(&q(Parity::Odd, 1.0, 0.0, -61)),
            Err(Error::Range(_))
        ));
        assert!(w_coeff_3f2(&q(Parity::Even, 1.0, 0.0, 60)).is_ok());
    }

    #[test]
    fn projection_oracle_examples() {
        let v = w_projection_oracle(&q(Parity::Even, 1.0, 0.0, 0), 1.0, 256).unwrap();
        assert!((v - Complex64::new(W00, 0.0)).norm() < 1e-9, "{v}");
        let v = w_projection_oracle(&q(Parity::Odd, 1.0, 0.4, 0), 1.0, 256).unwrap();
        assert!(v.norm() < 1e-12);
        let qq = q(Parity::Even, 1.0, 0.5, 2);
        let v = w_projection_oracle(&qq, 2.3, 256).unwrap();
        assert!((v - w_coeff_3f2(&qq).unwrap()).norm() < 1e-9);
        assert!(matches!(w_projection_oracle(&qq, 0.1, 256), Err(Error::Node(_))));
    }

    #[test]
    fn method_names_round_trip() {
        for m in WMethod::ALL {
            assert_eq!(m.as_str().parse::<WMethod>().unwrap(), m);
        }
        assert!("bogus".parse::<WMethod>().is_err());
    }
}
