//! Normalised solutions of ΔΨ + k²Ψ = 0 in Cartesian, polar and parabolic
//! coordinates.
//!
//! Odd factors are evaluated on `|y|` (or `|η|`) and multiplied by the sign
//! of the coordinate afterwards, so parity relations hold bit for bit.

use crate::error::{Error, Result};
use crate::geometry::{xy_to_parabolic, PointParabolic, PointPolar, PointXY};
use crate::specfun::gamma::abs_gamma_sq;
use crate::specfun::{bessel_j, kummer_1f1, sign};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, SQRT_2, TAU};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn other(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Parity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even" | "+" | "plus" => Ok(Parity::Even),
            "odd" | "-" | "minus" => Ok(Parity::Odd),
            _ => Err(Error::Contract(format!("unknown parity `{s}` (even|odd)"))),
        }
    }
}

/// Plane wave labelled by its wave vector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PlaneWaveIndex {
    pub k1: f64,
    pub k2: f64,
}

impl PlaneWaveIndex {
    pub fn new(k1: f64, k2: f64) -> Result<Self> {
        if !(k1.is_finite() && k2.is_finite()) || (k1 == 0.0 && k2 == 0.0) {
            return Err(Error::Contract(format!(
                "plane wave needs (k1, k2) != 0, got ({k1}, {k2})"
            )));
        }
        Ok(PlaneWaveIndex { k1, k2 })
    }

    pub fn k(&self) -> f64 {
        self.k1.hypot(self.k2)
    }
}

/// Parity-definite Cartesian solution labelled by `(k, α)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AngleIndex {
    pub k: f64,
    pub alpha: f64,
    pub parity: Parity,
}

impl AngleIndex {
    pub fn new(k: f64, alpha: f64, parity: Parity) -> Result<Self> {
        check_k(k)?;
        if !(-PI..PI).contains(&alpha) {
            return Err(Error::Contract(format!("alpha must lie in [-pi, pi), got {alpha}")));
        }
        Ok(AngleIndex { k, alpha, parity })
    }

    pub fn k1(&self) -> f64 {
        self.k * self.alpha.cos()
    }

    pub fn k2(&self) -> f64 {
        self.k * self.alpha.sin()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolarIndex {
    pub k: f64,
    pub m: i64,
}

impl PolarIndex {
    pub fn new(k: f64, m: i64) -> Result<Self> {
        check_k(k)?;
        Ok(PolarIndex { k, m })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParabolicIndex {
    pub k: f64,
    pub beta: f64,
    pub parity: Parity,
}

impl ParabolicIndex {
    pub fn new(k: f64, beta: f64, parity: Parity) -> Result<Self> {
        check_k(k)?;
        if !beta.is_finite() {
            return Err(Error::Contract(format!("beta must be finite, got {beta}")));
        }
        Ok(ParabolicIndex { k, beta, parity })
    }
}

fn check_k(k: f64) -> Result<()> {
    if k > 0.0 && k.is_finite() {
        Ok(())
    } else {
        Err(Error::Contract(format!(
            "wave number must be finite and positive, got {k}"
        )))
    }
}

/// `e^{i(k1 x + k2 y)} / 2π`.
pub fn psi_plane(idx: &PlaneWaveIndex, p: PointXY) -> Complex64 {
    let (s, c) = (idx.k1 * p.x + idx.k2 * p.y).sin_cos();
    Complex64::new(c, s) / TAU
}

fn parity_factor(parity: Parity, w: f64, t: f64) -> f64 {
    let (s, c) = (w * t.abs()).sin_cos();
    match parity {
        Parity::Even => c,
        Parity::Odd => sign(t) * s,
    }
}

/// `e^{i k1 x} {cos, sin}(|k2| y) / 2π`, the single-parity partners of the plane wave.
pub fn psi_single_parity(parity: Parity, idx: &PlaneWaveIndex, p: PointXY) -> Complex64 {
    let (s, c) = (idx.k1 * p.x).sin_cos();
    Complex64::new(c, s) * (parity_factor(parity, idx.k2.abs(), p.y) / TAU)
}

/// `(√k / 2π) e^{ikx cos|α|} {cos, sin}(k sin|α| y)`.
pub fn psi_cartesian_parity(idx: &AngleIndex, p: PointXY) -> Complex64 {
    let (sa, ca) = idx.alpha.abs().sin_cos();
    let (s, c) = (idx.k * ca * p.x).sin_cos();
    let amp = idx.k.sqrt() / TAU * parity_factor(idx.parity, idx.k * sa, p.y);
    Complex64::new(c, s) * amp
}

/// `(1 / 2√π) {cos, sin}(|k1| x) {cos, sin}(|k2| y)`, parity given per axis.
pub fn psi_cartesian_double_parity(kind: (Parity, Parity), k1: f64, k2: f64, p: PointXY) -> f64 {
    let fx = parity_factor(kind.0, k1.abs(), p.x);
    let fy = parity_factor(kind.1, k2.abs(), p.y);
    fx * fy / (2.0 * PI.sqrt())
}

/// `√k J_|m|(kr) e^{imφ} / √(2π)`.
pub fn psi_polar(idx: &PolarIndex, p: PointPolar) -> Result<Complex64> {
    let order = u32::try_from(idx.m.unsigned_abs()).map_err(|_| Error::Range(format!("polar order m={}", idx.m)))?;
    let j = bessel_j(order, idx.k * p.r)?;
    let (s, c) = (idx.m as f64 * p.phi).sin_cos();
    Ok(Complex64::new(c, s) * (idx.k.sqrt() * j / TAU.sqrt()))
}

/// Normalisation of the parabolic functions:
/// `C⁺ = |Γ(¼ + iβ/2k)|² / (2√2 π²)`, `C⁻ = √2 k |Γ(¾ + iβ/2k)|² / π²`.
pub fn parabolic_norm_constant(idx: &ParabolicIndex) -> f64 {
    let x = idx.beta / (2.0 * idx.k);
    match idx.parity {
        Parity::Even => abs_gamma_sq(0.25, x).expect("1/4 + ix is never a pole") / (2.0 * SQRT_2 * PI * PI),
        Parity::Odd => SQRT_2 * idx.k * abs_gamma_sq(0.75, x).expect("3/4 + ix is never a pole") / (PI * PI),
    }
}

/// Parabolic wave function in the non-conjugated ₁F₁ form.
///
/// Needs `k·max(ξ², η²) ≤ 50`, the range of [`kummer_1f1`].
pub fn psi_parabolic(idx: &ParabolicIndex, p: PointParabolic) -> Result<Complex64> {
    let k = idx.k;
    let x = idx.beta / (2.0 * k);
    let (xi2, eta2) = (p.xi * p.xi, p.eta * p.eta);
    let (s, c) = (-0.5 * k * (xi2 + eta2)).sin_cos();
    let phase = Complex64::new(c, s);
    let norm = parabolic_norm_constant(idx);
    match idx.parity {
        Parity::Even => {
            let f1 = kummer_1f1(Complex64::new(0.25, x), 0.5, Complex64::new(0.0, k * xi2))?;
            let f2 = kummer_1f1(Complex64::new(0.25, -x), 0.5, Complex64::new(0.0, k * eta2))?;
            Ok(phase * f1 * f2 * norm)
        }
        Parity::Odd => {
            let f1 = kummer_1f1(Complex64::new(0.75, x), 1.5, Complex64::new(0.0, k * xi2))?;
            let f2 = kummer_1f1(Complex64::new(0.75, -x), 1.5, Complex64::new(0.0, k * eta2))?;
            Ok(phase * f1 * f2 * (norm * p.xi * p.eta.abs()) * sign(p.eta))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MillerSign {
    Plus,
    Minus,
}

/// `π√2 (Ψ⁺ ± iΨ⁻)`.
pub fn psi_miller(k: f64, beta: f64, sign: MillerSign, p: PointParabolic) -> Result<Complex64> {
    let even = psi_parabolic(&ParabolicIndex::new(k, beta, Parity::Even)?, p)?;
    let odd = psi_parabolic(&ParabolicIndex::new(k, beta, Parity::Odd)?, p)?;
    let i_odd = Complex64::new(-odd.im, odd.re);
    let scale = PI * SQRT_2;
    Ok(match sign {
        MillerSign::Plus => (even + i_odd) * scale,
        MillerSign::Minus => (even - i_odd) * scale,
    })
}

/// Any of the wave functions above, evaluated at a Cartesian point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Basis {
    Plane(PlaneWaveIndex),
    SingleParity(Parity, PlaneWaveIndex),
    Cartesian(AngleIndex),
    DoubleParity { kind: (Parity, Parity), k1: f64, k2: f64 },
    Polar(PolarIndex),
    Parabolic(ParabolicIndex),
    Miller { k: f64, beta: f64, sign: MillerSign },
}

impl Basis {
    pub fn wavenumber(&self) -> f64 {
        match self {
            Basis::Plane(i) | Basis::SingleParity(_, i) => i.k(),
            Basis::Cartesian(i) => i.k,
            Basis::DoubleParity { k1, k2, .. } => k1.hypot(*k2),
            Basis::Polar(i) => i.k,
            Basis::Parabolic(i) => i.k,
            Basis::Miller { k, .. } => *k,
        }
    }

    pub fn eval_xy(&self, p: PointXY) -> Result<Complex64> {
        match self {
            Basis::Plane(i) => Ok(psi_plane(i, p)),
            Basis::SingleParity(par, i) => Ok(psi_single_parity(*par, i, p)),
            Basis::Cartesian(i) => Ok(psi_cartesian_parity(i, p)),
            Basis::DoubleParity { kind, k1, k2 } => {
                Ok(Complex64::new(psi_cartesian_double_parity(*kind, *k1, *k2, p), 0.0))
            }
            Basis::Polar(i) => {
                if p.x == 0.0 && p.y == 0.0 {
                    let v = if i.m == 0 { (i.k / TAU).sqrt() } else { 0.0 };
                    return Ok(Complex64::new(v, 0.0));
                }
                psi_polar(i, crate::geometry::xy_to_polar(p)?)
            }
            Basis::Parabolic(i) => psi_parabolic(i, parabolic_or_origin(p)?),
            Basis::Miller { k, beta, sign } => psi_miller(*k, *beta, *sign, parabolic_or_origin(p)?),
        }
    }
}

fn parabolic_or_origin(p: PointXY) -> Result<PointParabolic> {
    if p.x == 0.0 && p.y == 0.0 {
        Ok(PointParabolic { xi: 0.0, eta: 0.0 })
    } else {
        xy_to_parabolic(p)
    }
}
