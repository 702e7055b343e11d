//! Cartesian, polar and parabolic charts of the plane.
//!
//! Parabolic coordinates are `x = (ξ² − η²)/2`, `y = ξη` with `ξ ≥ 0`.
//! Off the origin the inverse is made total by sending the negative x-axis
//! to `ξ = 0, η > 0`.

use crate::error::{Error, Result};
use serde::Serialize;
use std::f64::consts::TAU;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PointXY {
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PointPolar {
    pub r: f64,
    pub phi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PointParabolic {
    pub xi: f64,
    pub eta: f64,
}

impl PointXY {
    pub fn new(x: f64, y: f64) -> Self {
        PointXY { x, y }
    }
}

impl PointPolar {
    /// Builds a polar point, folding `phi` into `[0, 2π)`.
    pub fn new(r: f64, phi: f64) -> Result<Self> {
        if !(r > 0.0 && r.is_finite()) || !phi.is_finite() {
            return Err(Error::Contract(format!(
                "polar point needs finite r > 0, got r={r}, phi={phi}"
            )));
        }
        Ok(PointPolar {
            r,
            phi: normalize_angle(phi),
        })
    }
}

impl PointParabolic {
    pub fn new(xi: f64, eta: f64) -> Result<Self> {
        if !(xi >= 0.0 && xi.is_finite() && eta.is_finite()) {
            return Err(Error::Contract(format!(
                "parabolic point needs finite xi >= 0, got xi={xi}, eta={eta}"
            )));
        }
        Ok(PointParabolic { xi, eta })
    }
}

/// Folds an angle into `[0, 2π)`.
pub fn normalize_angle(phi: f64) -> f64 {
    let a = phi.rem_euclid(TAU);
    // rem_euclid can round up to exactly 2π for tiny negative inputs
    if a >= TAU {
        a - TAU
    } else {
        a
    }
}

pub fn parabolic_to_xy(p: PointParabolic) -> PointXY {
    PointXY {
        x: 0.5 * (p.xi * p.xi - p.eta * p.eta),
        y: p.xi * p.eta,
    }
}

/// `ξ = √(r + x)`, `η = sgn⁺(y) √(r − x)`, with `sgn⁺(0) = +1`.
pub fn xy_to_parabolic(p: PointXY) -> Result<PointParabolic> {
    let (xi2, eta2) = xy_to_parabolic_sq(p)?;
    let eta = eta2.sqrt();
    Ok(PointParabolic {
        xi: xi2.sqrt(),
        eta: if p.y < 0.0 { -eta } else { eta },
    })
}

/// `(ξ², η²)` for a Cartesian point, computed without cancellation.
pub fn xy_to_parabolic_sq(p: PointXY) -> Result<(f64, f64)> {
    if p.x == 0.0 && p.y == 0.0 {
        return Err(Error::Origin("parabolic"));
    }
    let r = p.x.hypot(p.y);
    let y2 = p.y * p.y;
    let xi2 = if p.x >= 0.0 { r + p.x } else { y2 / (r - p.x) };
    let eta2 = if p.x <= 0.0 { r - p.x } else { y2 / (r + p.x) };
    Ok((xi2, eta2))
}

/// `(ξ², η²) = (r(1 + cos φ), r(1 − cos φ))`, written with half angles.
pub fn polar_to_parabolic_sq(p: PointPolar) -> (f64, f64) {
    let (s, c) = (0.5 * p.phi).sin_cos();
    (2.0 * p.r * c * c, 2.0 * p.r * s * s)
}

/// Parabolic point of a polar point, with `η` carrying the sign of `sin φ`.
pub fn polar_to_parabolic(p: PointPolar) -> PointParabolic {
    let (s, c) = (0.5 * p.phi).sin_cos();
    let root = (2.0 * p.r).sqrt();
    // φ ∈ [0, 2π): cos(φ/2) changes sign at π, which is exactly where y flips
    let xi = root * c.abs();
    let eta = root * s * c.signum();
    PointParabolic { xi, eta }
}

pub fn xy_to_polar(p: PointXY) -> Result<PointPolar> {
    if p.x == 0.0 && p.y == 0.0 {
        return Err(Error::Origin("polar"));
    }
    Ok(PointPolar {
        r: p.x.hypot(p.y),
        phi: normalize_angle(p.y.atan2(p.x)),
    })
}

pub fn polar_to_xy(p: PointPolar) -> PointXY {
    let (s, c) = p.phi.sin_cos();
    PointXY { x: p.r * c, y: p.r * s }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, SQRT_2};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + b.abs())
    }

    #[test]
    fn parabolic_to_xy_examples() {
        assert_eq!(
            parabolic_to_xy(PointParabolic { xi: 1.0, eta: 0.0 }),
            PointXY::new(0.5, 0.0)
        );
        assert_eq!(
            parabolic_to_xy(PointParabolic { xi: 0.0, eta: 1.0 }),
            PointXY::new(-0.5, 0.0)
        );
        let p = parabolic_to_xy(PointParabolic {
            xi: SQRT_2,
            eta: SQRT_2,
        });
        assert!(close(p.x, 0.0, 1e-15) && close(p.y, 2.0, 1e-15));
    }

    #[test]
    fn xy_to_parabolic_examples() {
        let p = xy_to_parabolic(PointXY::new(0.5, 0.0)).unwrap();
        assert_eq!((p.xi, p.eta), (1.0, 0.0));
        let p = xy_to_parabolic(PointXY::new(0.0, 2.0)).unwrap();
        assert!(close(p.xi, SQRT_2, 1e-15) && close(p.eta, SQRT_2, 1e-15));
        let p = xy_to_parabolic(PointXY::new(-0.5, 0.0)).unwrap();
        assert_eq!((p.xi, p.eta), (0.0, 1.0));
        assert_eq!(xy_to_parabolic(PointXY::new(0.0, 0.0)), Err(Error::Origin("parabolic")));
    }

    #[test]
    fn polar_examples() {
        let p = xy_to_polar(PointXY::new(1.0, 0.0)).unwrap();
        assert_eq!((p.r, p.phi), (1.0, 0.0));
        let p = xy_to_polar(PointXY::new(0.0, -1.0)).unwrap();
        assert!(close(p.phi, 1.5 * PI, 1e-15));
        let p = xy_to_polar(PointXY::new(-3.0, 4.0)).unwrap();
        assert!(close(p.r, 5.0, 1e-15) && close(p.phi, PI - (4.0f64 / 3.0).atan(), 1e-15));
        assert!(xy_to_polar(PointXY::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn polar_squares_examples() {
        let (a, b) = polar_to_parabolic_sq(PointPolar::new(1.0, 0.0).unwrap());
        assert_eq!((a, b), (2.0, 0.0));
        let (a, b) = polar_to_parabolic_sq(PointPolar::new(1.0, PI).unwrap());
        assert!(close(a, 0.0, 1e-15) && close(b, 2.0, 1e-15));
        let (a, b) = polar_to_parabolic_sq(PointPolar::new(2.0, PI / 2.0).unwrap());
        assert!(close(a, 2.0, 1e-15) && close(b, 2.0, 1e-15));
    }

    #[test]
    fn angle_normalisation() {
        assert_eq!(normalize_angle(-1e-300), 0.0);
        assert!(normalize_angle(-1e-17) < TAU);
        assert!(close(normalize_angle(-PI / 2.0), 1.5 * PI, 1e-15));
        assert!(close(normalize_angle(7.0 * PI), PI, 1e-14));
        assert!(PointPolar::new(0.0, 1.0).is_err());
    }

    #[test]
    fn polar_to_parabolic_matches_cartesian_route() {
        for i in 0..64 {
            let phi = i as f64 * TAU / 64.0;
            let p = PointPolar::new(1.7, phi).unwrap();
            let a = polar_to_parabolic(p);
            let b = xy_to_parabolic(polar_to_xy(p)).unwrap();
            assert!(
                close(a.xi, b.xi, 1e-14) && close(a.eta, b.eta, 1e-14),
                "phi={phi}: {a:?} {b:?}"
            );
        }
    }

    #[test]
    fn eta_flip_is_y_flip() {
        let a = parabolic_to_xy(PointParabolic { xi: 0.7, eta: 1.3 });
        let b = parabolic_to_xy(PointParabolic { xi: 0.7, eta: -1.3 });
        assert_eq!(a.x, b.x);
        assert_eq!(a.y, -b.y);
    }
}
