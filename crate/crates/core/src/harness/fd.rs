//! Finite-difference versions of the symmetry operators and the Laplacian.
//!
//! Every operator is a second-order central difference, so nested
//! compositions stay O(h²) with a stencil radius of at most 2h.

use crate::bases::Basis;
use crate::error::{Error, Result};
use crate::geometry::PointXY;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// Step sizes of the refinement ladder.
pub const H_LADDER: [f64; 3] = [1e-2, 5e-3, 1e-3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OperatorTag {
    /// `L3²`
    #[serde(rename = "X_S")]
    XS,
    /// `P2²`
    #[serde(rename = "X_C")]
    XC,
    /// `L3 P2 + P2 L3`
    #[serde(rename = "X_P")]
    XP,
    /// `x∂_y − y∂_x`
    L3,
    /// `∂_x`
    P1,
    /// `∂_y`
    P2,
}

impl OperatorTag {
    pub const ALL: [OperatorTag; 6] = [
        OperatorTag::XS,
        OperatorTag::XC,
        OperatorTag::XP,
        OperatorTag::L3,
        OperatorTag::P1,
        OperatorTag::P2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            OperatorTag::XS => "X_S",
            OperatorTag::XC => "X_C",
            OperatorTag::XP => "X_P",
            OperatorTag::L3 => "L3",
            OperatorTag::P1 => "P1",
            OperatorTag::P2 => "P2",
        }
    }

    /// The eigenvalue of this operator on `basis`, if the basis function is
    /// an eigenfunction of it.
    pub fn eigenvalue(self, basis: &Basis) -> Option<Complex64> {
        let re = |v: f64| Some(Complex64::new(v, 0.0));
        let im = |v: f64| Some(Complex64::new(0.0, v));
        match (self, basis) {
            (OperatorTag::XS, Basis::Polar(i)) => re(-((i.m * i.m) as f64)),
            (OperatorTag::L3, Basis::Polar(i)) => im(i.m as f64),
            (OperatorTag::XC, Basis::Cartesian(i)) => re(-(i.k * i.alpha.sin()).powi(2)),
            (OperatorTag::XC, Basis::Plane(i) | Basis::SingleParity(_, i)) => re(-i.k2 * i.k2),
            (OperatorTag::XC, Basis::DoubleParity { k2, .. }) => re(-k2 * k2),
            (OperatorTag::XP, Basis::Parabolic(i)) => re(2.0 * i.beta),
            (OperatorTag::XP, Basis::Miller { beta, .. }) => re(2.0 * beta),
            (OperatorTag::P1, Basis::Plane(i) | Basis::SingleParity(_, i)) => im(i.k1),
            (OperatorTag::P1, Basis::Cartesian(i)) => im(i.k * i.alpha.abs().cos()),
            (OperatorTag::P2, Basis::Plane(i)) => im(i.k2),
            _ => None,
        }
    }
}

impl fmt::Display for OperatorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OperatorTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        OperatorTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Contract(format!("unknown operator `{s}`")))
    }
}

/// A complex field on the plane.
pub type Field<'a> = Arc<dyn Fn(PointXY) -> Result<Complex64> + Send + Sync + 'a>;

pub fn basis_field(basis: Basis) -> Field<'static> {
    Arc::new(move |p| basis.eval_xy(p))
}

fn at(p: PointXY, dx: f64, dy: f64) -> PointXY {
    PointXY::new(p.x + dx, p.y + dy)
}

pub fn p1<'a>(f: Field<'a>, h: f64) -> Field<'a> {
    Arc::new(move |p| Ok((f(at(p, h, 0.0))? - f(at(p, -h, 0.0))?) / (2.0 * h)))
}

pub fn p2<'a>(f: Field<'a>, h: f64) -> Field<'a> {
    Arc::new(move |p| Ok((f(at(p, 0.0, h))? - f(at(p, 0.0, -h))?) / (2.0 * h)))
}

pub fn l3<'a>(f: Field<'a>, h: f64) -> Field<'a> {
    let (dx, dy) = (p1(f.clone(), h), p2(f, h));
    Arc::new(move |p| Ok(dy(p)? * p.x - dx(p)? * p.y))
}

/// Five-point Laplacian.
pub fn laplacian<'a>(f: Field<'a>, h: f64) -> Field<'a> {
    Arc::new(move |p| {
        let c = f(p)?;
        let s = f(at(p, h, 0.0))? + f(at(p, -h, 0.0))? + f(at(p, 0.0, h))? + f(at(p, 0.0, -h))?;
        Ok((s - c * 4.0) / (h * h))
    })
}

pub fn apply<'a>(tag: OperatorTag, f: Field<'a>, h: f64) -> Field<'a> {
    match tag {
        OperatorTag::XS => l3(l3(f, h), h),
        OperatorTag::XC => p2(p2(f, h), h),
        OperatorTag::XP => {
            let a = l3(p2(f.clone(), h), h);
            let b = p2(l3(f, h), h);
            Arc::new(move |p| Ok(a(p)? + b(p)?))
        }
        OperatorTag::L3 => l3(f, h),
        OperatorTag::P1 => p1(f, h),
        OperatorTag::P2 => p2(f, h),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_on_low_degree_polynomials() {
        // f = x²y: P1 f = 2xy, P2 f = x², L3 f = x³ − 2xy², Δf = 2y
        let f: Field = Arc::new(|p: PointXY| Ok(Complex64::new(p.x * p.x * p.y, 0.0)));
        let p = PointXY::new(0.7, -0.4);
        let h = 1e-2;
        assert!((p1(f.clone(), h)(p).unwrap().re - 2.0 * 0.7 * -0.4).abs() < 1e-12);
        assert!((p2(f.clone(), h)(p).unwrap().re - 0.49).abs() < 1e-12);
        assert!((l3(f.clone(), h)(p).unwrap().re - (0.343 - 2.0 * 0.7 * 0.16)).abs() < 1e-12);
        assert!((laplacian(f, h)(p).unwrap().re - 2.0 * -0.4).abs() < 1e-10);
    }

    #[test]
    fn tag_names_round_trip() {
        for t in OperatorTag::ALL {
            assert_eq!(t.as_str().parse::<OperatorTag>().unwrap(), t);
            assert_eq!(serde_json::to_string(&t).unwrap(), format!("\"{t}\""));
        }
    }
}
