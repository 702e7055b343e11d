//! Quadrature engines: periodic trapezoid, Gauss–Jacobi, trapezoid on the
//! tanh line, and panel-wise adaptive Simpson.

use crate::error::{Error, Result};
use crate::specfun::gamma::ln_abs_gamma;
use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadratureKind {
    PeriodicTrapezoid,
    GaussJacobi,
    AdaptiveSimpson,
    TanhLine,
}

/// Description of a quadrature rule as recorded in reports.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureRule {
    pub kind: QuadratureKind,
    pub node_count: usize,
    pub domain: (f64, f64),
    pub jacobi_exponents: Option<(f64, f64)>,
}

impl QuadratureRule {
    pub fn new(kind: QuadratureKind, node_count: usize, domain: (f64, f64)) -> Result<Self> {
        if node_count < 8 {
            return Err(Error::Contract(format!(
                "quadrature needs at least 8 nodes, got {node_count}"
            )));
        }
        Ok(QuadratureRule {
            kind,
            node_count,
            domain,
            jacobi_exponents: None,
        })
    }

    pub fn gauss_jacobi(node_count: usize, alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > -1.0 && beta > -1.0) {
            return Err(Error::Contract(format!(
                "Jacobi exponents must exceed -1, got ({alpha}, {beta})"
            )));
        }
        let mut r = QuadratureRule::new(QuadratureKind::GaussJacobi, node_count, (-1.0, 1.0))?;
        r.jacobi_exponents = Some((alpha, beta));
        Ok(r)
    }
}

/// Trapezoid sum over one period `[a, a + period)` with `n` equispaced nodes.
pub fn periodic_trapezoid<F>(n: usize, a: f64, period: f64, mut f: F) -> Complex64
where
    F: FnMut(f64) -> Complex64,
{
    let h = period / n as f64;
    let mut s = Complex64::new(0.0, 0.0);
    for i in 0..n {
        s += f(a + i as f64 * h);
    }
    s * h
}

/// Nodes and weights of the n-point Gauss–Jacobi rule for the weight
/// `(1 − u)^alpha (1 + u)^beta` on `[−1, 1]`, by Golub–Welsch.
pub fn gauss_jacobi(n: usize, alpha: f64, beta: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 || !(alpha > -1.0 && beta > -1.0) {
        return Err(Error::Contract(format!(
            "Gauss-Jacobi with n={n}, exponents ({alpha}, {beta})"
        )));
    }
    let ab = alpha + beta;
    let mut jm = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        let k = i as f64;
        let d = 2.0 * k + ab;
        jm[(i, i)] = if i == 0 {
            (beta - alpha) / (ab + 2.0)
        } else {
            (beta * beta - alpha * alpha) / (d * (d + 2.0))
        };
        if i + 1 < n {
            let k = k + 1.0;
            let d = 2.0 * k + ab;
            let b2 = if i == 0 {
                4.0 * (1.0 + alpha) * (1.0 + beta) / ((ab + 2.0).powi(2) * (ab + 3.0))
            } else {
                4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (d * d * (d + 1.0) * (d - 1.0))
            };
            let b = b2.sqrt();
            jm[(i, i + 1)] = b;
            jm[(i + 1, i)] = b;
        }
    }
    let ln_mu0 = (ab + 1.0) * std::f64::consts::LN_2 + ln_abs_gamma(alpha + 1.0)? + ln_abs_gamma(beta + 1.0)?
        - ln_abs_gamma(ab + 2.0)?;
    let mu0 = ln_mu0.exp();
    let eig = SymmetricEigen::new(jm);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let v0 = eig.eigenvectors[(0, i)];
            (eig.eigenvalues[i], mu0 * v0 * v0)
        })
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(pairs.into_iter().unzip())
}

/// Result of an integration with an error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: Complex64,
    pub error: f64,
}

/// Trapezoid rule on `[−half_width, half_width]` for integrands that decay
/// exponentially along the real line, as produced by the substitution
/// `cos φ = tanh τ`. The error estimate is the change from step `2h` to `h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TanhLine {
    pub half_width: f64,
    pub step: f64,
}

impl Default for TanhLine {
    fn default() -> Self {
        TanhLine {
            half_width: 76.0,
            step: 1.0 / 32.0,
        }
    }
}

impl TanhLine {
    pub fn node_count(&self) -> usize {
        2 * (self.half_width / self.step).round() as usize + 1
    }

    pub fn integrate<F>(&self, mut f: F) -> Estimate
    where
        F: FnMut(f64) -> Complex64,
    {
        let n = (self.half_width / self.step).round() as i64;
        let mut coarse = Complex64::new(0.0, 0.0);
        let mut fine_only = Complex64::new(0.0, 0.0);
        for i in -n..=n {
            let v = f(i as f64 * self.step);
            if i % 2 == 0 {
                coarse += v;
            } else {
                fine_only += v;
            }
        }
        let coarse = coarse * (2.0 * self.step);
        let fine = coarse * 0.5 + fine_only * self.step;
        Estimate {
            value: fine,
            error: (fine - coarse).norm(),
        }
    }
}

/// Adaptive Simpson with Richardson extrapolation for vector-valued
/// integrands. `[a, b]` is first split into panels no wider than `panel`;
/// each panel is refined until its local estimate meets `tol · width/(b−a)`.
pub struct AdaptiveSimpson {
    pub panel: f64,
    pub tol: f64,
    pub max_depth: u32,
}

struct Seg {
    a: f64,
    b: f64,
    fa: Vec<Complex64>,
    fm: Vec<Complex64>,
    fb: Vec<Complex64>,
    whole: Vec<Complex64>,
}

fn simpson(h: f64, fa: &[Complex64], fm: &[Complex64], fb: &[Complex64]) -> Vec<Complex64> {
    fa.iter()
        .zip(fm)
        .zip(fb)
        .map(|((a, m), b)| (a + m * 4.0 + b) * (h / 6.0))
        .collect()
}

impl AdaptiveSimpson {
    pub fn new(panel: f64, tol: f64) -> Self {
        AdaptiveSimpson {
            panel,
            tol,
            max_depth: 40,
        }
    }

    /// Returns the integrals and the summed error estimate.
    pub fn integrate<F>(&self, a: f64, b: f64, mut f: F) -> Result<(Vec<Complex64>, f64)>
    where
        F: FnMut(f64) -> Result<Vec<Complex64>>,
    {
        let panels = ((b - a) / self.panel).ceil().max(1.0) as usize;
        let w = (b - a) / panels as f64;
        let mut total: Option<Vec<Complex64>> = None;
        let mut err = 0.0;
        let mut left = f(a)?;
        for p in 0..panels {
            let pa = a + p as f64 * w;
            let pb = if p + 1 == panels { b } else { a + (p + 1) as f64 * w };
            let fm = f(0.5 * (pa + pb))?;
            let fb = f(pb)?;
            let whole = simpson(pb - pa, &left, &fm, &fb);
            let seg = Seg {
                a: pa,
                b: pb,
                fa: left,
                fm,
                fb: fb.clone(),
                whole,
            };
            let (v, e) = self.refine(&mut f, seg, self.tol * (pb - pa) / (b - a), 0)?;
            err += e;
            match total.as_mut() {
                None => total = Some(v),
                Some(t) => t.iter_mut().zip(&v).for_each(|(x, y)| *x += y),
            }
            left = fb;
        }
        Ok((total.unwrap_or_default(), err))
    }

    fn refine<F>(&self, f: &mut F, s: Seg, tol: f64, depth: u32) -> Result<(Vec<Complex64>, f64)>
    where
        F: FnMut(f64) -> Result<Vec<Complex64>>,
    {
        let m = 0.5 * (s.a + s.b);
        let fl = f(0.5 * (s.a + m))?;
        let fr = f(0.5 * (m + s.b))?;
        let left = simpson(m - s.a, &s.fa, &fl, &s.fm);
        let right = simpson(s.b - m, &s.fm, &fr, &s.fb);
        let mut delta = 0.0f64;
        let mut out = Vec::with_capacity(left.len());
        for ((l, r), w) in left.iter().zip(&right).zip(&s.whole) {
            let d = l + r - w;
            delta = delta.max(d.norm());
            out.push(l + r + d / 15.0);
        }
        if delta <= 15.0 * tol || (s.b - s.a) < 1e-12 {
            return Ok((out, delta / 15.0));
        }
        if depth >= self.max_depth {
            return Err(Error::Quadrature(format!(
                "adaptive Simpson stalled on [{}, {}] with local error {delta:e}",
                s.a, s.b
            )));
        }
        let (lv, le) = self.refine(
            f,
            Seg {
                a: s.a,
                b: m,
                fa: s.fa,
                fm: fl,
                fb: s.fm.clone(),
                whole: left,
            },
            tol / 2.0,
            depth + 1,
        )?;
        let (rv, re) = self.refine(
            f,
            Seg {
                a: m,
                b: s.b,
                fa: s.fm,
                fm: fr,
                fb: s.fb,
                whole: right,
            },
            tol / 2.0,
            depth + 1,
        )?;
        Ok((lv.iter().zip(&rv).map(|(x, y)| x + y).collect(), le + re))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn gauss_legendre_special_case() {
        let (x, w) = gauss_jacobi(5, 0.0, 0.0).unwrap();
        let s: f64 = w.iter().sum();
        assert!((s - 2.0).abs() < 1e-14);
        // exact for degree 9
        let q: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(8)).sum();
        assert!((q - 2.0 / 9.0).abs() < 1e-14);
    }

    #[test]
    fn chebyshev_weight_moments() {
        // ∫ (1−u²)^{-1/2} u² du = π/2
        let (x, w) = gauss_jacobi(16, -0.5, -0.5).unwrap();
        let q: f64 = x.iter().zip(&w).map(|(x, w)| w * x * x).sum();
        assert!((q - PI / 2.0).abs() < 1e-14);
    }

    #[test]
    fn three_quarter_weight_total_mass() {
        // ∫ (1−u²)^{-3/4} du = B(1/4, 1/4) / √2 = Γ(1/4)² / (√2 Γ(1/2))
        let (_, w) = gauss_jacobi(64, -0.75, -0.75).unwrap();
        let s: f64 = w.iter().sum();
        let g = 3.625609908221908f64;
        assert!((s - g * g / (2f64.sqrt() * PI.sqrt())).abs() < 1e-13);
    }

    #[test]
    fn rule_descriptor_invariants() {
        assert!(QuadratureRule::new(QuadratureKind::PeriodicTrapezoid, 4, (0.0, 1.0)).is_err());
        assert!(QuadratureRule::gauss_jacobi(32, -1.0, 0.0).is_err());
        assert!(QuadratureRule::gauss_jacobi(32, -0.75, -0.75).is_ok());
    }

    #[test]
    fn periodic_trapezoid_exact_for_trig_polynomials() {
        let v = periodic_trapezoid(16, 0.0, 2.0 * PI, |t| Complex64::new((3.0 * t).cos().powi(2), 0.0));
        assert!((v.re - PI).abs() < 1e-14);
    }

    #[test]
    fn tanh_line_sech_integral() {
        // ∫ sech τ dτ = π
        let e = TanhLine::default().integrate(|t| Complex64::new(1.0 / t.cosh(), 0.0));
        assert!((e.value.re - PI).abs() < 1e-14 && e.error < 1e-13);
    }

    #[test]
    fn adaptive_simpson_vector() {
        let q = AdaptiveSimpson::new(0.5, 1e-12);
        let (v, err) = q
            .integrate(0.0, PI, |t| {
                Ok(vec![Complex64::new(t.sin(), 0.0), Complex64::new(0.0, t * t)])
            })
            .unwrap();
        assert!((v[0].re - 2.0).abs() < 1e-11);
        assert!((v[1].im - PI.powi(3) / 3.0).abs() < 1e-11);
        assert!(err < 1e-11);
    }
}
