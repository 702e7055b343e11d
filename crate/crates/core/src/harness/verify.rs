//! One check per identity. Each `verify_*` is deterministic: fixed node
//! counts and index-ordered sums.

use super::fd::{apply, basis_field, laplacian, Field, OperatorTag, H_LADDER};
use super::report::{Params, VerificationReport};
use crate::bases::{
    psi_cartesian_double_parity, psi_cartesian_parity, psi_miller, psi_parabolic, psi_polar, psi_single_parity,
    AngleIndex, Basis, MillerSign, ParabolicIndex, Parity, PlaneWaveIndex, PolarIndex,
};
use crate::coeffs::{
    angular_integral_edge, angular_integral_i, projection_radius, s_coeff, s_overlap, w_coeff, w_coeff_closed_form,
    w_projection_oracle, SCoeffQuery, WCoeffQuery, WMethod,
};
use crate::error::{Error, Result};
use crate::geometry::{parabolic_to_xy, polar_to_parabolic, xy_to_parabolic, PointParabolic, PointPolar, PointXY};
use crate::quadrature::{periodic_trapezoid, AdaptiveSimpson, TanhLine};
use crate::specfun::hahn::{symmetric_norm, symmetric_weight};
use crate::specfun::{
    bailey_sides, bessel_j, bessel_j_all, continuous_hahn, i_pow, sine_power_integral, HahnParams, Z_MAX,
};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{FRAC_PI_4, PI, TAU};

fn c0() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

fn parabolic_range(k: f64, p: PointParabolic) -> Result<()> {
    let z = k * p.xi.powi(2).max(p.eta.powi(2));
    if z > Z_MAX {
        return Err(Error::Range(format!("k*max(xi^2, eta^2) = {z} exceeds {Z_MAX}")));
    }
    Ok(())
}

/// `2π i^|m| J_|m|(kr) e^{imφ} = ∫_{−π}^{π} e^{ikr cos(φ−α)} e^{imα} dα`, right side by
/// the periodic trapezoid rule.
pub fn verify_jacobi_anger(k: f64, r: f64, m: i64, phi: f64, nodes: usize, tol: f64) -> Result<VerificationReport> {
    if k * r > 50.0 || m.unsigned_abs() > 20 {
        return Err(Error::Range(format!(
            "Jacobi-Anger check needs kr <= 50 and |m| <= 20, got kr={}, m={m}",
            k * r
        )));
    }
    let j = bessel_j(m.unsigned_abs() as u32, k * r)?;
    let lhs = i_pow(m.unsigned_abs() as i64 % 4) * Complex64::new(0.0, m as f64 * phi).exp() * (TAU * j);
    let rhs = periodic_trapezoid(nodes, -PI, TAU, |a| {
        Complex64::new(0.0, k * r * (phi - a).cos() + m as f64 * a).exp()
    });
    let params = Params::new()
        .with("k", k)
        .with("r", r)
        .with("m", m)
        .with("phi", phi)
        .with("nodes", nodes);
    Ok(VerificationReport::from_errors(
        "jacobi_anger",
        params,
        &[(lhs - rhs).norm()],
        tol,
    ))
}

/// `Ψ±_{k|α|} = Σ_{|m|≤M} S±*_{mα} Ψ_{km}`; the tolerance scales with √k.
pub fn verify_expansion_cartesian_from_polar(
    idx: &AngleIndex,
    p: PointPolar,
    m_terms: u32,
    tol: f64,
) -> Result<VerificationReport> {
    if (m_terms as f64) < idx.k * p.r + 20.0 {
        return Err(Error::Contract(format!(
            "need M >= kr + 20, got M={m_terms}, kr={}",
            idx.k * p.r
        )));
    }
    let lhs = psi_cartesian_parity(idx, crate::geometry::polar_to_xy(p));
    let js = bessel_j_all(m_terms, idx.k * p.r)?;
    let mut sum = c0();
    for m in -(m_terms as i64)..=m_terms as i64 {
        let s = s_coeff(&SCoeffQuery::new(idx.parity, m, idx.alpha)?).conj();
        let (sn, cs) = (m as f64 * p.phi).sin_cos();
        let psi = Complex64::new(cs, sn) * (idx.k.sqrt() * js[m.unsigned_abs() as usize] / TAU.sqrt());
        sum += s * psi;
    }
    let params = Params::new()
        .with("parity", idx.parity.as_str())
        .with("k", idx.k)
        .with("alpha", idx.alpha)
        .with("r", p.r)
        .with("phi", p.phi)
        .with("terms", m_terms);
    Ok(VerificationReport::from_errors(
        "expansion/cartesian_from_polar",
        params,
        &[(lhs - sum).norm()],
        tol * idx.k.sqrt(),
    ))
}

/// Terms whose magnitude, summed over ±m, must stay below this for three
/// consecutive orders past `kr` before the sum is declared converged.
pub const TAIL_TERM: f64 = 1e-12;

/// `Ψ±_{kβ} = Σ_m W±_{kβm} Ψ_{km}`, truncated by a tail monitor.
pub fn verify_expansion_parabolic_from_polar(
    idx: &ParabolicIndex,
    p: PointPolar,
    m_max: u32,
    tol: f64,
) -> Result<VerificationReport> {
    let pp = polar_to_parabolic(p);
    parabolic_range(idx.k, pp)?;
    let lhs = psi_parabolic(idx, pp)?;
    let kr = idx.k * p.r;
    let js = bessel_j_all(m_max, kr)?;
    let w = |m: i64| {
        w_coeff_closed_form(&WCoeffQuery {
            parity: idx.parity,
            k: idx.k,
            beta: idx.beta,
            m,
        })
    };
    let psi = |m: i64| {
        let (s, c) = (m as f64 * p.phi).sin_cos();
        Complex64::new(c, s) * (idx.k.sqrt() * js[m.unsigned_abs() as usize] / TAU.sqrt())
    };
    let mut sum = w(0) * psi(0);
    let mut quiet = 0;
    let mut last = f64::INFINITY;
    let mut used = None;
    for m in 1..=m_max as i64 {
        let pair = w(m) * psi(m) + w(-m) * psi(-m);
        sum += pair;
        last = pair.norm();
        if last < TAIL_TERM && m as f64 > kr {
            quiet += 1;
            if quiet == 3 {
                used = Some(m);
                break;
            }
        } else {
            quiet = 0;
        }
    }
    let Some(terms) = used else {
        return Err(Error::Convergence(format!(
            "parabolic-from-polar sum at kr={kr}: last term pair {last:e} after M={m_max}"
        )));
    };
    let params = Params::new()
        .with("parity", idx.parity.as_str())
        .with("k", idx.k)
        .with("beta", idx.beta)
        .with("r", p.r)
        .with("phi", p.phi)
        .with("terms", terms)
        .with("tail_term", last);
    Ok(VerificationReport::from_errors(
        "expansion/parabolic_from_polar",
        params,
        &[(lhs - sum).norm()],
        tol,
    ))
}

/// `Ψ±_{kβ} = 2∫₀^π Z_{kβ|α|} Ψ±_{k|α|} dα`. With `cos α = tanh τ` this is
/// `(1/√(πk)) ∫ sech^{½}τ e^{iβτ/k} Ψ±_{k,α(τ)} dτ` over the real line.
pub fn verify_expansion_parabolic_from_cartesian(
    idx: &ParabolicIndex,
    p: PointParabolic,
    tol: f64,
) -> Result<VerificationReport> {
    parabolic_range(idx.k, p)?;
    let lhs = psi_parabolic(idx, p)?;
    let xy = parabolic_to_xy(p);
    let rule = TanhLine::default();
    let est = rule.integrate(|t| {
        // only |α| enters; the negative branch keeps α = π representable
        let alpha = -2.0 * (-t).exp().atan();
        let cart = psi_cartesian_parity(
            &AngleIndex {
                k: idx.k,
                alpha,
                parity: idx.parity,
            },
            xy,
        );
        let half_sech = (-0.5 * ln_cosh(t)).exp();
        Complex64::new(0.0, idx.beta * t / idx.k).exp() * cart * half_sech
    });
    let scale = 1.0 / (PI * idx.k).sqrt();
    let rhs = est.value * scale;
    let params = Params::new()
        .with("parity", idx.parity.as_str())
        .with("k", idx.k)
        .with("beta", idx.beta)
        .with("xi", p.xi)
        .with("eta", p.eta)
        .with("nodes", rule.node_count())
        .with("quadrature_error", est.error * scale);
    Ok(VerificationReport::from_errors(
        "expansion/parabolic_from_cartesian",
        params,
        &[(lhs - rhs).norm()],
        tol,
    ))
}

/// Jacobi exponents of the parabolic-from-Cartesian integral in `u = cos α`
/// at β = 0: `sin^{−½}α` from Z and `1/sin α` from `dα` give `(1−u²)^{−¾}`;
/// the odd Cartesian function carries one more factor `sin α`.
pub fn cartesian_jacobi_exponent(parity: Parity) -> f64 {
    let z = -0.25;
    let jacobian = -0.5;
    let odd = if parity == Parity::Odd { 0.5 } else { 0.0 };
    z + jacobian + odd
}

/// The β = 0 case of [`verify_expansion_parabolic_from_cartesian`] by
/// `nodes`-point Gauss–Jacobi quadrature in `u = cos α`.
pub fn verify_expansion_parabolic_from_cartesian_jacobi(
    idx: &ParabolicIndex,
    p: PointParabolic,
    nodes: usize,
    tol: f64,
) -> Result<VerificationReport> {
    if idx.beta != 0.0 {
        return Err(Error::Contract(format!(
            "Gauss-Jacobi form needs beta = 0, got {}",
            idx.beta
        )));
    }
    parabolic_range(idx.k, p)?;
    let e = cartesian_jacobi_exponent(idx.parity);
    let (u, w) = crate::quadrature::gauss_jacobi(nodes, e, e)?;
    let lhs = psi_parabolic(idx, p)?;
    let xy = parabolic_to_xy(p);
    let mut sum = c0();
    for (&u, &w) in u.iter().zip(&w) {
        let s = (1.0 - u * u).sqrt();
        let alpha = -u.acos();
        let cart = psi_cartesian_parity(
            &AngleIndex {
                k: idx.k,
                alpha,
                parity: idx.parity,
            },
            xy,
        );
        let smooth = if idx.parity == Parity::Odd { cart / s } else { cart };
        sum += smooth * w;
    }
    let rhs = sum / (PI * idx.k).sqrt();
    let params = Params::new()
        .with("parity", idx.parity.as_str())
        .with("k", idx.k)
        .with("xi", p.xi)
        .with("eta", p.eta)
        .with("nodes", nodes)
        .with("jacobi_exponent", e);
    Ok(VerificationReport::from_errors(
        "expansion/parabolic_from_cartesian_jacobi",
        params,
        &[(lhs - rhs).norm()],
        tol,
    ))
}

fn ln_cosh(t: f64) -> f64 {
    let a = t.abs();
    a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
}

/// Local error target of the adaptive β-integrals.
pub const BETA_QUAD_TOL: f64 = 1e-9;

/// `Ψ_{km} = ∫ [W⁺* Ψ⁺_{kβ} + W⁻* Ψ⁻_{kβ}] dβ` over `|β| ≤ B`.
pub fn verify_inverse_polar_from_parabolic(
    idx: &PolarIndex,
    p: PointPolar,
    b: f64,
    tol: f64,
) -> Result<VerificationReport> {
    let pp = polar_to_parabolic(p);
    parabolic_range(idx.k, pp)?;
    let lhs = psi_polar(idx, p)?;
    let k = idx.k;
    let integrand = |beta: f64| -> Result<Vec<Complex64>> {
        let mut acc = c0();
        for parity in [Parity::Even, Parity::Odd] {
            let w = w_coeff_closed_form(&WCoeffQuery {
                parity,
                k,
                beta,
                m: idx.m,
            });
            acc += w.conj() * psi_parabolic(&ParabolicIndex { k, beta, parity }, pp)?;
        }
        Ok(vec![acc])
    };
    let tail = integrand(-b)?[0].norm().max(integrand(b)?[0].norm());
    let (v, qerr) = AdaptiveSimpson::new(k * FRAC_PI_4, BETA_QUAD_TOL).integrate(-b, b, integrand)?;
    let params = Params::new()
        .with("k", k)
        .with("m", idx.m)
        .with("r", p.r)
        .with("phi", p.phi)
        .with("beta_max", b)
        .with("tail_integrand", tail)
        .with("quadrature_error", qerr)
        .with("certifies", "completeness of W in beta");
    Ok(VerificationReport::from_errors(
        "expansion/polar_from_parabolic",
        params,
        &[(lhs - v[0]).norm()],
        tol,
    ))
}

/// The value of `∫ W±_{kβm} W±*_{kβm'} dβ`: `(δ_{mm'} ± δ_{m,−m'})/2`.
pub fn w_overlap(parity: Parity, m: i64, m2: i64) -> f64 {
    let same = if m == m2 { 1.0 } else { 0.0 };
    let mirror = if m == -m2 { 1.0 } else { 0.0 };
    match parity {
        Parity::Even => 0.5 * (same + mirror),
        Parity::Odd => 0.5 * (same - mirror),
    }
}

/// `∫ W±_{kβm} W±*_{kβm'} dβ` over `|β| ≤ B` against [`w_overlap`].
pub fn verify_w_orthogonality(k: f64, m: i64, m2: i64, parity: Parity, b: f64, tol: f64) -> Result<VerificationReport> {
    let q = |beta: f64, m: i64| WCoeffQuery::new(parity, k, beta, m);
    let f = |beta: f64| -> Result<Vec<Complex64>> {
        Ok(vec![
            w_coeff_closed_form(&q(beta, m)?) * w_coeff_closed_form(&q(beta, m2)?).conj(),
        ])
    };
    let tail = f(-b)?[0].norm().max(f(b)?[0].norm());
    let (v, qerr) = AdaptiveSimpson::new(k * FRAC_PI_4, BETA_QUAD_TOL).integrate(-b, b, f)?;
    let want = w_overlap(parity, m, m2);
    let params = Params::new()
        .with("parity", parity.as_str())
        .with("k", k)
        .with("m", m)
        .with("m2", m2)
        .with("expected", want)
        .with("beta_max", b)
        .with("tail_integrand", tail)
        .with("quadrature_error", qerr);
    let err = (v[0] - Complex64::new(want, 0.0)).norm();
    Ok(VerificationReport::from_errors("orthogonality/w", params, &[err], tol))
}

/// `(1/2π) ∫ |Γ(a+ix)|⁴ p_n p_n' dx = h_n δ_{nn'}` over `|x| ≤ x_max`,
/// error relative to `√(h_n h_n')`.
pub fn verify_hahn_orthogonality(n: u32, n2: u32, a: f64, x_max: f64, tol: f64) -> Result<VerificationReport> {
    if a != 0.25 && a != 0.75 {
        return Err(Error::Contract(format!(
            "Hahn orthogonality is checked for a = 1/4 or 3/4, got {a}"
        )));
    }
    let (h1, h2) = (symmetric_norm(n, a)?, symmetric_norm(n2, a)?);
    let scale = (h1 * h2).sqrt();
    let f = |x: f64| -> Result<Vec<Complex64>> {
        let p1 = continuous_hahn(&HahnParams::symmetric(n, x, a))?;
        let p2 = continuous_hahn(&HahnParams::symmetric(n2, x, a))?;
        Ok(vec![p1 * p2.conj() * (symmetric_weight(a, x)? / TAU)])
    };
    let tail = f(x_max)?[0].norm();
    let (v, qerr) = AdaptiveSimpson::new(0.5, 1e-3 * tol * scale).integrate(-x_max, x_max, f)?;
    let want = if n == n2 { h1 } else { 0.0 };
    let params = Params::new()
        .with("a", a)
        .with("n", n)
        .with("n2", n2)
        .with("norm", want)
        .with("x_max", x_max)
        .with("tail_integrand", tail)
        .with("quadrature_error", qerr);
    let err = (v[0] - Complex64::new(want, 0.0)).norm() / scale;
    Ok(VerificationReport::from_errors(
        "orthogonality/hahn",
        params,
        &[err],
        tol,
    ))
}

/// `∫_{−π}^{π} S±_{mα} S±*_{m'α} dα` by the trapezoid rule against the
/// closed form, over all `|m|, |m'| ≤ max_m`.
pub fn verify_s_overlap(parity: Parity, max_m: i64, tol: f64) -> Result<VerificationReport> {
    let nodes = 4 * max_m as usize + 16;
    let mut errs = Vec::new();
    for m in -max_m..=max_m {
        for m2 in -max_m..=max_m {
            let mut failure = None;
            let v = periodic_trapezoid(nodes, -PI, TAU, |a| {
                match (SCoeffQuery::new(parity, m, a), SCoeffQuery::new(parity, m2, a)) {
                    (Ok(q1), Ok(q2)) => s_coeff(&q1) * s_coeff(&q2).conj(),
                    (Err(e), _) | (_, Err(e)) => {
                        failure.get_or_insert(e);
                        c0()
                    }
                }
            });
            if let Some(e) = failure {
                return Err(e);
            }
            errs.push((v - Complex64::new(s_overlap(parity, m, m2), 0.0)).norm());
        }
    }
    let params = Params::new()
        .with("parity", parity.as_str())
        .with("max_m", max_m)
        .with("nodes", nodes);
    Ok(VerificationReport::from_errors("orthogonality/s", params, &errs, tol))
}

/// `Σ_{|m|≤M} W±_{kβm} S∓_{mα} = 0` for every truncation `M ≤ max_m`,
/// summing `m` and `−m` together.
pub fn verify_mixed_parity(k: f64, beta: f64, alpha: f64, max_m: i64, tol: f64) -> Result<VerificationReport> {
    let mut errs = Vec::new();
    for parity in [Parity::Even, Parity::Odd] {
        let term = |m: i64| -> Result<Complex64> {
            let w = w_coeff_closed_form(&WCoeffQuery::new(parity, k, beta, m)?);
            Ok(w * s_coeff(&SCoeffQuery::new(parity.other(), m, alpha)?))
        };
        let mut sum = term(0)?;
        errs.push(sum.norm());
        for m in 1..=max_m {
            sum += term(m)? + term(-m)?;
            errs.push(sum.norm());
        }
    }
    let params = Params::new()
        .with("k", k)
        .with("beta", beta)
        .with("alpha", alpha)
        .with("max_m", max_m);
    Ok(VerificationReport::from_errors("mixed_parity", params, &errs, tol))
}

/// Closed-form angular integrals against the trapezoid rule (exact here,
/// since the integrands are trigonometric polynomials of low degree), for
/// all `n + j ≤ max_deg`, `|m| ≤ max_m`, including the edge forms.
pub fn verify_angular_integrals(parity: Parity, max_deg: u32, max_m: i64, tol: f64) -> Result<VerificationReport> {
    let nodes = 2 * (max_deg as usize + max_m as usize) + 8;
    let mut errs = Vec::new();
    let mut zeros = 0usize;
    for n in 0..=max_deg {
        for j in 0..=max_deg - n {
            for m in -max_m..=max_m {
                let quad = periodic_trapezoid(nodes, 0.0, TAU, |t| {
                    let c = t.cos();
                    let base = (1.0 + c).powi(n as i32) * (1.0 - c).powi(j as i32);
                    let f = if parity == Parity::Odd { base * t.sin() } else { base };
                    Complex64::new(0.0, -(m as f64) * t).exp() * f
                });
                let exact = angular_integral_i(parity, n, j, m);
                errs.push((quad - exact).norm());
                if let Some(edge) = angular_integral_edge(parity, n, j, m) {
                    if edge == c0() {
                        zeros += 1;
                    }
                    errs.push((quad - edge).norm());
                }
            }
        }
    }
    let params = Params::new()
        .with("parity", parity.as_str())
        .with("max_deg", max_deg)
        .with("max_m", max_m)
        .with("nodes", nodes)
        .with("zero_cases", zeros);
    Ok(VerificationReport::from_errors("integral/angular", params, &errs, tol))
}

/// Both sides of Bailey's ₃F₂ transformation for random terminating
/// parameters, relative to `1 + |lhs|`.
pub fn verify_bailey(rng: &mut ChaCha8Rng, draws: usize, max_n: u32, tol: f64) -> Result<VerificationReport> {
    let mut errs = Vec::with_capacity(draws);
    for _ in 0..draws {
        let n = rng.gen_range(0..=max_n);
        let a = Complex64::new(rng.gen_range(0.1..3.0), rng.gen_range(-1.0..1.0));
        let a2 = Complex64::new(rng.gen_range(0.1..3.0), rng.gen_range(-1.0..1.0));
        // keep c off the integers so that 1 − n − c and (c)_n stay clear of zero
        let c = Complex64::new(rng.gen_range(0.15..0.85) + rng.gen_range(0..3) as f64, 0.0);
        let c2 = Complex64::new(rng.gen_range(0.1..3.0), 0.0);
        let (l, r) = bailey_sides(a, a2, c, c2, n)?;
        errs.push((l - r).norm() / (1.0 + l.norm()));
    }
    let params = Params::new().with("draws", draws).with("max_n", max_n);
    Ok(VerificationReport::from_errors("bailey", params, &errs, tol))
}

/// Pairwise agreement of every W route and the projection oracle over
/// `|m| ≤ max_m`, relative to `1 + |value|`.
pub fn verify_w_agreement(
    parity: Parity,
    k: f64,
    beta_over_k: f64,
    max_m: i64,
    projection_nodes: usize,
    tol: f64,
) -> Result<VerificationReport> {
    let mut errs = Vec::new();
    let mut radii = Vec::new();
    for m in -max_m..=max_m {
        let q = WCoeffQuery::new(parity, k, beta_over_k * k, m)?;
        let mut vals = Vec::with_capacity(5);
        for method in WMethod::ALL {
            vals.push(w_coeff(&q, method)?);
        }
        // 2kr stays within the ₁F₁ range of the parabolic functions
        let r = projection_radius(k, m, 1.0 / k, 0.5 * Z_MAX * 0.8 / k)
            .ok_or_else(|| Error::Node(format!("no projection radius for k={k}, m={m}")))?;
        radii.push(r);
        vals.push(w_projection_oracle(&q, r, projection_nodes)?);
        for i in 0..vals.len() {
            for j in i + 1..vals.len() {
                errs.push((vals[i] - vals[j]).norm() / (1.0 + vals[i].norm()));
            }
        }
    }
    let params = Params::new()
        .with("parity", parity.as_str())
        .with("k", k)
        .with("beta_over_k", beta_over_k)
        .with("max_m", max_m)
        .with("methods", "closed_form,hahn,three_f_two,integral,projection")
        .with("max_projection_radius", radii.iter().cloned().fold(0.0, f64::max));
    Ok(VerificationReport::from_errors("w_agreement", params, &errs, tol))
}

/// `Im W⁺ = 0` and `Re W⁻ = 0` for every route, relative to `1 + |value|`.
pub fn verify_w_symmetry(
    parity: Parity,
    k: f64,
    betas_over_k: &[f64],
    max_m: i64,
    tol: f64,
) -> Result<VerificationReport> {
    let mut errs = Vec::new();
    for &b in betas_over_k {
        for m in -max_m..=max_m {
            let q = WCoeffQuery::new(parity, k, b * k, m)?;
            for method in WMethod::ALL {
                let v = w_coeff(&q, method)?;
                let off = match parity {
                    Parity::Even => v.im,
                    Parity::Odd => v.re,
                };
                errs.push(off.abs() / (1.0 + v.norm()));
            }
        }
    }
    let params = Params::new()
        .with("parity", parity.as_str())
        .with("k", k)
        .with("betas_over_k", betas_over_k.to_vec())
        .with("max_m", max_m);
    Ok(VerificationReport::from_errors("w_symmetry", params, &errs, tol))
}

/// `∫₀^π sin^α φ e^{iβφ} dφ` in closed form against quadrature after
/// `cos φ = tanh τ`, which turns it into `∫ sech^{α+1}τ e^{iβφ(τ)} dτ`.
pub fn verify_sine_power(alpha: f64, betas: &[f64], tol: f64) -> Result<VerificationReport> {
    let rule = TanhLine::default();
    let mut errs = Vec::new();
    for &beta in betas {
        let exact = sine_power_integral(alpha, beta)?;
        let est = rule.integrate(|t| {
            let phi = 2.0 * (-t).exp().atan();
            Complex64::new(0.0, beta * phi).exp() * (-(alpha + 1.0) * ln_cosh(t)).exp()
        });
        errs.push((est.value - exact).norm());
    }
    let params = Params::new().with("alpha", alpha).with("betas", betas.to_vec());
    Ok(VerificationReport::from_errors(
        "integral/sine_power",
        params,
        &errs,
        tol,
    ))
}

/// Residuals of `op Ψ = λΨ` along the step ladder.
fn ladder(
    op: impl Fn(Field<'static>, f64) -> Field<'static>,
    f: &Field<'static>,
    lambda: Complex64,
    p: PointXY,
) -> Result<[f64; 3]> {
    let psi = f(p)?;
    let mut out = [0.0; 3];
    for (o, h) in out.iter_mut().zip(H_LADDER) {
        *o = (op(f.clone(), h)(p)? - psi * lambda).norm();
    }
    Ok(out)
}

/// Residuals below this are rounding noise; their ratio carries no order information.
pub const FD_NOISE_FLOOR: f64 = 1e-11;

fn fd_reports(name: &str, mut params: Params, res: [f64; 3], tol: f64, tol_ratio: f64) -> Vec<VerificationReport> {
    for (h, r) in H_LADDER.iter().zip(res) {
        params.push(&format!("residual_h{h:e}"), r);
    }
    let ratio = res[0] / res[1];
    let ratio_err = if res[0] < FD_NOISE_FLOOR {
        0.0
    } else {
        (ratio - 4.0).abs()
    };
    let mut rp = params.clone();
    rp.push("ratio", if res[0] < FD_NOISE_FLOOR { f64::NAN } else { ratio });
    vec![
        VerificationReport::from_errors(format!("operator/{name}"), params, &[res[2]], tol),
        VerificationReport::from_errors(format!("refinement/{name}"), rp, &[ratio_err], tol_ratio),
    ]
}

fn basis_params(basis: &Basis, p: PointXY) -> Params {
    let mut params = Params::new();
    let desc = match basis {
        Basis::Plane(i) => format!("plane k1={} k2={}", i.k1, i.k2),
        Basis::SingleParity(par, i) => format!("single_parity {par} k1={} k2={}", i.k1, i.k2),
        Basis::Cartesian(i) => format!("cartesian {} k={} alpha={}", i.parity, i.k, i.alpha),
        Basis::DoubleParity { kind, k1, k2 } => format!("double_parity {}/{} k1={k1} k2={k2}", kind.0, kind.1),
        Basis::Polar(i) => format!("polar k={} m={}", i.k, i.m),
        Basis::Parabolic(i) => format!("parabolic {} k={} beta={}", i.parity, i.k, i.beta),
        Basis::Miller { k, beta, sign } => format!("miller {sign:?} k={k} beta={beta}"),
    };
    params.push("basis", desc);
    params.push("x", p.x);
    params.push("y", p.y);
    params
}

/// Finite-difference check of `op Ψ = λΨ`: one report for the residual at the
/// finest step, one for the refinement ratio between the two coarsest steps
/// (error `|ratio − 4|`).
pub fn verify_operator_eigenvalue(
    tag: OperatorTag,
    basis: &Basis,
    p: PointXY,
    tol: f64,
    tol_ratio: f64,
) -> Result<Vec<VerificationReport>> {
    let lambda = tag
        .eigenvalue(basis)
        .ok_or_else(|| Error::Contract(format!("{basis:?} is not an eigenfunction of {tag}")))?;
    let f = basis_field(*basis);
    let res = ladder(|g, h| apply(tag, g, h), &f, lambda, p)?;
    let mut params = basis_params(basis, p);
    params.push("eigenvalue_re", lambda.re);
    params.push("eigenvalue_im", lambda.im);
    Ok(fd_reports(tag.as_str(), params, res, tol, tol_ratio))
}

/// Finite-difference check of `ΔΨ + k²Ψ = 0`.
pub fn verify_helmholtz(basis: &Basis, p: PointXY, tol: f64, tol_ratio: f64) -> Result<Vec<VerificationReport>> {
    let k = basis.wavenumber();
    let f = basis_field(*basis);
    let res = ladder(laplacian, &f, Complex64::new(-k * k, 0.0), p)?;
    Ok(fd_reports("helmholtz", basis_params(basis, p), res, tol, tol_ratio))
}

fn mismatch(a: Complex64, b: Complex64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).norm().max(f64::MIN_POSITIVE)
    }
}

/// Parity relations under `y → −y` (and `x → −x` for the double-parity set),
/// which must hold exactly. The error is zero only for equal values.
pub fn verify_parity_exactness(points: &[PointXY], tol: f64) -> Result<Vec<VerificationReport>> {
    let flip_y = |p: PointXY| PointXY::new(p.x, -p.y);
    let flip_x = |p: PointXY| PointXY::new(-p.x, p.y);
    let sgn = |par: Parity| if par == Parity::Even { 1.0 } else { -1.0 };
    let mut fams: Vec<(&str, Vec<f64>)> = Vec::new();

    let mut e = Vec::new();
    for par in [Parity::Even, Parity::Odd] {
        let idx = PlaneWaveIndex::new(0.8, -1.3)?;
        for &p in points {
            e.push(mismatch(
                psi_single_parity(par, &idx, flip_y(p)),
                psi_single_parity(par, &idx, p) * sgn(par),
            ));
        }
    }
    fams.push(("single_parity", e));

    let mut e = Vec::new();
    for par in [Parity::Even, Parity::Odd] {
        for alpha in [-2.5, 0.4, 1.9] {
            let idx = AngleIndex::new(1.4, alpha, par)?;
            let mirror = AngleIndex::new(1.4, -alpha, par)?;
            for &p in points {
                let v = psi_cartesian_parity(&idx, p);
                e.push(mismatch(psi_cartesian_parity(&idx, flip_y(p)), v * sgn(par)));
                e.push(mismatch(psi_cartesian_parity(&mirror, p), v));
            }
        }
    }
    fams.push(("cartesian", e));

    let mut e = Vec::new();
    for px in [Parity::Even, Parity::Odd] {
        for py in [Parity::Even, Parity::Odd] {
            for &p in points {
                let v = psi_cartesian_double_parity((px, py), 0.9, 1.7, p);
                let fx = psi_cartesian_double_parity((px, py), 0.9, 1.7, flip_x(p));
                let fy = psi_cartesian_double_parity((px, py), 0.9, 1.7, flip_y(p));
                e.push(mismatch(Complex64::new(fx, 0.0), Complex64::new(v * sgn(px), 0.0)));
                e.push(mismatch(Complex64::new(fy, 0.0), Complex64::new(v * sgn(py), 0.0)));
            }
        }
    }
    fams.push(("double_parity", e));

    let mut e = Vec::new();
    let mut em = Vec::new();
    for beta in [-1.5, 0.0, 2.0] {
        for par in [Parity::Even, Parity::Odd] {
            let idx = ParabolicIndex::new(1.1, beta, par)?;
            for &p in points {
                let (a, b) = (xy_to_parabolic(p)?, xy_to_parabolic(flip_y(p))?);
                e.push(mismatch(psi_parabolic(&idx, b)?, psi_parabolic(&idx, a)? * sgn(par)));
            }
        }
        for &p in points {
            let (a, b) = (xy_to_parabolic(p)?, xy_to_parabolic(flip_y(p))?);
            em.push(mismatch(
                psi_miller(1.1, beta, MillerSign::Plus, b)?,
                psi_miller(1.1, beta, MillerSign::Minus, a)?,
            ));
        }
    }
    fams.push(("parabolic", e));
    fams.push(("miller", em));

    Ok(fams
        .into_iter()
        .map(|(name, errs)| {
            let params = Params::new().with("points", points.len()).with("checks", errs.len());
            VerificationReport::from_errors(format!("parity/{name}"), params, &errs, tol)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pol(r: f64, phi: f64) -> PointPolar {
        PointPolar::new(r, phi).unwrap()
    }

    #[test]
    fn jacobi_anger_examples() {
        assert!(verify_jacobi_anger(1.0, 5.0, 3, 0.7, 512, 1e-10).unwrap().pass);
        assert!(verify_jacobi_anger(2.0, 10.0, -4, PI, 512, 1e-10).unwrap().pass);
        assert!(verify_jacobi_anger(1.0, 1e-12, 0, 0.0, 512, 1e-10).unwrap().pass);
        assert!(matches!(
            verify_jacobi_anger(1.0, 60.0, 0, 0.0, 512, 1e-10),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn cartesian_from_polar_examples() {
        let idx = AngleIndex::new(1.0, FRAC_PI_4, Parity::Even).unwrap();
        assert!(
            verify_expansion_cartesian_from_polar(&idx, pol(2.0, 1.0), 22, 1e-9)
                .unwrap()
                .pass
        );
        let idx = AngleIndex::new(1.3, -2.0, Parity::Odd).unwrap();
        assert!(
            verify_expansion_cartesian_from_polar(&idx, pol(3.0, PI), 24, 1e-9)
                .unwrap()
                .pass
        );
        let idx = AngleIndex::new(1.0, 0.0, Parity::Odd).unwrap();
        assert!(
            verify_expansion_cartesian_from_polar(&idx, pol(2.0, 0.3), 22, 1e-9)
                .unwrap()
                .pass
        );
        assert!(verify_expansion_cartesian_from_polar(&idx, pol(2.0, 0.3), 10, 1e-9).is_err());
    }

    #[test]
    fn parabolic_from_polar_examples() {
        let even = ParabolicIndex::new(1.0, 0.0, Parity::Even).unwrap();
        let r = verify_expansion_parabolic_from_polar(&even, pol(1.0, PI / 2.0), 80, 1e-6).unwrap();
        assert!(r.pass, "{r:?}");
        let odd = ParabolicIndex::new(1.0, 2.0, Parity::Odd).unwrap();
        assert!(
            verify_expansion_parabolic_from_polar(&odd, pol(1.5, 0.9), 80, 1e-6)
                .unwrap()
                .pass
        );
        let r = verify_expansion_parabolic_from_polar(&odd, pol(1.5, 0.0), 80, 1e-10).unwrap();
        assert!(r.pass);
        assert!(matches!(
            verify_expansion_parabolic_from_polar(&odd, pol(15.0, 0.9), 20, 1e-6),
            Err(Error::Convergence(_))
        ));
    }

    #[test]
    fn parabolic_from_cartesian_examples() {
        let even = ParabolicIndex::new(1.0, 0.0, Parity::Even).unwrap();
        let r = verify_expansion_parabolic_from_cartesian(&even, PointParabolic { xi: 1.0, eta: 0.5 }, 1e-6).unwrap();
        assert!(r.pass, "{r:?}");
        let odd = ParabolicIndex::new(1.0, 1.5, Parity::Odd).unwrap();
        let r = verify_expansion_parabolic_from_cartesian(&odd, PointParabolic { xi: 0.9, eta: 1.1 }, 1e-6).unwrap();
        assert!(r.pass, "{r:?}");
        let r = verify_expansion_parabolic_from_cartesian(&odd, PointParabolic { xi: 0.9, eta: 0.0 }, 1e-12).unwrap();
        assert!(r.pass);
    }

    #[test]
    fn jacobi_form_of_parabolic_from_cartesian() {
        assert_eq!(cartesian_jacobi_exponent(Parity::Even), -0.75);
        assert_eq!(cartesian_jacobi_exponent(Parity::Odd), -0.25);
        for parity in [Parity::Even, Parity::Odd] {
            let idx = ParabolicIndex::new(1.0, 0.0, parity).unwrap();
            let p = PointParabolic { xi: 1.0, eta: 0.5 };
            let r = verify_expansion_parabolic_from_cartesian_jacobi(&idx, p, 64, 1e-10).unwrap();
            assert!(r.pass, "{r:?}");
        }
        let idx = ParabolicIndex::new(1.0, 0.5, Parity::Even).unwrap();
        assert!(
            verify_expansion_parabolic_from_cartesian_jacobi(&idx, PointParabolic { xi: 1.0, eta: 0.5 }, 64, 1e-6)
                .is_err()
        );
    }

    #[test]
    fn inverse_examples() {
        let r =
            verify_inverse_polar_from_parabolic(&PolarIndex::new(1.0, 0).unwrap(), pol(1.0, 0.3), 40.0, 1e-5).unwrap();
        assert!(r.pass, "{r:?}");
        let r =
            verify_inverse_polar_from_parabolic(&PolarIndex::new(1.0, 2).unwrap(), pol(2.0, 2.0), 40.0, 1e-5).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn orthogonality_examples() {
        for (par, m, m2, want) in [
            (Parity::Even, 0, 1, 0.0),
            (Parity::Even, 2, 2, 0.5),
            (Parity::Even, 2, -2, 0.5),
            (Parity::Even, 0, 0, 1.0),
            (Parity::Odd, 1, -1, -0.5),
            (Parity::Odd, 0, 0, 0.0),
        ] {
            assert_eq!(w_overlap(par, m, m2), want);
            let r = verify_w_orthogonality(1.0, m, m2, par, 40.0, 1e-4).unwrap();
            assert!(r.pass, "{r:?}");
        }
        for (n, n2, a) in [(0, 1, 0.25), (0, 0, 0.25), (3, 3, 0.75), (2, 4, 0.75)] {
            let r = verify_hahn_orthogonality(n, n2, a, 30.0, 1e-6).unwrap();
            assert!(r.pass, "{r:?}");
        }
        for par in [Parity::Even, Parity::Odd] {
            assert!(verify_s_overlap(par, 5, 1e-14).unwrap().pass);
        }
        let r = verify_mixed_parity(1.2, 0.7, 2.1, 30, 0.0).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn operator_examples() {
        let p = PointXY::new(0.7, 0.4);
        let polar = Basis::Polar(PolarIndex::new(1.0, 3).unwrap());
        let r = verify_operator_eigenvalue(OperatorTag::XS, &polar, p, 1e-4, 0.5).unwrap();
        assert!(r.iter().all(|r| r.pass), "{r:?}");
        let cart = Basis::Cartesian(AngleIndex::new(1.0, 0.0, Parity::Even).unwrap());
        let r = verify_operator_eigenvalue(OperatorTag::XC, &cart, p, 1e-4, 0.5).unwrap();
        assert!(r.iter().all(|r| r.pass), "{r:?}");
        let par = Basis::Parabolic(ParabolicIndex::new(1.0, 1.2, Parity::Even).unwrap());
        let r = verify_operator_eigenvalue(OperatorTag::XP, &par, p, 1e-4, 0.5).unwrap();
        assert!(r.iter().all(|r| r.pass), "{r:?}");
        assert!(verify_operator_eigenvalue(OperatorTag::XP, &polar, p, 1e-4, 0.5).is_err());
        let r = verify_helmholtz(&par, p, 1e-4, 0.5).unwrap();
        assert!(r.iter().all(|r| r.pass), "{r:?}");
    }
}
