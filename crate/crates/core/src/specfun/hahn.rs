//! Continuous Hahn polynomials p_n(x; a, b, c, d).

use crate::error::{Error, Result};
use crate::specfun::dd::{CDd, Dd};
use crate::specfun::gamma::{abs_gamma_sq, ln_abs_gamma};
use crate::specfun::hyper::{hyp3f2_dd, Hyp3F2Params};
use crate::specfun::phase::i_pow;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HahnParams {
    pub n: u32,
    pub x: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl HahnParams {
    pub fn new(n: u32, x: f64, a: f64, b: f64, c: f64, d: f64) -> Self {
        HahnParams { n, x, a, b, c, d }
    }

    /// All four parameters equal to `a`.
    pub fn symmetric(n: u32, x: f64, a: f64) -> Self {
        HahnParams::new(n, x, a, a, a, a)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.a + self.c > 0.0 && self.a + self.d > 0.0) {
            return Err(Error::Contract(format!(
                "continuous Hahn needs a+c > 0 and a+d > 0 (a={}, c={}, d={})",
                self.a, self.c, self.d
            )));
        }
        Ok(())
    }
}

/// p_n(x; a, b, c, d) = iⁿ (a+c)ₙ (a+d)ₙ / n! · ₃F₂(−n, n+a+b+c+d−1, a+ix; a+c, a+d; 1).
pub fn continuous_hahn(p: &HahnParams) -> Result<Complex64> {
    p.validate()?;
    let s = p.a + p.b + p.c + p.d;
    let params = Hyp3F2Params::new(
        [
            Complex64::new(-(p.n as f64), 0.0),
            Complex64::new(p.n as f64 + s - 1.0, 0.0),
            Complex64::new(p.a, p.x),
        ],
        [Complex64::new(p.a + p.c, 0.0), Complex64::new(p.a + p.d, 0.0)],
    );
    let f = hyp3f2_dd(&params)?;
    let mut pre = Dd::ONE;
    for j in 0..p.n {
        let jf = j as f64;
        pre = (pre * Dd::from_f64(p.a + p.c + jf))
            .mul_f64(p.a + p.d + jf)
            .div_f64(jf + 1.0);
    }
    let phase = CDd::from_c64(i_pow(p.n as i64));
    Ok((phase * f.scale(pre)).to_c64())
}

/// `(−i)ⁿ ₃F₂(−n, n+4a−1, a+ix; 2a, 2a; 1)`, which is real, evaluated by the
/// three-term recurrence of the symmetric polynomials.
///
/// Stable for large `n` where the direct sum loses digits to cancellation.
/// Relates to the polynomial through `p_n(x; a,a,a,a) = (−1)ⁿ (2a)ₙ² / n! · g_n`.
pub fn symmetric_hahn_3f2(n: u32, a: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let s = 4.0 * a;
    let mut prev = 1.0;
    let mut cur = -x / a;
    for k in 1..n {
        let kf = k as f64;
        let up = -(kf + s - 1.0) * (kf + 2.0 * a).powi(2) / ((2.0 * kf + s - 1.0) * (2.0 * kf + s));
        let down = kf * (kf + 2.0 * a - 1.0).powi(2) / ((2.0 * kf + s - 2.0) * (2.0 * kf + s - 1.0));
        let next = (x * cur + down * prev) / up;
        prev = cur;
        cur = next;
    }
    cur
}

/// Weight of the symmetric family: |Γ(a+ix)|⁴.
pub fn symmetric_weight(a: f64, x: f64) -> Result<f64> {
    let g = abs_gamma_sq(a, x)?;
    Ok(g * g)
}

/// h_n in `(1/2π) ∫ |Γ(a+ix)|⁴ p_n p_n' dx = h_n δ_{nn'}` for all parameters equal to `a`:
/// `Γ(n+2a)⁴ / ((2n+4a−1) Γ(n+4a−1) n!)`.
pub fn symmetric_norm(n: u32, a: f64) -> Result<f64> {
    let s = 4.0 * a;
    let nf = n as f64;
    // (2n+s−1)Γ(n+s−1) written as (2n+s−1)/(n+s−1)·Γ(n+s), whose n = 0 limit is Γ(s)
    let ratio = if n == 0 {
        1.0
    } else {
        (2.0 * nf + s - 1.0) / (nf + s - 1.0)
    };
    let ln = 4.0 * ln_abs_gamma(nf + 2.0 * a)? - ln_abs_gamma(nf + s)? - ln_abs_gamma(nf + 1.0)?;
    Ok(ln.exp() / ratio)
}
