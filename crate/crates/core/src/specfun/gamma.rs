//! Log-gamma for complex arguments and a few real gamma helpers.

use crate::error::{Error, Result};
use crate::specfun::phase::sin_pi;
use num_complex::Complex64;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 607.0 / 128.0;

#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 15] = [
    0.999_999_999_999_997_091_82,
    57.156_235_665_862_923_517,
    -59.597_960_355_475_491_248,
    14.136_097_974_741_747_174,
    -0.491_913_816_097_620_199_78,
    0.339_946_499_848_118_886_99e-4,
    0.465_236_289_270_485_756_65e-4,
    -0.983_744_753_048_795_646_77e-4,
    0.158_088_703_224_912_488_84e-3,
    -0.210_264_441_724_104_883_19e-3,
    0.217_439_618_115_212_643_20e-3,
    -0.164_318_106_536_763_890_22e-3,
    0.844_182_239_838_527_432_93e-4,
    -0.261_908_384_015_814_086_70e-4,
    0.368_991_826_595_316_227_04e-5,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

fn lanczos_complex(z: Complex64) -> Complex64 {
    let mut a = Complex64::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += *c / (z + i as f64);
    }
    let t = z + (LANCZOS_G + 0.5);
    (z + 0.5) * t.ln() - t + HALF_LN_2PI + a.ln() - z.ln()
}

fn lanczos_real(x: f64) -> f64 {
    let mut a = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    (x + 0.5) * t.ln() - t + HALF_LN_2PI + a.ln() - x.ln()
}

/// Principal branch of log Γ(z), analytic off the negative real axis.
///
/// Arguments left of Re z = ½ are shifted right with
/// `ln Γ(z) = ln Γ(z + N) − Σ ln(z + j)`, which keeps the branch continuous.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Range(format!("ln_gamma({z})")));
    }
    if z.im == 0.0 && is_nonpositive_integer(z.re) {
        return Err(Error::Pole(format!("ln_gamma at {}", z.re)));
    }
    if z.re >= 0.5 {
        return Ok(lanczos_complex(z));
    }
    let shift = (0.5 - z.re).ceil() as usize;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..shift {
        acc += (z + j as f64).ln();
    }
    Ok(lanczos_complex(z + shift as f64) - acc)
}

/// `|Γ(a + ix)|²`.
pub fn abs_gamma_sq(a: f64, x: f64) -> Result<f64> {
    let lg = ln_gamma(Complex64::new(a, x))?;
    Ok((2.0 * lg.re).exp())
}

/// `ln |Γ(x)|` for real x that is not a pole.
pub fn ln_abs_gamma(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(format!("gamma at {x}")));
    }
    if x >= 0.5 {
        Ok(lanczos_real(x))
    } else {
        Ok((PI / sin_pi(x).abs()).ln() - lanczos_real(1.0 - x))
    }
}

/// Γ(x) for real x, using reflection left of ½.
pub fn gamma(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(format!("gamma at {x}")));
    }
    if x >= 0.5 {
        Ok(lanczos_real(x).exp())
    } else {
        Ok(PI / (sin_pi(x) * lanczos_real(1.0 - x).exp()))
    }
}

/// 1/Γ(x), zero at the poles of Γ.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x >= 0.5 {
        (-lanczos_real(x)).exp()
    } else {
        sin_pi(x) * lanczos_real(1.0 - x).exp() / PI
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Stirling series for ln Γ after shifting the argument to |z| ≥ 20.
    fn stirling(z: Complex64) -> Complex64 {
        let mut shift = Complex64::new(0.0, 0.0);
        let mut w = z;
        while w.norm() < 20.0 || w.re < 1.0 {
            shift += w.ln();
            w += 1.0;
        }
        let b = [
            1.0 / 12.0,
            -1.0 / 360.0,
            1.0 / 1260.0,
            -1.0 / 1680.0,
            1.0 / 1188.0,
            -691.0 / 360360.0,
            1.0 / 156.0,
        ];
        let inv = 1.0 / w;
        let inv2 = inv * inv;
        let mut corr = Complex64::new(0.0, 0.0);
        let mut p = inv;
        for c in b {
            corr += c * p;
            p *= inv2;
        }
        (w - 0.5) * w.ln() - w + HALF_LN_2PI + corr - shift
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * (1.0 + b.norm())
    }

    #[test]
    fn trivial_values() {
        let z = ln_gamma(Complex64::new(1.0, 0.0)).unwrap();
        assert!(z.norm() < 1e-15);
        let z = ln_gamma(Complex64::new(0.5, 0.0)).unwrap();
        assert!((z.re - PI.sqrt().ln()).abs() < 1e-15 && z.im == 0.0);
        assert!((abs_gamma_sq(0.5, 0.0).unwrap() - PI).abs() < 1e-14);
    }

    #[test]
    fn poles_are_rejected() {
        for x in [0.0, -1.0, -7.0] {
            assert!(matches!(ln_gamma(Complex64::new(x, 0.0)), Err(Error::Pole(_))));
            assert!(gamma(x).is_err());
            assert_eq!(rgamma(x), 0.0);
        }
        assert!(ln_gamma(Complex64::new(-1.0, 1e-9)).is_ok());
    }

    #[test]
    fn matches_high_precision_reference() {
        let cases = [
            ((0.25, 0.0), (1.2880225246980774, 0.0)),
            ((3.7, -2.1), (0.7853469580738224, -2.5830129251152623)),
            ((-4.3, 0.6), (-3.65677905298021, -14.157626471558586)),
            ((0.1, 45.0), (-71.28955820532497, 125.67064163401538)),
            ((-30.5, 12.0), (-109.96481003447985, -55.893972760193655)),
            ((25.0, -40.0), (29.84901881491575, -138.94757254800084)),
            ((0.5, -7.5), (-10.862033917757051, -7.617334003792769)),
            ((-0.75, 0.001), (1.5756951096612977, -3.1444867530255403)),
        ];
        for ((x, y), (u, v)) in cases {
            let got = ln_gamma(Complex64::new(x, y)).unwrap();
            let want = Complex64::new(u, v);
            assert!(close(got, want, 1e-13), "lnΓ({x}+{y}i) = {got}, want {want}");
        }
    }

    #[test]
    fn agrees_with_stirling_oracle_on_a_grid() {
        for i in -20..=20 {
            for j in -20..=20 {
                let z = Complex64::new(i as f64 * 2.37 + 0.013, j as f64 * 2.41);
                if z.norm() > 50.0 {
                    continue;
                }
                let got = ln_gamma(z).unwrap();
                let want = stirling(z);
                assert!(close(got, want, 1e-13), "z={z}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn quarter_gamma_values() {
        assert!((gamma(0.25).unwrap() - 3.625609908221908).abs() < 1e-14);
        assert!((gamma(0.75).unwrap() - 1.2254167024651776).abs() < 1e-14);
        assert!((abs_gamma_sq(0.25, 0.0).unwrap() - 13.145047206396).abs() < 1e-9);
    }

    #[test]
    fn half_line_modulus_reflection() {
        for i in -20..=20 {
            let x = i as f64 * 0.5;
            let v = abs_gamma_sq(0.5, x).unwrap() * (PI * x).cosh();
            assert!((v - PI).abs() < 1e-12 * PI, "x={x}: {v}");
        }
        assert!((abs_gamma_sq(0.5, 1.0).unwrap() - 0.271014951399418).abs() < 1e-15);
    }

    #[test]
    fn real_gamma_and_reciprocal() {
        assert!((gamma(5.0).unwrap() - 24.0).abs() < 1e-12);
        assert!((gamma(-0.5).unwrap() + 2.0 * PI.sqrt()).abs() < 1e-13);
        assert!((rgamma(-1.5) - 3.0 / (4.0 * PI.sqrt())).abs() < 1e-14);
        assert!((ln_abs_gamma(-2.5).unwrap() - (8.0 * PI.sqrt() / 15.0).ln()).abs() < 1e-13);
    }
}
