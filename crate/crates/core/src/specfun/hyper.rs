//! Confluent ₁F₁ on the imaginary axis and terminating ₃F₂ at unit argument.

use crate::error::{Error, Result};
use crate::specfun::dd::{CDd, Dd};
use num_complex::Complex64;

/// Largest |z| accepted by [`kummer_1f1`].
pub const Z_MAX: f64 = 50.0;

const MAX_TERMS: usize = 4000;

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// Kummer's ₁F₁(a; b; z) by its power series, accumulated in double-double.
///
/// Built for the purely imaginary arguments of the parabolic basis; any
/// `|z| <= Z_MAX` is accepted, but accuracy is only characterised on the
/// imaginary axis.
pub fn kummer_1f1(a: Complex64, b: f64, z: Complex64) -> Result<Complex64> {
    if !(b.is_finite() && a.re.is_finite() && a.im.is_finite()) {
        return Err(Error::Range(format!("1F1 parameters a={a}, b={b}")));
    }
    if b <= 0.0 && b == b.round() {
        return Err(Error::Pole(format!("1F1 lower parameter b={b}")));
    }
    let az = z.norm();
    if !az.is_finite() || az > Z_MAX {
        return Err(Error::Range(format!("1F1 argument |z|={az} exceeds {Z_MAX}")));
    }
    if az == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let zd = CDd::from_c64(z);
    let ad = CDd::from_c64(a);
    let bd = Dd::from_f64(b);
    let mut term = CDd::ONE;
    let mut sum = CDd::ONE;
    let settle = a.norm() + az;
    let mut quiet = 0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let num = ad.add_real(nf) * zd;
        let den = (bd + Dd::from_f64(nf)).mul_f64(nf + 1.0);
        term = (term * num).div_real(den);
        sum = sum + term;
        if term.re.hi == 0.0 && term.im.hi == 0.0 {
            return Ok(sum.to_c64());
        }
        if nf > settle && term.approx_abs() < 1e-33 * sum.approx_abs() {
            quiet += 1;
            if quiet == 2 {
                return Ok(sum.to_c64());
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::Convergence(format!("1F1({a}; {b}; {z})")))
}

/// Parameters of a terminating ₃F₂(a1, a2, a3; b1, b2; 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyp3F2Params {
    pub a: [Complex64; 3],
    pub b: [Complex64; 2],
}

impl Hyp3F2Params {
    pub fn new(a: [Complex64; 3], b: [Complex64; 2]) -> Self {
        Hyp3F2Params { a, b }
    }

    /// Number of terms minus one: the termination index `n` of the upper
    /// parameter `-n` closest to zero.
    pub fn termination_index(&self) -> Result<u32> {
        let n = self
            .a
            .iter()
            .filter(|z| is_nonpositive_integer(**z))
            .map(|z| (-z.re) as u32)
            .min()
            .ok_or_else(|| Error::Contract("3F2 needs an upper parameter equal to -n, n >= 0".into()))?;
        for b in &self.b {
            if is_nonpositive_integer(*b) && -b.re <= n as f64 {
                return Err(Error::Contract(format!(
                    "3F2 lower parameter {b} vanishes within the {} terms",
                    n + 1
                )));
            }
        }
        Ok(n)
    }
}

/// The terminating sum in double-double, before rounding.
pub(crate) fn hyp3f2_dd(p: &Hyp3F2Params) -> Result<CDd> {
    let n = p.termination_index()?;
    let a = p.a.map(CDd::from_c64);
    let b = p.b.map(CDd::from_c64);
    let mut term = CDd::ONE;
    let mut sum = CDd::ONE;
    for j in 0..n {
        let jf = j as f64;
        let num = a[0].add_real(jf) * a[1].add_real(jf) * a[2].add_real(jf);
        let den = (b[0].add_real(jf) * b[1].add_real(jf)).scale(Dd::from_f64(jf + 1.0));
        term = term * num / den;
        sum = sum + term;
    }
    Ok(sum)
}

/// Terminating ₃F₂ at unit argument, summed term by term with Pochhammer
/// ratios.
pub fn hyp3f2_terminating(p: &Hyp3F2Params) -> Result<Complex64> {
    Ok(hyp3f2_dd(p)?.to_c64())
}

/// Both sides of Bailey's transformation
/// `₃F₂(a, a', −n; c', 1−n−c; 1) = (c+a)ₙ/(c)ₙ · ₃F₂(a, c'−a', −n; c', c+a; 1)`.
pub fn bailey_sides(
    a: Complex64,
    a2: Complex64,
    c: Complex64,
    c2: Complex64,
    n: u32,
) -> Result<(Complex64, Complex64)> {
    let mn = Complex64::new(-(n as f64), 0.0);
    let lhs = hyp3f2_dd(&Hyp3F2Params::new([a, a2, mn], [c2, 1.0 - n as f64 - c]))?;
    let rhs = hyp3f2_dd(&Hyp3F2Params::new([a, c2 - a2, mn], [c2, c + a]))?;
    let (ca, cc) = (CDd::from_c64(c + a), CDd::from_c64(c));
    let mut ratio = CDd::ONE;
    for j in 0..n {
        ratio = ratio * ca.add_real(j as f64) / cc.add_real(j as f64);
    }
    let rhs = (ratio * rhs).to_c64();
    if !rhs.re.is_finite() || !rhs.im.is_finite() {
        return Err(Error::Contract(format!("Bailey ratio (c)_n vanishes for c={c}, n={n}")));
    }
    Ok((lhs.to_c64(), rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm().max(1e-300)
    }

    #[test]
    fn zero_argument_and_exponential_case() {
        assert_eq!(kummer_1f1(c(0.25, 3.0), 0.5, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        let v = kummer_1f1(c(0.5, 0.0), 0.5, c(0.0, 1.0)).unwrap();
        assert!(rel(v, c(1f64.cos(), 1f64.sin())) < 1e-15);
    }

    #[test]
    fn exponential_identity_across_the_range() {
        for i in 0..=100 {
            let t = -50.0 + i as f64;
            for a in [0.25, 0.75, 1.5] {
                let w = kummer_1f1(c(a, 0.0), a, c(0.0, t)).unwrap();
                assert!(rel(w, c(t.cos(), t.sin())) < 1e-10, "a={a} t={t}: {w}");
            }
        }
    }

    #[test]
    fn high_precision_reference_values() {
        let cases = [
            ((0.25, 0.0), 0.5, (0.0, 2.0), (0.37268247860155695, 0.5804185710176001)),
            (
                (0.25, 0.7),
                0.5,
                (0.0, 30.0),
                (-0.34722177115225966, 0.29721954475810214),
            ),
            ((0.75, -1.5), 1.5, (0.0, 45.0), (3.186484934340012, 1.7775861630411376)),
            (
                (0.25, 10.0),
                0.5,
                (0.0, 20.0),
                (-0.4541805540896392, -0.29447287986538495),
            ),
            (
                (0.25, -20.0),
                0.5,
                (0.0, 40.0),
                (5.15514705003845e21, 1.1532893642081413e22),
            ),
            (
                (0.75, 3.0),
                1.5,
                (0.0, 50.0),
                (-0.023877516888187473, 0.0031882790386757176),
            ),
            (
                (0.25, 0.35),
                0.5,
                (0.0, 50.0),
                (-0.11143467981045262, 0.014879472412685023),
            ),
            (
                (0.75, 0.1),
                1.5,
                (0.0, -12.5),
                (-0.004030126970454266, -0.0001337901178674911),
            ),
        ];
        for ((ar, ai), b, (zr, zi), (wr, wi)) in cases {
            let got = kummer_1f1(c(ar, ai), b, c(zr, zi)).unwrap();
            let want = c(wr, wi);
            assert!(rel(got, want) < 1e-10, "1F1({ar}+{ai}i;{b};{zi}i) = {got}, want {want}");
        }
    }

    #[test]
    fn range_and_pole_errors() {
        assert!(matches!(
            kummer_1f1(c(0.25, 0.0), 0.5, c(0.0, 50.5)),
            Err(Error::Range(_))
        ));
        assert!(matches!(
            kummer_1f1(c(0.25, 0.0), -2.0, c(0.0, 1.0)),
            Err(Error::Pole(_))
        ));
        assert!(matches!(
            kummer_1f1(c(0.25, 0.0), 0.0, c(0.0, 1.0)),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn terminating_polynomial_case() {
        // 1F1(-2; b; z) = 1 - 2z/b + z²/(b(b+1))
        let z = c(0.0, 3.0);
        let b = 0.5;
        let want = c(1.0, 0.0) - 2.0 * z / b + z * z / (b * (b + 1.0));
        let got = kummer_1f1(c(-2.0, 0.0), b, z).unwrap();
        assert!(rel(got, want) < 1e-15);
    }

    #[test]
    fn three_f_two_small_cases() {
        let one = Hyp3F2Params::new([c(0.0, 0.0), c(1.0, 0.0), c(0.3, 0.2)], [c(0.5, 0.0), c(0.5, 0.0)]);
        assert_eq!(hyp3f2_terminating(&one).unwrap(), c(1.0, 0.0));
        for x in [-2.0, -0.3, 0.0, 0.7, 4.5] {
            let p = Hyp3F2Params::new([c(-1.0, 0.0), c(1.0, 0.0), c(0.25, x)], [c(0.5, 0.0), c(0.5, 0.0)]);
            let got = hyp3f2_terminating(&p).unwrap();
            assert!((got - c(0.0, -4.0 * x)).norm() < 1e-15, "x={x}: {got}");
        }
    }

    #[test]
    fn three_f_two_contract_violations() {
        let none = Hyp3F2Params::new([c(0.5, 0.0), c(1.0, 0.0), c(0.3, 0.2)], [c(0.5, 0.0), c(0.5, 0.0)]);
        assert!(matches!(hyp3f2_terminating(&none), Err(Error::Contract(_))));
        let bad_b = Hyp3F2Params::new([c(-3.0, 0.0), c(1.0, 0.0), c(0.3, 0.0)], [c(-1.0, 0.0), c(0.5, 0.0)]);
        assert!(matches!(hyp3f2_terminating(&bad_b), Err(Error::Contract(_))));
        let ok_b = Hyp3F2Params::new([c(-3.0, 0.0), c(1.0, 0.0), c(0.3, 0.0)], [c(-4.0, 0.0), c(0.5, 0.0)]);
        assert!(hyp3f2_terminating(&ok_b).is_ok());
    }

    #[test]
    fn bailey_example() {
        let a = c(0.25, 0.3);
        let (lhs, rhs) = bailey_sides(a, c(0.25, -0.3), c(0.25, -0.3), c(0.5, 0.0), 5).unwrap();
        assert!(rel(lhs, rhs) < 1e-13, "{lhs} vs {rhs}");
        let (lhs, rhs) = bailey_sides(c(0.25, 0.7), c(-4.5, 0.0), c(0.25, -0.7), c(0.5, 0.0), 5).unwrap();
        assert!(rel(lhs, rhs) < 1e-13, "{lhs} vs {rhs}");
    }

    #[test]
    fn three_f_two_against_saalschutz() {
        // Balanced case: 3F2(-n, a, b; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)
        let poch = |x: Complex64, n: u32| (0..n).fold(c(1.0, 0.0), |p, j| p * (x + j as f64));
        for n in 0..8u32 {
            let (a, b, cc) = (c(0.3, 0.4), c(1.1, -0.2), c(2.7, 0.1));
            let b2 = c(1.0, 0.0) + a + b - cc - n as f64;
            let p = Hyp3F2Params::new([c(-(n as f64), 0.0), a, b], [cc, b2]);
            let got = hyp3f2_terminating(&p).unwrap();
            let want = poch(cc - a, n) * poch(cc - b, n) / (poch(cc, n) * poch(cc - a - b, n));
            assert!(rel(got, want) < 1e-13, "n={n}: {got} vs {want}");
        }
    }
}
