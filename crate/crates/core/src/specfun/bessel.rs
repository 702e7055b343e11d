//! Bessel functions of the first kind, integer order.
//!
//! Small arguments use the ascending series summed in double-double; larger
//! arguments use Miller's downward recurrence normalised with
//! `J0 + 2 Σ J_2k = 1`.

use crate::error::{Error, Result};
use crate::specfun::dd::Dd;

pub const MAX_ORDER: u32 = 200;
pub const MAX_ARG: f64 = 1e4;
const SERIES_LIMIT: f64 = 12.0;

fn check(m: u32, x: f64) -> Result<()> {
    if m > MAX_ORDER || !(0.0..=MAX_ARG).contains(&x) {
        return Err(Error::Range(format!(
            "bessel_j(m={m}, x={x}) outside m <= {MAX_ORDER}, 0 <= x <= {MAX_ARG}"
        )));
    }
    Ok(())
}

fn series(m: u32, x: f64) -> f64 {
    let half = x / 2.0;
    let mut pre = 1.0;
    for i in 1..=m {
        pre *= half / i as f64;
    }
    if pre == 0.0 {
        return 0.0;
    }
    let q = -half * half;
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    for k in 1..200u32 {
        term = term.mul_f64(q).div_f64(k as f64 * (m + k) as f64);
        sum = sum + term;
        if term.hi.abs() < 1e-34 * sum.hi.abs() {
            break;
        }
    }
    sum.to_f64() * pre
}

fn miller(max_m: u32, x: f64) -> Vec<f64> {
    let top = (max_m as f64).max(x);
    let mut start = (top + 30.0 + (160.0 * top).sqrt()) as usize;
    start += start % 2;
    let mut out = vec![0.0; max_m as usize + 1];
    let mut next = 0.0f64;
    let mut cur = 1e-300f64;
    let mut norm = 0.0f64;
    let two_over_x = 2.0 / x;
    for n in (1..=start).rev() {
        // cur holds J_n, next holds J_{n+1}
        if n <= max_m as usize {
            out[n] = cur;
        }
        if n % 2 == 0 {
            norm += 2.0 * cur;
        }
        let prev = n as f64 * two_over_x * cur - next;
        next = cur;
        cur = prev;
        if cur.abs() > 1e250 {
            let s = 1e-250;
            cur *= s;
            next *= s;
            norm *= s;
            for v in out.iter_mut() {
                *v *= s;
            }
        }
    }
    out[0] = cur;
    norm += cur;
    for v in out.iter_mut() {
        *v /= norm;
    }
    out
}

/// J_m(x) for integer order `0 <= m <= 200` and `0 <= x <= 1e4`.
pub fn bessel_j(m: u32, x: f64) -> Result<f64> {
    check(m, x)?;
    if x == 0.0 {
        return Ok(if m == 0 { 1.0 } else { 0.0 });
    }
    if x <= SERIES_LIMIT {
        return Ok(series(m, x));
    }
    Ok(miller(m, x)[m as usize])
}

/// J_0(x), …, J_max_m(x) in one pass.
pub fn bessel_j_all(max_m: u32, x: f64) -> Result<Vec<f64>> {
    check(max_m, x)?;
    if x == 0.0 {
        let mut v = vec![0.0; max_m as usize + 1];
        v[0] = 1.0;
        return Ok(v);
    }
    if x <= SERIES_LIMIT {
        return Ok((0..=max_m).map(|m| series(m, x)).collect());
    }
    Ok(miller(max_m, x))
}

/// J_m(x) for signed order, using J_{-m} = (-1)^m J_m.
pub fn bessel_j_signed(m: i64, x: f64) -> Result<f64> {
    let n = u32::try_from(m.unsigned_abs()).map_err(|_| Error::Range(format!("bessel order {m}")))?;
    let v = bessel_j(n, x)?;
    Ok(if m < 0 && n % 2 == 1 { -v } else { v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    // J_m(x) = (1/2π) ∫ cos(mτ − x sin τ) dτ over a period; the trapezoid
    // rule is spectrally accurate for this periodic integrand.
    fn integral_oracle(m: u32, x: f64) -> f64 {
        let n = 4096;
        let h = 2.0 * PI / n as f64;
        let s: f64 = (0..n)
            .map(|i| {
                let t = i as f64 * h;
                (m as f64 * t - x * t.sin()).cos()
            })
            .sum();
        s / n as f64
    }

    #[test]
    fn values_at_zero() {
        assert_eq!(bessel_j(0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(1, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn first_zero_of_j0() {
        assert!(bessel_j(0, 2.404825557695773).unwrap().abs() < 1e-12);
    }

    #[test]
    fn high_precision_reference_values() {
        let cases = [
            (0, 1e4, -0.0070961603533888015),
            (50, 100.0, -0.038698339728525384),
            (3, 12.5, 0.11000813631434926),
            (10, 12.0, 0.3004760352712693),
            (0, 12.0, 0.047689310796833535),
            (1, 30.5, -0.14349430015097095),
            (200, 150.0, 8.057702198396854e-14),
            (7, 0.3, 3.380544310218747e-10),
            (25, 20.0, 0.009781165792570046),
        ];
        for (m, x, want) in cases {
            let got = bessel_j(m, x).unwrap();
            let tol = if x > 100.0 { 1e-11 } else { 1e-13 };
            assert!((got - want).abs() < tol, "J{m}({x}) = {got}, want {want}");
        }
    }

    #[test]
    fn agrees_with_integral_oracle() {
        for m in [0u32, 1, 2, 5, 13, 30, 50] {
            for x in [0.5, 3.0, 11.9, 12.1, 25.0, 60.0, 99.0] {
                let got = bessel_j(m, x).unwrap();
                let want = integral_oracle(m, x);
                assert!((got - want).abs() < 1e-12, "J{m}({x}): {got} vs {want}");
            }
        }
    }

    #[test]
    fn sequence_matches_single_values() {
        for x in [0.7, 12.0, 40.0] {
            let all = bessel_j_all(40, x).unwrap();
            for (m, v) in all.iter().enumerate() {
                assert!((v - bessel_j(m as u32, x).unwrap()).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn out_of_range_is_rejected() {
        assert!(matches!(bessel_j(201, 1.0), Err(Error::Range(_))));
        assert!(matches!(bessel_j(0, 1e4 + 1.0), Err(Error::Range(_))));
        assert!(matches!(bessel_j(0, -1.0), Err(Error::Range(_))));
    }

    #[test]
    fn negative_order_reflection() {
        let x = 3.3;
        assert_eq!(bessel_j_signed(-3, x).unwrap(), -bessel_j(3, x).unwrap());
        assert_eq!(bessel_j_signed(-4, x).unwrap(), bessel_j(4, x).unwrap());
    }
}
