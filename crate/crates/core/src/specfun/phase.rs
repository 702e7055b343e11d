//! Exact phases and sign helpers.

use num_complex::Complex64;

const I_POW: [Complex64; 4] = [
    Complex64::new(1.0, 0.0),
    Complex64::new(0.0, 1.0),
    Complex64::new(-1.0, 0.0),
    Complex64::new(0.0, -1.0),
];

/// `i^n` from a period-4 table.
pub fn i_pow(n: i64) -> Complex64 {
    I_POW[n.rem_euclid(4) as usize]
}

/// `(-i)^n` from a period-4 table.
pub fn neg_i_pow(n: i64) -> Complex64 {
    I_POW[(-n).rem_euclid(4) as usize]
}

/// `(-1)^n`.
pub fn minus_one_pow(n: i64) -> f64 {
    if n.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Sign with `sign(0) = 0`.
pub fn sign(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

pub fn sign_i(m: i64) -> f64 {
    m.signum() as f64
}

/// `sin(πx)`, exact at integers and half-integers.
pub fn sin_pi(x: f64) -> f64 {
    sin_cos_pi(x).0
}

/// `(sin(πx), cos(πx))`, exact at multiples of ½.
pub fn sin_cos_pi(x: f64) -> (f64, f64) {
    if !x.is_finite() {
        return (f64::NAN, f64::NAN);
    }
    // reduce to [-1, 1) then to a quarter turn
    let r = x - 2.0 * (x / 2.0).round();
    let q = (2.0 * r).round();
    let t = r - q / 2.0;
    let (s, c) = (std::f64::consts::PI * t).sin_cos();
    match (q as i64).rem_euclid(4) {
        0 => (s, c),
        1 => (c, -s),
        2 => (-s, -c),
        _ => (-c, s),
    }
}
