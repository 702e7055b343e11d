//! W coefficients by every route, next to the projection of the parabolic
//! wave onto the circle.

use helmholtz2d::bases::Parity;
use helmholtz2d::coeffs::{projection_radius, w_coeff, w_projection_oracle, WCoeffQuery, WMethod};

fn main() -> helmholtz2d::Result<()> {
    let (k, beta) = (1.0, 1.4);
    for parity in [Parity::Even, Parity::Odd] {
        println!("{parity}:");
        for m in -3..=3 {
            let q = WCoeffQuery::new(parity, k, beta, m)?;
            let mut line = format!("  m={m:+}");
            for method in WMethod::ALL {
                let w = w_coeff(&q, method)?;
                line.push_str(&format!("  {method}={:+.12}{:+.12}i", w.re, w.im));
            }
            if let Some(r) = projection_radius(k, m, 2.0, 6.0) {
                let w = w_projection_oracle(&q, r, 256)?;
                line.push_str(&format!("  projection(r={r:.2})={:+.12}{:+.12}i", w.re, w.im));
            }
            println!("{line}");
        }
    }

    // the direct sums stop at |m| = 60, the recurrence keeps going
    let q = WCoeffQuery::new(Parity::Even, k, beta, 200)?;
    println!("m=200 closed_form = {:.12}", w_coeff(&q, WMethod::ClosedForm)?);
    println!("m=200 hahn: {}", w_coeff(&q, WMethod::Hahn).unwrap_err());
    Ok(())
}
