//! Bessel, gamma, confluent and continuous Hahn values at a few points.

use helmholtz2d::quadrature::gauss_jacobi;
use helmholtz2d::specfun::{
    bessel_j_all, continuous_hahn, gamma, kummer_1f1, ln_gamma, sine_power_integral, HahnParams,
};
use helmholtz2d::Complex64;

fn main() -> helmholtz2d::Result<()> {
    let x = 7.5;
    for (m, j) in bessel_j_all(6, x)?.iter().enumerate() {
        println!("J_{m}({x}) = {j:+.16e}");
    }

    println!(
        "Gamma(0.5)^2 = {:.16} (pi = {:.16})",
        gamma(0.5)?.powi(2),
        std::f64::consts::PI
    );
    let z = Complex64::new(0.25, 3.0);
    println!("ln Gamma({z}) = {:.16}", ln_gamma(z)?);

    let f = kummer_1f1(Complex64::new(0.25, 0.4), 0.5, Complex64::new(0.0, 12.0))?;
    println!("1F1(1/4+0.4i; 1/2; 12i) = {f:.16}");

    for n in 0..4 {
        let p = continuous_hahn(&HahnParams::symmetric(n, 0.7, 0.25))?;
        println!("p_{n}(0.7; 1/4,1/4,1/4,1/4) = {p:.16}");
    }

    println!("int_0^pi sin^0.5 e^(2i phi) = {:.16}", sine_power_integral(0.5, 2.0)?);

    let (nodes, weights) = gauss_jacobi(6, -0.75, -0.75)?;
    for (t, w) in nodes.iter().zip(&weights) {
        println!("gauss-jacobi node {t:+.16} weight {w:.16}");
    }
    Ok(())
}
