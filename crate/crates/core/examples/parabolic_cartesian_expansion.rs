use helmholtz2d::bases::{ParabolicIndex, Parity};
use helmholtz2d::coeffs::{z_coeff, ZCoeffQuery};
use helmholtz2d::geometry::PointParabolic;
use helmholtz2d::harness::verify::{
    verify_expansion_parabolic_from_cartesian, verify_expansion_parabolic_from_cartesian_jacobi,
};
use std::f64::consts::PI;

fn main() -> helmholtz2d::Result<()> {
    let (k, beta) = (1.0, 0.8);
    for a in [PI / 6.0, PI / 3.0, PI / 2.0, 2.0 * PI / 3.0] {
        let z = z_coeff(&ZCoeffQuery::new(k, beta, a)?)?;
        println!("Z(|alpha|={a:.4}) = {z:.12}, |Z| = {:.12}", z.norm());
    }

    let p = PointParabolic::new(1.1, -0.6)?;
    for parity in [Parity::Even, Parity::Odd] {
        let r = verify_expansion_parabolic_from_cartesian(&ParabolicIndex::new(k, beta, parity)?, p, 1e-6)?;
        println!("{}", r.to_json_line());
        // at beta = 0 the angular integrand is a pure power at the endpoints
        let r = verify_expansion_parabolic_from_cartesian_jacobi(&ParabolicIndex::new(k, 0.0, parity)?, p, 64, 1e-6)?;
        println!("{}", r.to_json_line());
    }
    Ok(())
}
