//! A Cartesian parity wave summed from polar waves, weighted by conjugated S coefficients.

use helmholtz2d::bases::{psi_cartesian_parity, psi_polar, AngleIndex, Parity, PolarIndex};
use helmholtz2d::coeffs::{s_coeff, SCoeffQuery};
use helmholtz2d::geometry::{polar_to_xy, PointPolar};
use helmholtz2d::harness::verify::verify_expansion_cartesian_from_polar;
use helmholtz2d::Complex64;

fn main() -> helmholtz2d::Result<()> {
    let (k, alpha) = (2.0, 0.6);
    let p = PointPolar::new(3.0, 2.2)?;
    for parity in [Parity::Even, Parity::Odd] {
        let idx = AngleIndex::new(k, alpha, parity)?;
        let exact = psi_cartesian_parity(&idx, polar_to_xy(p));
        for terms in [4, 8, 16, 32] {
            let mut sum = Complex64::new(0.0, 0.0);
            for m in -terms..=terms {
                let s = s_coeff(&SCoeffQuery::new(parity, m, alpha)?).conj();
                sum += s * psi_polar(&PolarIndex::new(k, m)?, p)?;
            }
            println!("{parity} |m| <= {terms:>2}: error {:.2e}", (sum - exact).norm());
        }
        let r = verify_expansion_cartesian_from_polar(&idx, p, 40, 1e-9)?;
        println!("{}", r.to_json_line());
    }
    Ok(())
}
