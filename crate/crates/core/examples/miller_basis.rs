use helmholtz2d::bases::{psi_miller, psi_parabolic, MillerSign, ParabolicIndex, Parity};
use helmholtz2d::geometry::{xy_to_parabolic, PointXY};

fn main() -> helmholtz2d::Result<()> {
    let (k, beta) = (1.0, 0.5);
    let even = ParabolicIndex::new(k, beta, Parity::Even)?;
    let odd = ParabolicIndex::new(k, beta, Parity::Odd)?;
    for (x, y) in [(1.0, 0.5), (-0.4, 2.0), (2.0, -1.5)] {
        let p = xy_to_parabolic(PointXY::new(x, y))?;
        let plus = psi_miller(k, beta, MillerSign::Plus, p)?;
        let minus = psi_miller(k, beta, MillerSign::Minus, p)?;
        let (e, o) = (psi_parabolic(&even, p)?, psi_parabolic(&odd, p)?);
        println!("({x:+}, {y:+}): Psi+ = {:+.10}  Psi- = {:+.10}", e.re, o.re);
        println!(
            "    Miller+ = {plus:.10}  Miller- = {minus:.10}  conj? {}",
            (plus - minus.conj()).norm() < 1e-14
        );
    }
    Ok(())
}
