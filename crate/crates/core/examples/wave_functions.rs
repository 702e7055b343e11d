//! Every basis evaluated at one point, plus the Laplacian check that it
//! solves the Helmholtz equation there.

use helmholtz2d::bases::*;
use helmholtz2d::geometry::PointXY;
use helmholtz2d::harness::verify::verify_helmholtz;

fn main() -> helmholtz2d::Result<()> {
    let k = 1.3;
    let bases = [
        Basis::Plane(PlaneWaveIndex::new(1.2, 0.5)?),
        Basis::SingleParity(Parity::Odd, PlaneWaveIndex::new(1.2, 0.5)?),
        Basis::Cartesian(AngleIndex::new(k, 0.8, Parity::Even)?),
        Basis::DoubleParity {
            kind: (Parity::Even, Parity::Odd),
            k1: 1.2,
            k2: 0.5,
        },
        Basis::Polar(PolarIndex::new(k, -2)?),
        Basis::Parabolic(ParabolicIndex::new(k, 0.9, Parity::Even)?),
        Basis::Parabolic(ParabolicIndex::new(k, 0.9, Parity::Odd)?),
        Basis::Miller {
            k,
            beta: 0.9,
            sign: MillerSign::Plus,
        },
    ];
    let p = PointXY::new(0.7, -1.1);
    for b in &bases {
        let v = b.eval_xy(p)?;
        let residual = verify_helmholtz(b, p, 1e-4, 0.5)?;
        println!("{b:?}\n    value {v:.12}, residual {:.2e}", residual[0].max_abs_error);
    }
    Ok(())
}
