//! Finite-difference symmetry operators applied to their eigenfunctions.

use helmholtz2d::bases::*;
use helmholtz2d::geometry::PointXY;
use helmholtz2d::harness::fd::{apply, basis_field, H_LADDER};
use helmholtz2d::harness::OperatorTag;

fn main() -> helmholtz2d::Result<()> {
    let k = 1.2;
    let cases = [
        (OperatorTag::XS, Basis::Polar(PolarIndex::new(k, 3)?)),
        (OperatorTag::L3, Basis::Polar(PolarIndex::new(k, 3)?)),
        (OperatorTag::XC, Basis::Cartesian(AngleIndex::new(k, 0.4, Parity::Odd)?)),
        (OperatorTag::P1, Basis::Plane(PlaneWaveIndex::new(0.8, -0.3)?)),
        (
            OperatorTag::XP,
            Basis::Parabolic(ParabolicIndex::new(k, 0.7, Parity::Even)?),
        ),
    ];
    let p = PointXY::new(0.9, 0.4);
    for (tag, basis) in cases {
        let lambda = tag.eigenvalue(&basis).expect("eigenfunction");
        let f = basis_field(basis);
        let psi = f(p)?;
        print!("{tag:<4} lambda={lambda:.6}");
        for h in H_LADDER {
            let v = apply(tag, f.clone(), h)(p)?;
            print!("  h={h:e}: {:.2e}", (v - lambda * psi).norm());
        }
        println!();
    }
    Ok(())
}
