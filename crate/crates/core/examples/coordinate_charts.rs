use helmholtz2d::geometry::*;

fn main() -> helmholtz2d::Result<()> {
    let points = [
        PointXY::new(1.0, 2.0),
        PointXY::new(-3.0, 0.0),
        PointXY::new(-1.0, -1e-12),
        PointXY::new(0.0, -4.0),
    ];
    println!(
        "{:>10} {:>10} | {:>10} {:>10} | {:>10} {:>10} | round trip error",
        "x", "y", "r", "phi", "xi", "eta"
    );
    for p in points {
        let pol = xy_to_polar(p)?;
        let par = xy_to_parabolic(p)?;
        let back = parabolic_to_xy(par);
        let err = (back.x - p.x).hypot(back.y - p.y);
        println!(
            "{:>10.4} {:>10.4} | {:>10.4} {:>10.4} | {:>10.4} {:>10.4} | {err:.1e}",
            p.x, p.y, pol.r, pol.phi, par.xi, par.eta
        );
    }

    // polar input goes straight to parabolic without the Cartesian detour
    let pol = PointPolar::new(2.0, 3.0)?;
    println!("{:?} -> {:?}", pol, polar_to_parabolic(pol));
    println!("origin: {:?}", xy_to_parabolic(PointXY::new(0.0, 0.0)).unwrap_err());
    Ok(())
}
