//! A polar wave rebuilt from parabolic waves by integrating over beta.

use helmholtz2d::bases::PolarIndex;
use helmholtz2d::geometry::PointPolar;
use helmholtz2d::harness::verify::verify_inverse_polar_from_parabolic;
use std::time::Instant;

fn main() -> helmholtz2d::Result<()> {
    let k = 1.0;
    let p = PointPolar::new(1.5, 0.9)?;
    for b in [10.0, 20.0, 40.0] {
        for m in [0, 1, -3] {
            let t = Instant::now();
            let r = verify_inverse_polar_from_parabolic(&PolarIndex::new(k, m)?, p, b, 1e-5)?;
            println!(
                "B={b:>4} m={m:+} error {:.2e} pass={} ({} ms)",
                r.max_abs_error,
                r.pass,
                t.elapsed().as_millis()
            );
        }
    }
    Ok(())
}
