//! Runs a suite with a custom configuration and summarises by identity family.

use helmholtz2d::harness::{run_suite, Suite, SuiteConfig};
use std::collections::BTreeMap;

fn main() -> helmholtz2d::Result<()> {
    let suite: Suite = std::env::args().nth(1).as_deref().unwrap_or("integrals").parse()?;
    let cfg = SuiteConfig::parse("seed = 7\nbailey_draws = 200\n")?;
    let reports = run_suite(suite, &cfg);

    let mut families: BTreeMap<&str, (usize, usize, f64)> = BTreeMap::new();
    for r in &reports {
        let fam = r.identity_name.split('/').next().unwrap_or(&r.identity_name);
        let e = families.entry(fam).or_default();
        e.0 += 1;
        e.1 += usize::from(r.pass);
        e.2 = e.2.max(r.max_abs_error / r.tolerance.max(f64::MIN_POSITIVE));
    }
    for (fam, (n, ok, worst)) in families {
        println!("{fam:<16} {ok:>4}/{n:<4} worst error/tolerance {worst:.2e}");
    }
    Ok(())
}
