//! The verification suites. Parameters are drawn up front from a seeded
//! generator, then checks run in parallel and are reported in a fixed order.

use super::config::SuiteConfig;
use super::fd::OperatorTag;
use super::report::{timed, Params, VerificationReport};
use super::verify::*;
use crate::bases::{AngleIndex, Basis, MillerSign, ParabolicIndex, Parity, PlaneWaveIndex, PolarIndex};
use crate::error::{Error, Result};
use crate::geometry::{PointParabolic, PointPolar, PointXY};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    JacobiAnger,
    Expansions,
    Orthogonality,
    Operators,
    Integrals,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::All,
        Suite::JacobiAnger,
        Suite::Expansions,
        Suite::Orthogonality,
        Suite::Operators,
        Suite::Integrals,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::JacobiAnger => "jacobi-anger",
            Suite::Expansions => "expansions",
            Suite::Orthogonality => "orthogonality",
            Suite::Operators => "operators",
            Suite::Integrals => "integrals",
        }
    }

    fn includes(self, part: Suite) -> bool {
        self == Suite::All || self == part
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown suite `{s}`")))
    }
}

type Job = Box<dyn Fn() -> Vec<VerificationReport> + Send + Sync>;

fn job<F>(timing: bool, name: &'static str, params: Params, tol: f64, f: F) -> Job
where
    F: Fn() -> Result<VerificationReport> + Send + Sync + 'static,
{
    Box::new(move || {
        vec![timed(timing, || {
            f().unwrap_or_else(|e| VerificationReport::failed(name, params.clone(), tol, &e))
        })]
    })
}

fn job_many<F>(timing: bool, name: &'static str, params: Params, tol: f64, f: F) -> Job
where
    F: Fn() -> Result<Vec<VerificationReport>> + Send + Sync + 'static,
{
    Box::new(move || {
        let start = std::time::Instant::now();
        match f() {
            Ok(mut v) => {
                if timing {
                    let ms = start.elapsed().as_secs_f64() * 1e3;
                    v.iter_mut().for_each(|r| r.runtime_ms = ms);
                }
                v
            }
            Err(e) => vec![VerificationReport::failed(name, params.clone(), tol, &e)],
        }
    })
}

fn rng(cfg: &SuiteConfig, part: Suite) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed ^ ((part as u64 + 1) << 32))
}

fn jacobi_anger_jobs(cfg: &SuiteConfig, jobs: &mut Vec<Job>) {
    let mut g = rng(cfg, Suite::JacobiAnger);
    let mut cases = vec![(1.0, 1e-9, 0, 0.0), (1.0, 5.0, 3, 0.7), (2.0, 10.0, -4, PI)];
    for _ in 0..cfg.jacobi_anger_samples {
        let k = g.gen_range(0.2..3.0);
        let r = g.gen_range(0.01..30.0) / k;
        cases.push((k, r, g.gen_range(-15..=15), g.gen_range(-PI..PI)));
    }
    let (nodes, tol) = (cfg.jacobi_anger_nodes, cfg.tol.jacobi_anger);
    for (k, r, m, phi) in cases {
        let params = Params::new().with("k", k).with("r", r).with("m", m).with("phi", phi);
        jobs.push(job(cfg.timing, "jacobi_anger", params, tol, move || {
            verify_jacobi_anger(k, r, m, phi, nodes, tol)
        }));
    }
}

fn polar_point(g: &mut ChaCha8Rng, r_max: f64) -> PointPolar {
    PointPolar {
        r: g.gen_range(0.05 * r_max..r_max),
        phi: g.gen_range(0.0..2.0 * PI),
    }
}

fn expansion_jobs(cfg: &SuiteConfig, jobs: &mut Vec<Job>) {
    let mut g = rng(cfg, Suite::Expansions);
    let t = cfg.timing;

    let tol = cfg.tol.cartesian_polar;
    for parity in [Parity::Even, Parity::Odd] {
        for alpha in [0.0, PI / 4.0, -2.0, 2.5] {
            let k = g.gen_range(0.5..2.0);
            let p = polar_point(&mut g, 8.0 / k);
            let terms = (k * p.r).ceil() as u32 + 20;
            let params = Params::new()
                .with("parity", parity.as_str())
                .with("k", k)
                .with("alpha", alpha);
            jobs.push(job(t, "expansion/cartesian_from_polar", params, tol, move || {
                verify_expansion_cartesian_from_polar(&AngleIndex::new(k, alpha, parity)?, p, terms, tol)
            }));
        }
    }

    let (tol, m_max) = (cfg.tol.parabolic_polar, cfg.m_max);
    let mut pts = vec![
        (1.0, PointPolar { r: 1.0, phi: PI / 2.0 }),
        (1.0, PointPolar { r: 1.5, phi: 0.9 }),
    ];
    for _ in 0..cfg.parabolic_polar_points {
        let k = g.gen_range(0.5..2.0);
        pts.push((k, polar_point(&mut g, 20.0 / k)));
    }
    for (k, p) in pts {
        for bk in [0.0, 1.0, -1.0, 3.0, -3.0] {
            for parity in [Parity::Even, Parity::Odd] {
                let params = Params::new()
                    .with("parity", parity.as_str())
                    .with("k", k)
                    .with("beta", bk * k)
                    .with("r", p.r)
                    .with("phi", p.phi);
                jobs.push(job(t, "expansion/parabolic_from_polar", params, tol, move || {
                    verify_expansion_parabolic_from_polar(&ParabolicIndex::new(k, bk * k, parity)?, p, m_max, tol)
                }));
            }
        }
    }

    let tol = cfg.tol.parabolic_cartesian;
    let mut cases = vec![
        (1.0, 0.0, Parity::Even, PointParabolic { xi: 1.0, eta: 0.5 }),
        (1.0, 1.5, Parity::Odd, PointParabolic { xi: 0.9, eta: 1.1 }),
    ];
    for _ in 0..cfg.parabolic_cartesian_points {
        let k = g.gen_range(0.5..2.0);
        let beta = g.gen_range(-3.0..3.0) * k;
        let p = PointParabolic {
            xi: g.gen_range(0.0..2.0),
            eta: g.gen_range(-2.0..2.0),
        };
        for parity in [Parity::Even, Parity::Odd] {
            cases.push((k, beta, parity, p));
        }
    }
    for &(k, beta, parity, p) in &cases {
        let params = Params::new()
            .with("parity", parity.as_str())
            .with("k", k)
            .with("beta", beta)
            .with("xi", p.xi)
            .with("eta", p.eta);
        jobs.push(job(t, "expansion/parabolic_from_cartesian", params, tol, move || {
            verify_expansion_parabolic_from_cartesian(&ParabolicIndex::new(k, beta, parity)?, p, tol)
        }));
    }
    for &(k, _, parity, p) in &cases {
        let params = Params::new()
            .with("parity", parity.as_str())
            .with("k", k)
            .with("xi", p.xi)
            .with("eta", p.eta);
        jobs.push(job(
            t,
            "expansion/parabolic_from_cartesian_jacobi",
            params,
            tol,
            move || verify_expansion_parabolic_from_cartesian_jacobi(&ParabolicIndex::new(k, 0.0, parity)?, p, 64, tol),
        ));
    }

    let (tol, bm) = (cfg.tol.inverse, cfg.b_multiplier);
    let mut cases = vec![
        (1.0, 0, PointPolar { r: 1.0, phi: 0.3 }),
        (1.0, 2, PointPolar { r: 2.0, phi: 2.0 }),
    ];
    for _ in 0..cfg.inverse_points {
        let k = g.gen_range(0.5..2.0);
        let p = polar_point(&mut g, 3.0 / k);
        cases.extend((-4..=4).map(|m| (k, m, p)));
    }
    for (k, m, p) in cases {
        let params = Params::new()
            .with("k", k)
            .with("m", m)
            .with("r", p.r)
            .with("phi", p.phi);
        jobs.push(job(t, "expansion/polar_from_parabolic", params, tol, move || {
            verify_inverse_polar_from_parabolic(&PolarIndex::new(k, m)?, p, bm * k, tol)
        }));
    }
}

fn orthogonality_jobs(cfg: &SuiteConfig, jobs: &mut Vec<Job>) {
    let t = cfg.timing;
    let (tol, b) = (cfg.tol.w_orthogonality, cfg.b_multiplier);
    for parity in [Parity::Even, Parity::Odd] {
        for m in -6..=6i64 {
            for m2 in -6..=6i64 {
                let params = Params::new()
                    .with("parity", parity.as_str())
                    .with("m", m)
                    .with("m2", m2);
                jobs.push(job(t, "orthogonality/w", params, tol, move || {
                    verify_w_orthogonality(1.0, m, m2, parity, b, tol)
                }));
            }
        }
    }
    let (tol, x_max) = (cfg.tol.hahn_orthogonality, cfg.x_max);
    for a in [0.25, 0.75] {
        for n in 0..=6u32 {
            for n2 in 0..=6u32 {
                let params = Params::new().with("a", a).with("n", n).with("n2", n2);
                jobs.push(job(t, "orthogonality/hahn", params, tol, move || {
                    verify_hahn_orthogonality(n, n2, a, x_max, tol)
                }));
            }
        }
    }
    let tol = cfg.tol.s_overlap;
    for parity in [Parity::Even, Parity::Odd] {
        let params = Params::new().with("parity", parity.as_str());
        jobs.push(job(t, "orthogonality/s", params, tol, move || {
            verify_s_overlap(parity, 8, tol)
        }));
    }
    let tol = cfg.tol.mixed_parity;
    for (k, beta, alpha) in [(1.0, 0.0, 0.7), (1.3, 2.2, -2.4), (0.6, -1.1, 1.9)] {
        let params = Params::new().with("k", k).with("beta", beta).with("alpha", alpha);
        jobs.push(job(t, "mixed_parity", params, tol, move || {
            verify_mixed_parity(k, beta, alpha, 40, tol)
        }));
    }
}

fn operator_jobs(cfg: &SuiteConfig, jobs: &mut Vec<Job>) -> Result<()> {
    let mut g = rng(cfg, Suite::Operators);
    let t = cfg.timing;
    let (tol, tr) = (cfg.tol.operator, cfg.tol.refinement);
    let pts = [PointXY::new(0.7, 0.4), PointXY::new(-1.1, 0.9), PointXY::new(0.3, -1.6)];
    let plane = PlaneWaveIndex::new(0.6, -0.8)?;
    let cases: Vec<(Option<OperatorTag>, Basis)> = vec![
        (Some(OperatorTag::XS), Basis::Polar(PolarIndex::new(1.0, 3)?)),
        (Some(OperatorTag::XS), Basis::Polar(PolarIndex::new(1.7, -2)?)),
        (Some(OperatorTag::L3), Basis::Polar(PolarIndex::new(1.0, 3)?)),
        (
            Some(OperatorTag::XC),
            Basis::Cartesian(AngleIndex::new(1.0, 0.0, Parity::Even)?),
        ),
        (
            Some(OperatorTag::XC),
            Basis::Cartesian(AngleIndex::new(1.3, 1.1, Parity::Odd)?),
        ),
        (Some(OperatorTag::XC), Basis::SingleParity(Parity::Odd, plane)),
        (
            Some(OperatorTag::P1),
            Basis::Cartesian(AngleIndex::new(1.3, -2.2, Parity::Even)?),
        ),
        (Some(OperatorTag::P1), Basis::Plane(plane)),
        (Some(OperatorTag::P2), Basis::Plane(plane)),
        (
            Some(OperatorTag::XP),
            Basis::Parabolic(ParabolicIndex::new(1.0, 1.2, Parity::Even)?),
        ),
        (
            Some(OperatorTag::XP),
            Basis::Parabolic(ParabolicIndex::new(1.0, 1.2, Parity::Odd)?),
        ),
        (
            Some(OperatorTag::XP),
            Basis::Parabolic(ParabolicIndex::new(0.8, -2.0, Parity::Odd)?),
        ),
        (
            Some(OperatorTag::XP),
            Basis::Miller {
                k: 1.0,
                beta: 0.5,
                sign: MillerSign::Plus,
            },
        ),
        (None, Basis::Plane(plane)),
        (None, Basis::SingleParity(Parity::Even, plane)),
        (None, Basis::Cartesian(AngleIndex::new(1.2, 0.8, Parity::Odd)?)),
        (
            None,
            Basis::DoubleParity {
                kind: (Parity::Odd, Parity::Even),
                k1: 0.9,
                k2: 1.1,
            },
        ),
        (None, Basis::Polar(PolarIndex::new(1.5, -4)?)),
        (None, Basis::Parabolic(ParabolicIndex::new(1.0, 0.7, Parity::Even)?)),
        (None, Basis::Parabolic(ParabolicIndex::new(1.4, -1.3, Parity::Odd)?)),
        (
            None,
            Basis::Miller {
                k: 1.0,
                beta: -0.4,
                sign: MillerSign::Minus,
            },
        ),
    ];
    for (tag, basis) in cases {
        for p in pts {
            let name = if tag.is_some() {
                "operator"
            } else {
                "operator/helmholtz"
            };
            let params = Params::new()
                .with("basis", format!("{basis:?}"))
                .with("x", p.x)
                .with("y", p.y);
            jobs.push(job_many(t, name, params, tol, move || match tag {
                Some(tag) => verify_operator_eigenvalue(tag, &basis, p, tol, tr),
                None => verify_helmholtz(&basis, p, tol, tr),
            }));
        }
    }
    let mut points: Vec<PointXY> = (0..16)
        .map(|_| PointXY::new(g.gen_range(-3.0..3.0), g.gen_range(-3.0..3.0)))
        .collect();
    points.extend([PointXY::new(-1.5, 0.0), PointXY::new(0.0, 2.0), PointXY::new(2.0, 0.0)]);
    let tol = cfg.tol.parity;
    jobs.push(job_many(t, "parity", Params::new(), tol, move || {
        verify_parity_exactness(&points, tol)
    }));
    Ok(())
}

fn integral_jobs(cfg: &SuiteConfig, jobs: &mut Vec<Job>) {
    let t = cfg.timing;
    let tol = cfg.tol.angular;
    for parity in [Parity::Even, Parity::Odd] {
        let params = Params::new().with("parity", parity.as_str());
        jobs.push(job(t, "integral/angular", params, tol, move || {
            verify_angular_integrals(parity, 10, 10, tol)
        }));
    }
    let (tol, draws, seed) = (cfg.tol.bailey, cfg.bailey_draws, cfg.seed);
    jobs.push(job(t, "bailey", Params::new(), tol, move || {
        let mut g = rng(
            &SuiteConfig {
                seed,
                ..SuiteConfig::default()
            },
            Suite::Integrals,
        );
        verify_bailey(&mut g, draws, 10, tol)
    }));
    let betas = [-5.0, -2.0, -0.5, 0.0, 0.5, 2.0, 5.0];
    let (tol, nodes) = (cfg.tol.w_agreement, cfg.projection_nodes);
    for parity in [Parity::Even, Parity::Odd] {
        for bk in betas {
            let params = Params::new().with("parity", parity.as_str()).with("beta_over_k", bk);
            jobs.push(job(t, "w_agreement", params, tol, move || {
                verify_w_agreement(parity, 1.0, bk, 8, nodes, tol)
            }));
        }
    }
    let tol = cfg.tol.w_symmetry;
    for parity in [Parity::Even, Parity::Odd] {
        let params = Params::new().with("parity", parity.as_str());
        jobs.push(job(t, "w_symmetry", params, tol, move || {
            verify_w_symmetry(parity, 1.0, &betas, 8, tol)
        }));
    }
    let tol = cfg.tol.sine_power;
    let sp_betas: Vec<f64> = (-4..=4).map(f64::from).collect();
    for alpha in [0.0, 0.5, 1.0, 2.0, 3.5] {
        let b = sp_betas.clone();
        jobs.push(job(
            t,
            "integral/sine_power",
            Params::new().with("alpha", alpha),
            tol,
            move || verify_sine_power(alpha, &b, tol),
        ));
    }
}

/// Runs a suite. Reports come back in a fixed order whatever the thread count.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Vec<VerificationReport> {
    let mut jobs: Vec<Job> = Vec::new();
    if suite.includes(Suite::JacobiAnger) {
        jacobi_anger_jobs(cfg, &mut jobs);
    }
    if suite.includes(Suite::Expansions) {
        expansion_jobs(cfg, &mut jobs);
    }
    if suite.includes(Suite::Orthogonality) {
        orthogonality_jobs(cfg, &mut jobs);
    }
    if suite.includes(Suite::Operators) {
        if let Err(e) = operator_jobs(cfg, &mut jobs) {
            let tol = cfg.tol.operator;
            jobs.push(Box::new(move || {
                vec![VerificationReport::failed("operator", Params::new(), tol, &e)]
            }));
        }
    }
    if suite.includes(Suite::Integrals) {
        integral_jobs(cfg, &mut jobs);
    }
    jobs.par_iter().map(|j| j()).collect::<Vec<_>>().concat()
}
