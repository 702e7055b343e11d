//! Suite parameters, read from a flat `key = value` file.
//!
//! Blank lines and lines starting with `#` are ignored. Unknown keys and
//! unparsable values are errors. `tolerance` overrides every `tol_*` key.

use crate::error::{Error, Result};
use serde::Serialize;
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Tolerances {
    pub jacobi_anger: f64,
    pub cartesian_polar: f64,
    pub parabolic_polar: f64,
    pub parabolic_cartesian: f64,
    pub inverse: f64,
    pub w_orthogonality: f64,
    pub hahn_orthogonality: f64,
    pub s_overlap: f64,
    pub mixed_parity: f64,
    pub bailey: f64,
    pub angular: f64,
    pub w_agreement: f64,
    pub w_symmetry: f64,
    pub sine_power: f64,
    pub operator: f64,
    pub refinement: f64,
    pub parity: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            jacobi_anger: 1e-10,
            cartesian_polar: 1e-9,
            parabolic_polar: 1e-6,
            parabolic_cartesian: 1e-6,
            inverse: 1e-5,
            w_orthogonality: 1e-4,
            hahn_orthogonality: 1e-6,
            s_overlap: 1e-14,
            mixed_parity: 0.0,
            bailey: 1e-12,
            angular: 1e-10,
            w_agreement: 1e-7,
            w_symmetry: 1e-12,
            sine_power: 1e-10,
            operator: 1e-4,
            refinement: 0.5,
            parity: 0.0,
        }
    }
}

impl Tolerances {
    pub const NAMES: [&'static str; 17] = [
        "jacobi_anger",
        "cartesian_polar",
        "parabolic_polar",
        "parabolic_cartesian",
        "inverse",
        "w_orthogonality",
        "hahn_orthogonality",
        "s_overlap",
        "mixed_parity",
        "bailey",
        "angular",
        "w_agreement",
        "w_symmetry",
        "sine_power",
        "operator",
        "refinement",
        "parity",
    ];

    fn slot(&mut self, name: &str) -> Option<&mut f64> {
        Some(match name {
            "jacobi_anger" => &mut self.jacobi_anger,
            "cartesian_polar" => &mut self.cartesian_polar,
            "parabolic_polar" => &mut self.parabolic_polar,
            "parabolic_cartesian" => &mut self.parabolic_cartesian,
            "inverse" => &mut self.inverse,
            "w_orthogonality" => &mut self.w_orthogonality,
            "hahn_orthogonality" => &mut self.hahn_orthogonality,
            "s_overlap" => &mut self.s_overlap,
            "mixed_parity" => &mut self.mixed_parity,
            "bailey" => &mut self.bailey,
            "angular" => &mut self.angular,
            "w_agreement" => &mut self.w_agreement,
            "w_symmetry" => &mut self.w_symmetry,
            "sine_power" => &mut self.sine_power,
            "operator" => &mut self.operator,
            "refinement" => &mut self.refinement,
            "parity" => &mut self.parity,
            _ => return None,
        })
    }

    fn set_all(&mut self, v: f64) {
        for name in Self::NAMES {
            *self.slot(name).expect("every listed name has a slot") = v;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Largest |m| of the parabolic-from-polar sum.
    pub m_max: u32,
    /// β-integrals run over |β| ≤ b_multiplier·k.
    pub b_multiplier: f64,
    /// Hahn orthogonality integrals run over |x| ≤ x_max.
    pub x_max: f64,
    pub jacobi_anger_nodes: usize,
    pub projection_nodes: usize,
    pub jacobi_anger_samples: usize,
    pub parabolic_polar_points: usize,
    pub parabolic_cartesian_points: usize,
    pub inverse_points: usize,
    pub bailey_draws: usize,
    /// Record wall time in reports; off keeps output reproducible.
    pub timing: bool,
    pub tol: Tolerances,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0x5EED,
            m_max: 80,
            b_multiplier: 40.0,
            x_max: 30.0,
            jacobi_anger_nodes: 512,
            projection_nodes: 256,
            jacobi_anger_samples: 50,
            parabolic_polar_points: 20,
            parabolic_cartesian_points: 20,
            inverse_points: 10,
            bailey_draws: 100,
            timing: false,
            tol: Tolerances::default(),
        }
    }
}

fn bad(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Config(format!("line {line}: {msg}"))
}

fn parse_u64(s: &str) -> Option<u64> {
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16).ok(),
        None => s.parse().ok(),
    }
}

impl SuiteConfig {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = SuiteConfig::default();
        let mut override_tol = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split_once('#').map_or(raw, |(l, _)| l).trim();
            let n = i + 1;
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad(n, format!("expected key = value, got `{line}`")))?;
            let (key, value) = (key.trim(), value.trim());
            let real = || -> Result<f64> {
                value
                    .parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| bad(n, format!("`{key}` needs a finite number, got `{value}`")))
            };
            let count = || -> Result<usize> {
                value
                    .parse::<usize>()
                    .ok()
                    .filter(|v| *v > 0)
                    .ok_or_else(|| bad(n, format!("`{key}` needs a positive integer, got `{value}`")))
            };
            match key {
                "seed" => cfg.seed = parse_u64(value).ok_or_else(|| bad(n, format!("bad seed `{value}`")))?,
                "m_max" => {
                    cfg.m_max = u32::try_from(count()?).map_err(|_| bad(n, "m_max too large"))?;
                    if cfg.m_max > 200 {
                        return Err(bad(n, "m_max must not exceed 200"));
                    }
                }
                "b_multiplier" => cfg.b_multiplier = positive(real()?, key, n)?,
                "x_max" => cfg.x_max = positive(real()?, key, n)?,
                "jacobi_anger_nodes" => cfg.jacobi_anger_nodes = at_least_8(count()?, key, n)?,
                "projection_nodes" => cfg.projection_nodes = at_least_8(count()?, key, n)?,
                "jacobi_anger_samples" => cfg.jacobi_anger_samples = count()?,
                "parabolic_polar_points" => cfg.parabolic_polar_points = count()?,
                "parabolic_cartesian_points" => cfg.parabolic_cartesian_points = count()?,
                "inverse_points" => cfg.inverse_points = count()?,
                "bailey_draws" => cfg.bailey_draws = count()?,
                "timing" => {
                    cfg.timing = value
                        .parse()
                        .map_err(|_| bad(n, format!("`timing` needs true or false, got `{value}`")))?
                }
                "tolerance" => override_tol = Some(tolerance(real()?, key, n)?),
                _ => {
                    let v = key.strip_prefix("tol_").map(|_| real()).transpose()?;
                    match (key.strip_prefix("tol_").and_then(|t| cfg.tol.slot(t)), v) {
                        (Some(slot), Some(v)) => *slot = tolerance(v, key, n)?,
                        _ => return Err(bad(n, format!("unknown key `{key}`"))),
                    }
                }
            }
        }
        if let Some(v) = override_tol {
            cfg.tol.set_all(v);
        }
        Ok(cfg)
    }
}

fn positive(v: f64, key: &str, n: usize) -> Result<f64> {
    if v > 0.0 {
        Ok(v)
    } else {
        Err(bad(n, format!("`{key}` must be positive")))
    }
}

fn tolerance(v: f64, key: &str, n: usize) -> Result<f64> {
    if v >= 0.0 {
        Ok(v)
    } else {
        Err(bad(n, format!("`{key}` must not be negative")))
    }
}

fn at_least_8(v: usize, key: &str, n: usize) -> Result<usize> {
    if v >= 8 {
        Ok(v)
    } else {
        Err(bad(n, format!("`{key}` needs at least 8 nodes")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_overrides() {
        let c = SuiteConfig::parse("").unwrap();
        assert_eq!(c, SuiteConfig::default());
        assert_eq!(c.seed, 0x5EED);
        let c =
            SuiteConfig::parse("# comment\n\nseed = 0x10\n tol_bailey = 1e-9 \nm_max=60\ntiming = true # runtime\n")
                .unwrap();
        assert_eq!((c.seed, c.m_max, c.timing), (16, 60, true));
        assert_eq!(c.tol.bailey, 1e-9);
        let c = SuiteConfig::parse("tolerance = 0\ntol_bailey = 1\n").unwrap();
        assert_eq!(c.tol.bailey, 0.0);
        assert_eq!(c.tol.inverse, 0.0);
    }

    #[test]
    fn rejects_bad_input() {
        for text in [
            "bogus = 1",
            "tol_bogus = 1",
            "seed",
            "tol_bailey = -1",
            "tol_bailey = nan",
            "m_max = 0",
            "m_max = 500",
            "timing = yes",
            "jacobi_anger_nodes = 4",
            "b_multiplier = 0",
        ] {
            assert!(matches!(SuiteConfig::parse(text), Err(Error::Config(_))), "{text}");
        }
    }
}
