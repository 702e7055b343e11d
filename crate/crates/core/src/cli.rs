//! Command-line front end: `eval`, `coeffs` and `verify`.
//!
//! Each failure prints exactly one line starting with `error:`. Exit codes:
//! 0 success, 1 a module error or a failed identity, 2 a usage or
//! configuration error.

use crate::bases::{psi_miller, psi_parabolic, psi_polar};
use crate::bases::{AngleIndex, Basis, MillerSign, ParabolicIndex, Parity, PlaneWaveIndex, PolarIndex};
use crate::coeffs::{Cell, CoeffKind, CoeffQuery, CoefficientTable, SCoeffQuery, WCoeffQuery, WMethod, ZCoeffQuery};
use crate::error::{Error, Result};
use crate::geometry::{parabolic_to_xy, polar_to_xy, PointParabolic, PointPolar, PointXY};
use crate::harness::{run_suite, Suite, SuiteConfig};
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

#[derive(Debug, Parser)]
#[command(
    name = "helmholtz2d",
    version,
    about = "Separable Helmholtz bases, interbasis coefficients and their verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a basis function on a grid and write CSV.
    Eval {
        #[arg(long, value_enum)]
        basis: BasisName,
        /// Index fields, e.g. `k=1,m=2` or `k=1,beta=0.5,parity=odd`.
        #[arg(long)]
        index: String,
        /// `chart:min1:max1:n1:min2:max2:n2` with chart xy, polar or parabolic.
        #[arg(long)]
        grid: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate S, W or Z coefficients and write CSV.
    Coeffs {
        #[arg(long)]
        kind: String,
        /// Index ranges: a value, an integer range `a..b`, or `lo:hi:n` samples.
        #[arg(long)]
        index: String,
        /// closed_form, hahn, three_f_two, integral, or all (the last three).
        #[arg(long, default_value = "closed_form")]
        method: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite and write JSON lines.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisName {
    Plane,
    SingleParity,
    Cartesian,
    DoubleParity,
    Polar,
    Parabolic,
    Miller,
}

/// Failure of a command, mapped to its exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Run(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Config(_) => CliError::Usage(e.to_string()),
            e => CliError::Run(e),
        }
    }
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Run(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Run(e) => e.to_string(),
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    Xy,
    Polar,
    Parabolic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub chart: Chart,
    pub min1: f64,
    pub max1: f64,
    pub n1: usize,
    pub min2: f64,
    pub max2: f64,
    pub n2: usize,
}

impl FromStr for GridSpec {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 7 {
            return Err(format!("grid `{s}` must be chart:min1:max1:n1:min2:max2:n2"));
        }
        let chart = match parts[0] {
            "xy" => Chart::Xy,
            "polar" => Chart::Polar,
            "parabolic" => Chart::Parabolic,
            c => return Err(format!("unknown chart `{c}` (xy|polar|parabolic)")),
        };
        let real = |t: &str| {
            t.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or(format!("bad grid number `{t}`"))
        };
        let count = |t: &str| {
            t.parse::<usize>()
                .ok()
                .filter(|n| *n >= 2)
                .ok_or(format!("grid samples `{t}` must be an integer >= 2"))
        };
        let g = GridSpec {
            chart,
            min1: real(parts[1])?,
            max1: real(parts[2])?,
            n1: count(parts[3])?,
            min2: real(parts[4])?,
            max2: real(parts[5])?,
            n2: count(parts[6])?,
        };
        if !(g.max1 > g.min1 && g.max2 > g.min2) {
            return Err("grid needs max > min on both axes".into());
        }
        match chart {
            Chart::Polar if g.min1 <= 0.0 => Err("polar grid needs r > 0".into()),
            Chart::Parabolic if g.min1 < 0.0 => Err("parabolic grid needs xi >= 0".into()),
            _ => Ok(g),
        }
    }
}

impl GridSpec {
    /// Nodes, row-major over axis 1 then axis 2.
    pub fn nodes(&self) -> Vec<(f64, f64)> {
        let a = linspace(self.min1, self.max1, self.n1);
        let b = linspace(self.min2, self.max2, self.n2);
        a.iter().flat_map(|&u| b.iter().map(move |&v| (u, v))).collect()
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| {
            if i + 1 == n {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

/// Floats in CSV: 17 significant digits.
pub fn fmt_real(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_fields(s: &str) -> std::result::Result<BTreeMap<String, String>, CliError> {
    let mut map = BTreeMap::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| usage(format!("index field `{item}` must be key=value")))?;
        if map.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
            return Err(usage(format!("index field `{}` given twice", k.trim())));
        }
    }
    Ok(map)
}

struct Fields(BTreeMap<String, String>);

impl Fields {
    fn take(&mut self, key: &str) -> std::result::Result<Option<String>, CliError> {
        Ok(self.0.remove(key))
    }

    fn req(&mut self, key: &str) -> std::result::Result<String, CliError> {
        self.take(key)?
            .ok_or_else(|| usage(format!("missing index field `{key}`")))
    }

    fn real(&mut self, key: &str) -> std::result::Result<f64, CliError> {
        let v = self.req(key)?;
        v.parse()
            .map_err(|_| usage(format!("`{key}` needs a number, got `{v}`")))
    }

    fn int(&mut self, key: &str) -> std::result::Result<i64, CliError> {
        let v = self.req(key)?;
        v.parse()
            .map_err(|_| usage(format!("`{key}` needs an integer, got `{v}`")))
    }

    fn parity(&mut self, key: &str) -> std::result::Result<Parity, CliError> {
        let v = self.req(key)?;
        v.parse()
            .map_err(|_| usage(format!("`{key}` must be even or odd, got `{v}`")))
    }

    fn finish(self) -> std::result::Result<(), CliError> {
        match self.0.keys().next() {
            Some(k) => Err(usage(format!("unknown index field `{k}`"))),
            None => Ok(()),
        }
    }
}

fn parse_basis(name: BasisName, index: &str) -> std::result::Result<Basis, CliError> {
    let mut f = Fields(parse_fields(index)?);
    let basis = match name {
        BasisName::Plane => Basis::Plane(PlaneWaveIndex::new(f.real("k1")?, f.real("k2")?)?),
        BasisName::SingleParity => {
            let p = f.parity("parity")?;
            Basis::SingleParity(p, PlaneWaveIndex::new(f.real("k1")?, f.real("k2")?)?)
        }
        BasisName::Cartesian => Basis::Cartesian(AngleIndex::new(f.real("k")?, f.real("alpha")?, f.parity("parity")?)?),
        BasisName::DoubleParity => {
            let kind = (f.parity("parity_x")?, f.parity("parity_y")?);
            Basis::DoubleParity {
                kind,
                k1: f.real("k1")?,
                k2: f.real("k2")?,
            }
        }
        BasisName::Polar => Basis::Polar(PolarIndex::new(f.real("k")?, f.int("m")?)?),
        BasisName::Parabolic => {
            Basis::Parabolic(ParabolicIndex::new(f.real("k")?, f.real("beta")?, f.parity("parity")?)?)
        }
        BasisName::Miller => {
            let sign = match f.req("sign")?.as_str() {
                "plus" | "+" => MillerSign::Plus,
                "minus" | "-" => MillerSign::Minus,
                s => return Err(usage(format!("`sign` must be plus or minus, got `{s}`"))),
            };
            let (k, beta) = (f.real("k")?, f.real("beta")?);
            ParabolicIndex::new(k, beta, Parity::Even)?;
            Basis::Miller { k, beta, sign }
        }
    };
    f.finish()?;
    Ok(basis)
}

/// Evaluates on the grid's own chart where the basis lives there, so that
/// coordinates are used exactly as given.
fn eval_on_chart(basis: &Basis, chart: Chart, u: f64, v: f64) -> Result<Complex64> {
    match (chart, basis) {
        (Chart::Polar, Basis::Polar(i)) => psi_polar(i, PointPolar { r: u, phi: v }),
        (Chart::Parabolic, Basis::Parabolic(i)) => psi_parabolic(i, PointParabolic { xi: u, eta: v }),
        (Chart::Parabolic, Basis::Miller { k, beta, sign }) => {
            psi_miller(*k, *beta, *sign, PointParabolic { xi: u, eta: v })
        }
        (Chart::Xy, _) => basis.eval_xy(PointXY::new(u, v)),
        (Chart::Polar, _) => basis.eval_xy(polar_to_xy(PointPolar { r: u, phi: v })),
        (Chart::Parabolic, _) => basis.eval_xy(parabolic_to_xy(PointParabolic { xi: u, eta: v })),
    }
}

pub fn eval_csv(basis: &Basis, grid: &GridSpec) -> Result<String> {
    let mut out = String::from("coord1,coord2,re,im\n");
    for (u, v) in grid.nodes() {
        let z = eval_on_chart(basis, grid.chart, u, v)?;
        let _ = writeln!(
            out,
            "{},{},{},{}",
            fmt_real(u),
            fmt_real(v),
            fmt_real(z.re),
            fmt_real(z.im)
        );
    }
    Ok(out)
}

enum Axis {
    Ints(Vec<i64>),
    Reals(Vec<f64>),
    Parities(Vec<Parity>),
}

fn parse_ints(key: &str, v: &str) -> std::result::Result<Vec<i64>, CliError> {
    let bad = || usage(format!("`{key}` needs an integer or a range a..b, got `{v}`"));
    match v.split_once("..") {
        Some((a, b)) => {
            let (a, b): (i64, i64) = (
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            );
            if b < a || b - a > 100_000 {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![v.parse().map_err(|_| bad())?]),
    }
}

fn parse_reals(key: &str, v: &str) -> std::result::Result<Vec<f64>, CliError> {
    let bad = || usage(format!("`{key}` needs a number or lo:hi:n, got `{v}`"));
    let num = |t: &str| t.trim().parse::<f64>().ok().filter(|x| x.is_finite()).ok_or_else(bad);
    let parts: Vec<&str> = v.split(':').collect();
    match parts.as_slice() {
        [x] => Ok(vec![num(x)?]),
        [lo, hi, n] => {
            let n: usize = n
                .trim()
                .parse()
                .ok()
                .filter(|n| (2..=1_000_000).contains(n))
                .ok_or_else(bad)?;
            Ok(linspace(num(lo)?, num(hi)?, n))
        }
        _ => Err(bad()),
    }
}

fn parse_parities(v: &str) -> std::result::Result<Vec<Parity>, CliError> {
    match v {
        "both" => Ok(vec![Parity::Even, Parity::Odd]),
        p => Ok(vec![p.parse().map_err(|_| {
            usage(format!("`parity` must be even, odd or both, got `{p}`"))
        })?]),
    }
}

/// Queries in row-major order over the kind's index columns.
fn coeff_queries(kind: CoeffKind, index: &str) -> std::result::Result<Vec<CoeffQuery>, CliError> {
    let mut fields = parse_fields(index)?;
    let mut axes = Vec::new();
    for &col in kind.index_columns() {
        let raw = fields.remove(col);
        let axis = match (col, raw.as_deref()) {
            ("parity", v) => Axis::Parities(parse_parities(v.unwrap_or("both"))?),
            ("k", None) => Axis::Reals(vec![1.0]),
            (_, None) => return Err(usage(format!("missing index field `{col}`"))),
            ("m", Some(v)) => Axis::Ints(parse_ints(col, v)?),
            (_, Some(v)) => Axis::Reals(parse_reals(col, v)?),
        };
        axes.push(axis);
    }
    if let Some(k) = fields.keys().next() {
        return Err(usage(format!("unknown index field `{k}` for {kind} coefficients")));
    }
    let mut rows: Vec<Vec<Cell>> = vec![Vec::new()];
    for axis in &axes {
        let cells: Vec<Cell> = match axis {
            Axis::Ints(v) => v.iter().map(|&x| Cell::Int(x)).collect(),
            Axis::Reals(v) => v.iter().map(|&x| Cell::Real(x)).collect(),
            Axis::Parities(v) => v.iter().map(|&x| Cell::Parity(x)).collect(),
        };
        rows = rows
            .into_iter()
            .flat_map(|r| cells.iter().map(move |c| [r.clone(), vec![*c]].concat()))
            .collect();
    }
    let real = |c: &Cell| {
        if let Cell::Real(x) = c {
            *x
        } else {
            unreachable!("real column")
        }
    };
    let int = |c: &Cell| {
        if let Cell::Int(x) = c {
            *x
        } else {
            unreachable!("integer column")
        }
    };
    let par = |c: &Cell| {
        if let Cell::Parity(x) = c {
            *x
        } else {
            unreachable!("parity column")
        }
    };
    rows.iter()
        .map(|r| {
            Ok(match kind {
                CoeffKind::S => CoeffQuery::S(SCoeffQuery::new(par(&r[0]), int(&r[1]), real(&r[2]))?),
                CoeffKind::W => CoeffQuery::W(WCoeffQuery::new(par(&r[0]), real(&r[1]), real(&r[2]), int(&r[3]))?),
                CoeffKind::Z => CoeffQuery::Z(ZCoeffQuery::new(real(&r[0]), real(&r[1]), real(&r[2]))?),
            })
        })
        .collect()
}

fn parse_methods(kind: CoeffKind, s: &str) -> std::result::Result<Vec<WMethod>, CliError> {
    if s == "all" {
        if kind != CoeffKind::W {
            return Err(usage(format!(
                "method `all` applies to W coefficients only; {kind} has closed_form"
            )));
        }
        return Ok(vec![WMethod::Hahn, WMethod::ThreeFTwo, WMethod::Integral]);
    }
    let m: WMethod = s.parse().map_err(|_| usage(format!("unknown method `{s}`")))?;
    Ok(vec![m])
}

pub fn table_csv(t: &CoefficientTable) -> String {
    let mut out = t.kind.index_columns().join(",");
    out.push_str(",method,re,im\n");
    for row in &t.rows {
        for cell in row.query.cells() {
            match cell {
                Cell::Parity(p) => out.push_str(p.as_str()),
                Cell::Int(i) => out.push_str(&i.to_string()),
                Cell::Real(x) => out.push_str(&fmt_real(x)),
            }
            out.push(',');
        }
        let _ = writeln!(
            out,
            "{},{},{}",
            row.method,
            fmt_real(row.value.re),
            fmt_real(row.value.im)
        );
    }
    out
}

fn write_out(path: Option<&Path>, text: &str) -> std::result::Result<(), CliError> {
    let res = match path {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    res.map_err(|e| usage(format!("cannot write output: {e}")))
}

fn run_command(cmd: Command) -> std::result::Result<i32, CliError> {
    match cmd {
        Command::Eval {
            basis,
            index,
            grid,
            out,
        } => {
            let grid: GridSpec = grid.parse().map_err(usage)?;
            let basis = parse_basis(basis, &index)?;
            write_out(out.as_deref(), &eval_csv(&basis, &grid)?)?;
            Ok(0)
        }
        Command::Coeffs {
            kind,
            index,
            method,
            out,
        } => {
            let kind: CoeffKind = kind
                .parse()
                .map_err(|_| usage(format!("unknown kind `{kind}` (S|W|Z)")))?;
            let methods = parse_methods(kind, &method)?;
            let queries = coeff_queries(kind, &index)?;
            let table = CoefficientTable::build(kind, &queries, &methods)?;
            write_out(out.as_deref(), &table_csv(&table))?;
            Ok(0)
        }
        Command::Verify { suite, config, out } => {
            let suite: Suite = suite.parse()?;
            let cfg = match config {
                Some(p) => SuiteConfig::from_file(&p)?,
                None => SuiteConfig::default(),
            };
            let reports = run_suite(suite, &cfg);
            let mut text = String::new();
            for r in &reports {
                text.push_str(&r.to_json_line());
                text.push('\n');
            }
            write_out(out.as_deref(), &text)?;
            let failed = reports.iter().filter(|r| !r.pass).count();
            eprintln!("verify {suite}: {} passed, {failed} failed", reports.len() - failed);
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            let text = e.to_string();
            let msg: Vec<&str> = text
                .lines()
                .take_while(|l| !l.is_empty() && !l.starts_with("Usage:"))
                .map(str::trim)
                .collect();
            let msg = msg.join(" ");
            eprintln!("error: {}", msg.strip_prefix("error: ").unwrap_or(&msg));
            return 2;
        }
    };
    match run_command(cli.command) {
        Ok(code) => code,
        Err(e) => {
            let msg = e.message().replace('\n', " ");
            eprintln!("error: {msg}");
            e.code()
        }
    }
}
