//! Tabulated coefficients over a list of queries, built in parallel with
//! index-ordered output.

use super::s::{s_coeff, SCoeffQuery};
use super::w::{w_coeff, WCoeffQuery, WMethod, INTEGRAL_TOL};
use super::z::{z_coeff, ZCoeffQuery};
use crate::bases::Parity;
use crate::error::{Error, Result};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CoeffKind {
    S,
    W,
    Z,
}

impl CoeffKind {
    pub fn index_columns(self) -> &'static [&'static str] {
        match self {
            CoeffKind::S => &["parity", "m", "alpha"],
            CoeffKind::W => &["parity", "k", "beta", "m"],
            CoeffKind::Z => &["k", "beta", "alpha_abs"],
        }
    }
}

impl fmt::Display for CoeffKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl std::str::FromStr for CoeffKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "s" => Ok(CoeffKind::S),
            "W" | "w" => Ok(CoeffKind::W),
            "Z" | "z" => Ok(CoeffKind::Z),
            _ => Err(Error::Contract(format!("unknown coefficient kind `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum CoeffQuery {
    S(SCoeffQuery),
    W(WCoeffQuery),
    Z(ZCoeffQuery),
}

/// One index value of a query, kept typed so writers can format it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Parity(Parity),
    Int(i64),
    Real(f64),
}

impl CoeffQuery {
    pub fn kind(&self) -> CoeffKind {
        match self {
            CoeffQuery::S(_) => CoeffKind::S,
            CoeffQuery::W(_) => CoeffKind::W,
            CoeffQuery::Z(_) => CoeffKind::Z,
        }
    }

    /// Index values in the order of [`CoeffKind::index_columns`].
    pub fn cells(&self) -> Vec<Cell> {
        match *self {
            CoeffQuery::S(q) => vec![Cell::Parity(q.parity), Cell::Int(q.m), Cell::Real(q.alpha)],
            CoeffQuery::W(q) => vec![
                Cell::Parity(q.parity),
                Cell::Real(q.k),
                Cell::Real(q.beta),
                Cell::Int(q.m),
            ],
            CoeffQuery::Z(q) => vec![Cell::Real(q.k), Cell::Real(q.beta), Cell::Real(q.alpha_abs)],
        }
    }

    pub fn eval(&self, method: WMethod) -> Result<Complex64> {
        match self {
            CoeffQuery::W(q) => w_coeff(q, method),
            CoeffQuery::S(q) if method == WMethod::ClosedForm => Ok(s_coeff(q)),
            CoeffQuery::Z(q) if method == WMethod::ClosedForm => z_coeff(q),
            _ => Err(Error::Contract(format!(
                "{} coefficients only have the closed_form method",
                self.kind()
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub query: CoeffQuery,
    pub method: WMethod,
    pub value: Complex64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoefficientTable {
    pub kind: CoeffKind,
    pub methods: Vec<WMethod>,
    pub query_count: usize,
    /// Relative error target of the integral route, when it was used.
    pub tolerance: Option<f64>,
    pub rows: Vec<TableRow>,
}

impl CoefficientTable {
    /// Evaluates every query with every method. Rows are ordered query-major,
    /// then by the order of `methods`, independent of thread scheduling.
    /// The first failing row, in that order, is reported.
    pub fn build(kind: CoeffKind, queries: &[CoeffQuery], methods: &[WMethod]) -> Result<Self> {
        if methods.is_empty() {
            return Err(Error::Contract("no method selected".into()));
        }
        if let Some(q) = queries.iter().find(|q| q.kind() != kind) {
            return Err(Error::Contract(format!("{} query in a {kind} table", q.kind())));
        }
        let jobs: Vec<(CoeffQuery, WMethod)> = queries
            .iter()
            .flat_map(|q| methods.iter().map(move |m| (*q, *m)))
            .collect();
        let results: Vec<Result<Complex64>> = jobs.par_iter().map(|(q, m)| q.eval(*m)).collect();
        let mut rows = Vec::with_capacity(jobs.len());
        for ((query, method), r) in jobs.into_iter().zip(results) {
            rows.push(TableRow {
                query,
                method,
                value: r?,
            });
        }
        let tolerance = methods.contains(&WMethod::Integral).then_some(INTEGRAL_TOL);
        Ok(CoefficientTable {
            kind,
            methods: methods.to_vec(),
            query_count: queries.len(),
            tolerance,
            rows,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn rows_are_query_major_and_counted() {
        let qs: Vec<_> = (-3..=3)
            .map(|m| CoeffQuery::W(WCoeffQuery::new(Parity::Even, 1.0, 0.0, m).unwrap()))
            .collect();
        let methods = [WMethod::Hahn, WMethod::ThreeFTwo, WMethod::Integral];
        let t = CoefficientTable::build(CoeffKind::W, &qs, &methods).unwrap();
        assert_eq!(t.rows.len(), 21);
        assert_eq!(t.rows.len(), t.query_count * t.methods.len());
        for (i, row) in t.rows.iter().enumerate() {
            assert_eq!(row.query, qs[i / 3]);
            assert_eq!(row.method, methods[i % 3]);
        }
        let again = CoefficientTable::build(CoeffKind::W, &qs, &methods).unwrap();
        assert_eq!(t, again);
    }

    #[test]
    fn s_and_z_accept_only_closed_form() {
        let s = CoeffQuery::S(SCoeffQuery::new(Parity::Even, 0, 0.3).unwrap());
        assert!(CoefficientTable::build(CoeffKind::S, &[s], &[WMethod::Hahn]).is_err());
        let t = CoefficientTable::build(CoeffKind::S, &[s], &[WMethod::ClosedForm]).unwrap();
        assert!((t.rows[0].value.re - 1.0 / (2.0 * PI).sqrt()).abs() < 1e-15);
        let z = CoeffQuery::Z(ZCoeffQuery::new(1.0, 0.0, 0.0).unwrap());
        assert!(matches!(
            CoefficientTable::build(CoeffKind::Z, &[z], &[WMethod::ClosedForm]),
            Err(Error::Singularity(_))
        ));
        assert!(CoefficientTable::build(CoeffKind::W, &[s], &[WMethod::ClosedForm]).is_err());
    }
}
