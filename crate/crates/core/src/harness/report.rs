//! Verification reports and their JSON-lines form.

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use serde_json::Value;
use std::time::Instant;

/// Ordered key-value parameters of a report, serialized as a JSON object
/// with keys in insertion order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Params(pub Vec<(String, Value)>);

impl Params {
    pub fn new() -> Self {
        Params(Vec::new())
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.push(key, value);
        self
    }

    pub fn push(&mut self, key: &str, value: impl Into<Value>) {
        self.0.push((key.to_string(), value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

/// Outcome of checking one identity. `pass` is `max_abs_error <= tolerance`;
/// a NaN error never passes. Non-finite numbers serialize as `null`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity_name: String,
    pub parameters: Params,
    pub max_abs_error: f64,
    pub rms_error: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub runtime_ms: f64,
}

impl VerificationReport {
    /// Builds a report from individual absolute errors.
    pub fn from_errors(name: impl Into<String>, parameters: Params, errors: &[f64], tolerance: f64) -> Self {
        let (max, rms) = if errors.is_empty() {
            (0.0, 0.0)
        } else {
            let max = errors.iter().fold(
                0.0f64,
                |m, &e| if e.is_nan() || m.is_nan() { f64::NAN } else { m.max(e) },
            );
            let rms = (errors.iter().map(|e| e * e).sum::<f64>() / errors.len() as f64).sqrt();
            (max, rms)
        };
        VerificationReport {
            identity_name: name.into(),
            parameters,
            max_abs_error: max,
            rms_error: rms,
            tolerance,
            pass: max <= tolerance,
            runtime_ms: 0.0,
        }
    }

    /// A report for a check that could not be carried out.
    pub fn failed(name: impl Into<String>, mut parameters: Params, tolerance: f64, err: &crate::Error) -> Self {
        parameters.push("error", err.to_string());
        let mut r = VerificationReport::from_errors(name, parameters, &[f64::INFINITY], tolerance);
        r.pass = false;
        r
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

/// Runs `f` and, when `timing` is on, stores its wall time in the report.
/// Off by default so that report streams are byte-reproducible.
pub fn timed(timing: bool, f: impl FnOnce() -> VerificationReport) -> VerificationReport {
    let start = Instant::now();
    let mut r = f();
    if timing {
        r.runtime_ms = start.elapsed().as_secs_f64() * 1e3;
    }
    r
}
