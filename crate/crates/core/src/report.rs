//! Pass/fail records for identity checks.

use std::fmt;
use std::time::{Duration, Instant};

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::freealg::AlgElt;
use crate::scalar::Coefficient;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Text(String),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(n) => write!(f, "{n}"),
            ParamValue::Text(s) => write!(f, "{s}"),
        }
    }
}

impl From<i64> for ParamValue {
    fn from(n: i64) -> Self {
        ParamValue::Int(n)
    }
}

impl From<u32> for ParamValue {
    fn from(n: u32) -> Self {
        ParamValue::Int(n as i64)
    }
}

impl From<usize> for ParamValue {
    fn from(n: usize) -> Self {
        ParamValue::Int(n as i64)
    }
}

impl From<String> for ParamValue {
    fn from(s: String) -> Self {
        ParamValue::Text(s)
    }
}

impl From<&str> for ParamValue {
    fn from(s: &str) -> Self {
        ParamValue::Text(s.to_string())
    }
}

/// Ordered `(name, value)` pairs identifying one identity instance.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params(pub Vec<(String, ParamValue)>);

impl Params {
    pub fn new() -> Self {
        Params(Vec::new())
    }

    pub fn with(mut self, name: &str, value: impl Into<ParamValue>) -> Self {
        self.0.push((name.to_string(), value.into()));
        self
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (name, v)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{name}={v}")?;
        }
        Ok(())
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

/// Outcome of checking one identity instance (or one batch of instances).
///
/// A pass always has a zero (absent) residual.
#[derive(Clone, Debug, Serialize)]
#[serde(bound = "")]
pub struct VerificationReport<T: Coefficient> {
    pub identity: String,
    pub params: Params,
    pub status: Status,
    /// Number of elementary comparisons that went into this record.
    pub checks: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<AlgElt<T>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(rename = "elapsed_ms", serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl<T: Coefficient> VerificationReport<T> {
    pub fn pass(identity: &str, params: Params, checks: usize) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            params,
            status: Status::Pass,
            checks,
            residual: None,
            detail: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn fail(identity: &str, params: Params, residual: Option<AlgElt<T>>, detail: impl Into<String>) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            params,
            status: Status::Fail,
            checks: 1,
            residual,
            detail: Some(detail.into()),
            elapsed: Duration::ZERO,
        }
    }

    pub fn inconclusive(identity: &str, params: Params, detail: impl Into<String>) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            params,
            status: Status::Inconclusive,
            checks: 1,
            residual: None,
            detail: Some(detail.into()),
            elapsed: Duration::ZERO,
        }
    }

    /// Pass iff `residual` is zero.
    pub fn from_residual(identity: &str, params: Params, residual: AlgElt<T>) -> Self {
        if residual.is_zero() {
            Self::pass(identity, params, 1)
        } else {
            let n = residual.len();
            Self::fail(identity, params, Some(residual), format!("nonzero residual with {n} terms"))
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed = start.elapsed();
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl<T: Coefficient> fmt::Display for VerificationReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        };
        write!(f, "{tag} {}", self.identity)?;
        if !self.params.0.is_empty() {
            write!(f, " [{}]", self.params)?;
        }
        if let Some(d) = &self.detail {
            write!(f, ": {d}")?;
        }
        Ok(())
    }
}

/// A deterministic collection of reports.
#[derive(Clone, Debug, Default)]
pub struct SuiteReport<T: Coefficient> {
    pub records: Vec<VerificationReport<T>>,
}

impl<T: Coefficient> SuiteReport<T> {
    pub fn new() -> Self {
        SuiteReport { records: Vec::new() }
    }

    pub fn push(&mut self, r: VerificationReport<T>) {
        self.records.push(r);
    }

    pub fn extend(&mut self, rs: impl IntoIterator<Item = VerificationReport<T>>) {
        self.records.extend(rs);
    }

    /// Sorts by identity name, then parameters.
    pub fn sort(&mut self) {
        self.records
            .sort_by(|a, b| a.identity.cmp(&b.identity).then_with(|| a.params.cmp(&b.params)));
    }

    pub fn checks(&self) -> usize {
        self.records.iter().map(|r| r.checks).sum()
    }

    pub fn is_vacuous(&self) -> bool {
        self.checks() == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationReport<T>> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn inconclusive(&self) -> impl Iterator<Item = &VerificationReport<T>> {
        self.records.iter().filter(|r| r.status == Status::Inconclusive)
    }

    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.passed())
    }

    /// Overall status: any failure wins over inconclusive.
    pub fn status(&self) -> Status {
        if self.failures().next().is_some() {
            Status::Fail
        } else if self.inconclusive().next().is_some() {
            Status::Inconclusive
        } else {
            Status::Pass
        }
    }

    /// 0 pass, 1 failure, 2 inconclusive.
    pub fn exit_code(&self) -> i32 {
        match self.status() {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 2,
        }
    }

    pub fn to_json_lines(&self) -> String {
        let mut s = String::new();
        for r in &self.records {
            s.push_str(&r.to_json_line());
            s.push('\n');
        }
        s
    }
}
