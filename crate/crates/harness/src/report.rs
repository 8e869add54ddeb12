//! Run reports and their human and JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use strange_core::cyclotomic::CycNum;
use strange_core::series::Mismatch;
use strange_core::Rational;

use crate::catalog::{Mode, Param};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    RootRejected,
    Error,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::RootRejected => "root_rejected",
            Status::Error => "error",
        }
    }

    /// Whether this status makes a run unsuccessful.
    pub fn is_failure(self) -> bool {
        matches!(self, Status::Fail | Status::Error)
    }
}

/// An element of a cyclotomic field as its order and coordinate vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycValue {
    pub order: u32,
    pub coords: Vec<String>,
}

impl CycValue {
    pub fn from_cyc(value: &CycNum) -> CycValue {
        CycValue {
            order: value.order(),
            coords: value.coords().iter().map(rational_string).collect(),
        }
    }
}

/// Rationals are always written `p/q`, integers included.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Location and values of the first disagreement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Coefficient of `x^x_degree q^q_degree` in a formal identity.
    Series {
        form: String,
        q_degree: u32,
        x_degree: usize,
        expected: String,
        got: String,
    },
    /// A Bailey pair relation or beta comparison failing at index `n`.
    Pair {
        check: String,
        n: usize,
        q_degree: u32,
        x_degree: usize,
        expected: String,
        got: String,
    },
    /// Coefficient of `t^t_degree` at a root of unity.
    Root {
        root: u32,
        t_degree: usize,
        lhs: CycValue,
        rhs: CycValue,
    },
}

impl Witness {
    pub fn series(form: &str, m: &Mismatch) -> Witness {
        Witness::Series {
            form: form.to_string(),
            q_degree: m.q_degree,
            x_degree: m.x_degree,
            expected: rational_string(&m.expected),
            got: rational_string(&m.got),
        }
    }

    pub fn pair(check: &str, n: usize, m: &Mismatch) -> Witness {
        Witness::Pair {
            check: check.to_string(),
            n,
            q_degree: m.q_degree,
            x_degree: m.x_degree,
            expected: rational_string(&m.expected),
            got: rational_string(&m.got),
        }
    }

    fn summary(&self) -> String {
        match self {
            Witness::Series {
                form,
                q_degree,
                x_degree,
                expected,
                got,
            } => format!("{form}: [x^{x_degree} q^{q_degree}] expected {expected}, got {got}"),
            Witness::Pair {
                check,
                n,
                q_degree,
                x_degree,
                expected,
                got,
            } => format!("{check} n={n}: [x^{x_degree} q^{q_degree}] expected {expected}, got {got}"),
            Witness::Root {
                root,
                t_degree,
                lhs,
                rhs,
            } => format!(
                "root {root}, t^{t_degree}: lhs ({}) rhs ({})",
                lhs.coords.join(", "),
                rhs.coords.join(", ")
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub millis: u64,
    pub cached: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub entry: String,
    pub target: String,
    pub params: BTreeMap<String, Param>,
    pub mode: Mode,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    /// Error message or rejection reason.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
    pub timing: Timing,
    pub engine_version: String,
    pub catalog_digest: String,
}

impl RunReport {
    /// The report with timing fields cleared, for comparisons.
    pub fn without_timing(&self) -> RunReport {
        RunReport {
            timing: Timing {
                millis: 0,
                cached: false,
            },
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
}

pub fn emit_json(reports: &[RunReport]) -> String {
    let mut out = serde_json::to_string_pretty(reports).expect("reports serialize");
    out.push('\n');
    out
}

pub fn emit_human(reports: &[RunReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<14} {:<8} {:<22} {:<16} {:<36} {:>8}",
        "STATUS", "MODE", "ENTRY", "TARGET", "PARAMS", "MS"
    );
    for r in reports {
        let params = r
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let ms = if r.timing.cached {
            "cached".to_string()
        } else {
            r.timing.millis.to_string()
        };
        let _ = writeln!(
            out,
            "{:<14} {:<8} {:<22} {:<16} {:<36} {:>8}",
            r.status.name(),
            r.mode.name(),
            r.entry,
            r.target,
            params,
            ms
        );
        if let Some(w) = &r.witness {
            let _ = writeln!(out, "    witness: {}", w.summary());
        }
        if let Some(d) = &r.detail {
            let _ = writeln!(out, "    {d}");
        }
    }
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let _ = writeln!(
        out,
        "{} checks: {} pass, {} fail, {} root_rejected, {} error",
        reports.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::RootRejected),
        count(Status::Error)
    );
    out
}

pub fn emit_report(reports: &[RunReport], format: Format) -> String {
    match format {
        Format::Human => emit_human(reports),
        Format::Json => emit_json(reports),
    }
}
