//! Run reports: deterministic key-value text plus an optional JSON variant.
//!
//! Enclosures are serialized as outward-rounded decimal endpoint pairs, so
//! printing never tightens a bound. Timing lines are comments, excluded
//! from the deterministic payload.

use serde::Serialize;

use rhverify_core::ball::Ball;
use rhverify_core::verify::{StatementKind, Verdict, VerdictStatus};

pub const REPORT_DIGITS: usize = 25;

#[derive(Serialize)]
pub struct EnclosureOut {
    pub lo: String,
    pub hi: String,
}

pub fn enclosure(b: &Ball) -> EnclosureOut {
    let (lo, hi) = b.to_decimal_pair(REPORT_DIGITS);
    EnclosureOut { lo, hi }
}

#[derive(Serialize)]
pub struct VerdictOut {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta: Option<EnclosureOut>,
    pub lhs: EnclosureOut,
    pub rhs: EnclosureOut,
    pub status: String,
}

pub fn kind_name(kind: &StatementKind) -> String {
    match kind {
        StatementKind::RhWindow => "rh-window".into(),
        StatementKind::OffLineCount { m } => format!("off-line-count({m})"),
        StatementKind::OnLineMissing { m } => format!("on-line-missing({m})"),
        StatementKind::RealZeros { m } => format!("real-zeros({m})"),
        StatementKind::CentralMultiplicity { m } => format!("central-multiplicity({m})"),
        StatementKind::Completeness => "completeness".into(),
        StatementKind::Incompleteness => "incompleteness".into(),
    }
}

pub fn verdict_out(v: &Verdict) -> VerdictOut {
    VerdictOut {
        kind: kind_name(&v.kind),
        eta: v.eta.as_ref().map(enclosure),
        lhs: enclosure(&v.lhs),
        rhs: enclosure(&v.rhs),
        status: match v.status {
            VerdictStatus::Verified => "verified".into(),
            VerdictStatus::Inconclusive => "inconclusive".into(),
        },
    }
}

/// Everything one invocation reports.
#[derive(Serialize)]
pub struct RunReport {
    pub command: String,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    pub parameters: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<(String, EnclosureOut)>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<VerdictOut>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl RunReport {
    pub fn new(command: &str) -> RunReport {
        RunReport {
            command: command.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            instance: None,
            parameters: Vec::new(),
            values: Vec::new(),
            verdicts: Vec::new(),
            notes: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.parameters.push((key.into(), value.to_string()));
    }

    pub fn value(&mut self, key: &str, b: &Ball) {
        self.values.push((key.into(), enclosure(b)));
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command = {}\n", self.command));
        out.push_str(&format!("version = {}\n", self.version));
        if let Some(instance) = &self.instance {
            out.push_str(&format!("instance = {instance}\n"));
        }
        for (k, v) in &self.parameters {
            out.push_str(&format!("{k} = {v}\n"));
        }
        for (k, e) in &self.values {
            out.push_str(&format!("{k}.lo = {}\n{k}.hi = {}\n", e.lo, e.hi));
        }
        for (i, v) in self.verdicts.iter().enumerate() {
            let n = i + 1;
            out.push_str(&format!("verdict.{n}.kind = {}\n", v.kind));
            if let Some(eta) = &v.eta {
                out.push_str(&format!("verdict.{n}.eta = [{}, {}]\n", eta.lo, eta.hi));
            }
            out.push_str(&format!("verdict.{n}.lhs = [{}, {}]\n", v.lhs.lo, v.lhs.hi));
            out.push_str(&format!("verdict.{n}.rhs = [{}, {}]\n", v.rhs.lo, v.rhs.hi));
            out.push_str(&format!("verdict.{n}.status = {}\n", v.status));
        }
        for note in &self.notes {
            out.push_str(&format!("note = {note}\n"));
        }
        // Non-normative: excluded from the byte-determinism contract.
        out.push_str(&format!("# elapsed_ms = {}\n", self.elapsed_ms));
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}
