//! Check results and the report document emitted by the CLI.
//!
//! The JSON rendering is fully deterministic for a fixed configuration and
//! seed: results are canonically sorted and wall-clock timings are kept out
//! of the JSON document (text output shows them).

use crate::twist::TypoLedgerEntry;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    RecordedMismatch,
    Vacuous,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::RecordedMismatch => "recorded-mismatch",
            CheckStatus::Vacuous => "vacuous",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LedgerEntryDoc {
    pub family: String,
    pub generator: String,
    pub note: String,
    pub readings: Vec<ReadingDoc>,
    pub corrected: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReadingDoc {
    pub label: String,
    pub matched: bool,
}

impl From<&TypoLedgerEntry> for LedgerEntryDoc {
    fn from(entry: &TypoLedgerEntry) -> Self {
        Self {
            family: entry.family.clone(),
            generator: entry.generator.clone(),
            note: entry.note.clone(),
            readings: entry
                .readings
                .iter()
                .map(|r| ReadingDoc {
                    label: r.label.clone(),
                    matched: r.matched,
                })
                .collect(),
            corrected: entry.corrected.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub subject: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub typo_ledger: Vec<LedgerEntryDoc>,
    /// Wall-clock milliseconds; text output only, never serialized.
    #[serde(skip)]
    pub timing_ms: u128,
}

impl CheckResult {
    pub fn new(check: impl Into<String>, subject: impl Into<String>, status: CheckStatus) -> Self {
        Self {
            check: check.into(),
            subject: subject.into(),
            status,
            residual: None,
            detail: None,
            typo_ledger: Vec::new(),
            timing_ms: 0,
        }
    }

    pub fn with_residual(mut self, residual: impl Into<String>) -> Self {
        self.residual = Some(residual.into());
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub recorded_mismatch: usize,
    pub vacuous: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub version: u32,
    pub tool: &'static str,
    pub config: serde_json::Value,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
    pub exit_code: i32,
}

impl Report {
    /// Assembles a report: results are sorted canonically and the exit code
    /// reflects the status counts (`strict` promotes recorded mismatches).
    pub fn assemble(
        config: serde_json::Value,
        mut results: Vec<CheckResult>,
        strict: bool,
    ) -> Self {
        results.sort_by(|a, b| (&a.check, &a.subject).cmp(&(&b.check, &b.subject)));
        let mut summary = Summary::default();
        for result in &results {
            match result.status {
                CheckStatus::Pass => summary.pass += 1,
                CheckStatus::Fail => summary.fail += 1,
                CheckStatus::RecordedMismatch => summary.recorded_mismatch += 1,
                CheckStatus::Vacuous => summary.vacuous += 1,
            }
        }
        let exit_code = if summary.fail > 0 || (strict && summary.recorded_mismatch > 0) {
            1
        } else {
            0
        };
        Self {
            version: 1,
            tool: "twistkit",
            config,
            results,
            summary,
            exit_code,
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for result in &self.results {
            let status = format!("[{}]", result.status.as_str().to_uppercase());
            out.push_str(&format!(
                "{status:<21} {:<14} {} ({} ms)\n",
                result.check, result.subject, result.timing_ms
            ));
            if let (CheckStatus::Fail, Some(residual)) = (result.status, &result.residual) {
                out.push_str(&format!("    residual: {residual}\n"));
            }
            if let Some(detail) = &result.detail {
                out.push_str(&format!("    {detail}\n"));
            }
            for entry in &result.typo_ledger {
                out.push_str(&format!(
                    "    ledger[{} / {}]: {}\n",
                    entry.family, entry.generator, entry.note
                ));
                for reading in &entry.readings {
                    out.push_str(&format!(
                        "      reading {:<40} matched: {}\n",
                        reading.label, reading.matched
                    ));
                }
            }
        }
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} recorded-mismatch, {} vacuous\n",
            self.summary.pass, self.summary.fail, self.summary.recorded_mismatch, self.summary.vacuous
        ));
        out
    }
}
