use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use leibniz_core::Verdict;

use crate::document::{AlgebraDocument, AnyTable};
use crate::error::{CliError, EXIT_CHECK_FAILED, EXIT_PASS};
use crate::witness::WitnessDoc;

pub const TOOL: &str = "leibniz";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    /// Key into [`Report::documents`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subject: Option<String>,
    pub verdict: Verdict,
    /// The asserted value; unasserted checks never fail.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub statement: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckRecord {
    pub fn new(name: impl Into<String>, verdict: Verdict) -> Self {
        CheckRecord {
            name: name.into(),
            subject: None,
            verdict,
            expected: None,
            witness: None,
            statement: None,
            notes: Vec::new(),
        }
    }

    pub fn subject(mut self, id: impl Into<String>) -> Self {
        self.subject = Some(id.into());
        self
    }

    pub fn expect(mut self, value: bool) -> Self {
        self.expected = Some(value);
        self
    }

    pub fn witness(mut self, w: Option<WitnessDoc>) -> Self {
        self.witness = w;
        self
    }

    pub fn statement(mut self, s: impl Into<String>) -> Self {
        self.statement = Some(s.into());
        self
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }

    /// An asserted check whose decided verdict contradicts the assertion.
    pub fn failed(&self) -> bool {
        matches!((self.expected, self.verdict.known()), (Some(e), Some(v)) if e != v)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub checks: usize,
    pub asserted: usize,
    pub failed: usize,
    pub unknown: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input_digest: String,
    #[serde(default)]
    pub documents: BTreeMap<String, AlgebraDocument>,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<serde_json::Value>,
    pub timing_ms: u64,
}

impl Report {
    pub fn new(command: impl Into<String>, input_digest: String) -> Self {
        Report {
            tool: TOOL.into(),
            version: VERSION.into(),
            command: command.into(),
            input_digest,
            documents: BTreeMap::new(),
            checks: Vec::new(),
            summary: Summary::default(),
            details: None,
            timing_ms: 0,
        }
    }

    pub fn add_document(&mut self, key: impl Into<String>, doc: AlgebraDocument) {
        self.documents.entry(key.into()).or_insert(doc);
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.checks.push(record);
    }

    /// Recomputes the summary and stamps the elapsed time.
    pub fn finish(&mut self, started: std::time::Instant) {
        self.summary = Summary {
            checks: self.checks.len(),
            asserted: self.checks.iter().filter(|c| c.expected.is_some()).count(),
            failed: self.checks.iter().filter(|c| c.failed()).count(),
            unknown: self.checks.iter().filter(|c| c.verdict == Verdict::Unknown).count(),
        };
        self.timing_ms = started.elapsed().as_millis() as u64;
    }

    pub fn passed(&self) -> bool {
        !self.checks.iter().any(CheckRecord::failed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            EXIT_PASS
        } else {
            EXIT_CHECK_FAILED
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn parse_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed report: {e}")))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {} (input {})", self.tool, self.version, self.command, short(&self.input_digest));
        for c in &self.checks {
            let status = match (c.expected, c.failed()) {
                (None, _) => "info",
                (Some(_), true) => "FAIL",
                (Some(_), false) if c.verdict == Verdict::Unknown => "unknown",
                (Some(_), false) => "ok",
            };
            let subject = c.subject.as_deref().map(|s| format!(" [{s}]")).unwrap_or_default();
            let expected = c.expected.map(|e| format!(" (expected {e})")).unwrap_or_default();
            let _ = writeln!(out, "{status:>7}  {}{subject}: {}{expected}", c.name, c.verdict);
            if let Some(s) = &c.statement {
                let _ = writeln!(out, "         {s}");
            }
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "         witness: {}", self.describe_witness(c, w));
            }
            for n in &c.notes {
                let _ = writeln!(out, "         note: {n}");
            }
        }
        if let Some(d) = &self.details {
            let _ = writeln!(out, "details:");
            for line in serde_json::to_string_pretty(d).expect("json values serialize").lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} checks, {} asserted, {} failed, {} unknown, {} ms",
            s.checks, s.asserted, s.failed, s.unknown, self.timing_ms
        );
        out
    }

    fn describe_witness(&self, c: &CheckRecord, w: &WitnessDoc) -> String {
        let table = c.subject.as_ref().and_then(|s| self.documents.get(s)).and_then(|d| d.table().ok());
        match table {
            Some(AnyTable::Finite(t)) => w.describe(&t),
            Some(AnyTable::Rational(t)) => w.describe(&t),
            None => w.kind().to_string(),
        }
    }
}

fn short(digest: &str) -> &str {
    &digest[..digest.len().min(12)]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Writes `text` to `path` through a temporary file in the same directory,
/// or to standard output.
pub fn emit(text: &str, path: Option<&Path>) -> Result<(), CliError> {
    let Some(path) = path else {
        print!("{text}");
        if !text.ends_with('\n') {
            println!();
        }
        return Ok(());
    };
    let io = |source| CliError::Io { path: path.display().to_string(), source };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(text.as_bytes()).map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn only_decided_contradictions_fail() {
        assert!(!CheckRecord::new("a", Verdict::False).failed());
        assert!(!CheckRecord::new("a", Verdict::Unknown).expect(true).failed());
        assert!(!CheckRecord::new("a", Verdict::False).expect(false).failed());
        assert!(CheckRecord::new("a", Verdict::False).expect(true).failed());
    }

    #[test]
    fn summary_and_round_trip() {
        let mut r = Report::new("test", "00".into());
        r.push(CheckRecord::new("a", Verdict::True).expect(true));
        r.push(CheckRecord::new("b", Verdict::Unknown).expect(true));
        r.push(CheckRecord::new("c", Verdict::False).expect(true).note("n"));
        r.finish(std::time::Instant::now());
        assert_eq!(r.summary, Summary { checks: 3, asserted: 3, failed: 1, unknown: 1 });
        assert_eq!(r.exit_code(), EXIT_CHECK_FAILED);
        assert_eq!(Report::parse_json(&r.to_json()).unwrap(), r);
        assert!(r.to_text().contains("   FAIL  c: false (expected true)"));
    }
}
