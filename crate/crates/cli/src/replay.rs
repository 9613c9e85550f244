use leibniz_core::Verdict;

use crate::document::AnyTable;
use crate::report::{CheckRecord, Report};
use crate::witness::WitnessDoc;

fn replay_one(report: &Report, check: &CheckRecord, w: &WitnessDoc) -> Result<(), String> {
    if check.verdict != Verdict::False {
        return Err(format!("a witness is attached to a {} verdict", check.verdict));
    }
    let key = check.subject.as_ref().ok_or("the witness has no subject document")?;
    let doc = report.documents.get(key).ok_or_else(|| format!("document {key:?} is missing"))?;
    match doc.table().map_err(|e| e.to_string())? {
        AnyTable::Finite(t) => w.replay(t),
        AnyTable::Rational(t) => w.replay(t),
    }
}

/// Re-checks every stored witness against its stored document. Every asserted
/// false verdict about a document must carry a witness that re-validates.
pub fn replay_records(report: &Report) -> Vec<CheckRecord> {
    report
        .checks
        .iter()
        .filter_map(|c| {
            let result = match (&c.witness, c.verdict, &c.subject) {
                (Some(w), _, _) => replay_one(report, c, w),
                (None, Verdict::False, Some(_)) if c.expected.is_some() => {
                    Err("asserted false verdict without a witness".into())
                }
                _ => return None,
            };
            let mut r = CheckRecord::new(format!("replay {}", c.name), Verdict::from_bool(result.is_ok())).expect(true);
            r.subject = c.subject.clone();
            if let Err(e) = result {
                r = r.note(e);
            }
            Some(r)
        })
        .collect()
}

pub fn replay(report: &Report, input_digest: String) -> Report {
    let started = std::time::Instant::now();
    let mut out = Report::new("replay", input_digest);
    out.documents = report.documents.clone();
    for r in replay_records(report) {
        out.push(r);
    }
    out.finish(started);
    out
}
