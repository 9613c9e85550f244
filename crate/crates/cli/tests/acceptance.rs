//! Runs the twelve acceptance criteria and prints one line per criterion.

use std::process::{Command, ExitCode};

use leibniz_cli::report::Report;
use leibniz_cli::suite::{self, Scope, SuiteConfig};

fn main() -> ExitCode {
    let run = suite::run(SuiteConfig { scope: Scope::Full, ..SuiteConfig::default() });
    let mut ok = run.criteria.len() == 12;
    for c in &run.criteria {
        println!("{}", c.line());
        for f in c.failures.iter().take(10) {
            println!("    {f}");
        }
        ok &= c.passed;
    }
    ok &= run.report.passed();

    let dir = tempfile::tempdir().expect("temporary directory");
    let path = dir.path().join("suite.json");
    let bin = env!("CARGO_BIN_EXE_leibniz");
    let suite =
        Command::new(bin).args(["paper-suite", "--scope", "quick", "--out"]).arg(&path).output().expect("binary runs");
    let replay = Command::new(bin).arg("replay").arg(&path).output().expect("binary runs");
    let replayed = Report::parse_json(&String::from_utf8_lossy(&replay.stdout)).map(|r| r.checks.len()).unwrap_or(0);
    let binary_ok = suite.status.code() == Some(0) && replay.status.code() == Some(0) && replayed > 0;
    println!(
        "binary paper-suite and replay: {} (suite exit {:?}, replay exit {:?}, {replayed} witnesses confirmed)",
        if binary_ok { "PASS" } else { "FAIL" },
        suite.status.code(),
        replay.status.code()
    );
    ok &= binary_ok;

    println!("acceptance: {} in {} ms", if ok { "PASS" } else { "FAIL" }, run.report.timing_ms);
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
