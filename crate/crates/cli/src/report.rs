use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use anyhow::{Context, Result};

pub const HEADER: [&str; 7] = ["check", "subject", "kind", "n", "expected", "actual", "status"];

/// One line of a CSV report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub check: String,
    pub subject: String,
    pub kind: String,
    pub n: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Measurement without an expected value.
    Ok,
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

impl Row {
    pub fn measured(check: &str, subject: &str, kind: &str, n: &str, actual: impl ToString) -> Self {
        Row {
            check: check.into(),
            subject: subject.into(),
            kind: kind.into(),
            n: n.into(),
            expected: String::new(),
            actual: actual.to_string(),
            status: Status::Ok,
        }
    }

    /// A check that passes when `passed` is true.
    pub fn checked(
        check: &str,
        subject: &str,
        kind: &str,
        n: &str,
        expected: impl ToString,
        actual: impl ToString,
        passed: bool,
    ) -> Self {
        Row {
            check: check.into(),
            subject: subject.into(),
            kind: kind.into(),
            n: n.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            status: if passed { Status::Pass } else { Status::Fail },
        }
    }

    /// A check passing when expected and actual render identically.
    pub fn compare(check: &str, subject: &str, kind: &str, n: &str, expected: impl ToString, actual: impl ToString) -> Self {
        let (e, a) = (expected.to_string(), actual.to_string());
        let passed = e == a;
        Row::checked(check, subject, kind, n, e, a, passed)
    }

    fn record(&self) -> [&str; 7] {
        [
            &self.check,
            &self.subject,
            &self.kind,
            &self.n,
            &self.expected,
            &self.actual,
            self.status.as_str(),
        ]
    }
}

pub fn write_rows(rows: &[Row], out: Option<&Path>) -> Result<()> {
    let sink: Box<dyn Write> = match out {
        Some(p) => Box::new(File::create(p).with_context(|| format!("creating {}", p.display()))?),
        None => Box::new(io::stdout().lock()),
    };
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(HEADER)?;
    for r in rows {
        w.write_record(r.record())?;
    }
    w.flush()?;
    Ok(())
}
