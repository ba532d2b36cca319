//! Report plumbing shared by every subcommand.

use std::io::IsTerminal;

use serde::Serialize;
use serde_json::Value;
use sepdeform_core::suite::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Partial,
    Fail,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub checks: Vec<Check>,
    pub payload: Value,
    pub elapsed_ms: u128,
    /// Human-readable body for text output.
    #[serde(skip)]
    pub text: Vec<String>,
}

impl Report {
    pub fn new(command: String, checks: Vec<Check>, payload: Value, text: Vec<String>) -> Self {
        let passed = checks.iter().filter(|c| c.passed).count();
        let status = if passed == checks.len() {
            Status::Pass
        } else if passed == 0 {
            Status::Fail
        } else {
            Status::Partial
        };
        Report { command, status, checks, payload, elapsed_ms: 0, text }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), passed, detail: detail.into() }
}

struct Palette {
    color: bool,
}

impl Palette {
    fn detect() -> Self {
        let color = std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && std::io::stdout().is_terminal();
        Palette { color }
    }

    fn paint(&self, text: &str, code: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }

    fn verdict(&self, passed: bool) -> String {
        if passed {
            self.paint("PASS", "32")
        } else {
            self.paint("FAIL", "31")
        }
    }
}

pub fn render_text(report: &Report) -> String {
    let p = Palette::detect();
    let mut out = String::new();
    out.push_str(&format!("{}\n", p.paint(&report.command, "1")));
    for line in &report.text {
        out.push_str(&format!("  {line}\n"));
    }
    for c in &report.checks {
        if c.detail.is_empty() {
            out.push_str(&format!("{} {}\n", p.verdict(c.passed), c.name));
        } else {
            out.push_str(&format!("{} {}: {}\n", p.verdict(c.passed), c.name, c.detail));
        }
    }
    let status = match report.status {
        Status::Pass => p.paint("pass", "32"),
        Status::Partial => p.paint("partial", "33"),
        Status::Fail => p.paint("fail", "31"),
    };
    out.push_str(&format!("status: {status} ({} ms)\n", report.elapsed_ms));
    out
}

pub fn render_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("reports serialize")
}
