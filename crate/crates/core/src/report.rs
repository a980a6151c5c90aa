//! Deterministic plain-text reports.
//!
//! Reports are ordered key/value trees rendered with two-space
//! indentation; identical inputs always produce byte-identical text.
//! Rationals print as `p/q`, never as floats, outside simulator sections.

use std::fmt::Write as _;

/// One named check with an exact pass/fail outcome and a witness string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: true,
            detail: "ok".into(),
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: false,
            detail: detail.into(),
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail_on_fail: impl Into<String>) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, detail_on_fail)
        }
    }
}

/// A list of checks run by one analysis.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Ordered indented key/value text builder.
#[derive(Debug, Clone, Default)]
pub struct Report {
    lines: Vec<(usize, String)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn line(&mut self, indent: usize, text: impl Into<String>) {
        self.lines.push((indent, text.into()));
    }

    pub fn kv(&mut self, indent: usize, key: &str, value: impl std::fmt::Display) {
        self.line(indent, format!("{key}: {value}"));
    }

    pub fn checks(&mut self, indent: usize, report: &CheckReport) {
        for c in &report.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            if c.passed && c.detail == "ok" {
                self.line(indent, format!("{}: {}", c.name, status));
            } else {
                self.line(indent, format!("{}: {} ({})", c.name, status, c.detail));
            }
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (indent, text) in &self.lines {
            for _ in 0..*indent {
                let _ = write!(out, "  ");
            }
            let _ = writeln!(out, "{text}");
        }
        out
    }
}

/// Format a rational vector as `(a, b, c)` with exact entries.
pub fn format_vec(v: &[crate::rat::Rat]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rfrac;

    #[test]
    fn render_is_stable() {
        let mut r = Report::new();
        r.kv(0, "name", "thing");
        r.line(1, "sub: 1/2");
        assert_eq!(r.render(), "name: thing\n  sub: 1/2\n");
    }

    #[test]
    fn vec_formatting() {
        assert_eq!(format_vec(&[rfrac(1, 2), rfrac(-3, 1)]), "(1/2, -3)");
    }
}
