//! Report documents: a machine-readable key/value section that is
//! byte-stable for identical inputs, and a human rendering of the same data.

use std::fmt::Write as _;

pub const REPORT_VERSION: &str = "qalg3-report 1";

/// Verdict of a whole invocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone)]
pub struct ReportDocument {
    /// Ordered key/value pairs; emission order is fixed by construction.
    entries: Vec<(String, String)>,
    /// Human-readable lines.
    prose: Vec<String>,
    verdict: Verdict,
}

impl ReportDocument {
    pub fn new(command: &str, case: &str, order: usize) -> Self {
        let mut doc = ReportDocument {
            entries: Vec::new(),
            prose: Vec::new(),
            verdict: Verdict::Pass,
        };
        doc.push("command", command);
        doc.push("case", case);
        doc.push("order", order.to_string());
        doc
    }

    pub fn push(&mut self, key: &str, value: impl Into<String>) {
        self.entries.push((key.to_string(), value.into()));
    }

    /// Record a check outcome; `first_fail` is the lowest failing z-order.
    pub fn push_check(&mut self, key: &str, ok: bool, first_fail: Option<usize>) {
        self.push(key, if ok { "pass" } else { "fail" });
        match first_fail {
            Some(k) => self.push(&format!("{key}.first_fail_order"), k.to_string()),
            None => self.push(&format!("{key}.first_fail_order"), "-"),
        }
        if !ok {
            self.verdict = Verdict::Fail;
        }
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.prose.push(line.into());
    }

    pub fn fail(&mut self) {
        self.verdict = Verdict::Fail;
    }

    pub fn verdict(&self) -> Verdict {
        self.verdict
    }

    pub fn merge_section(&mut self, prefix: &str, other: &ReportDocument) {
        for (k, v) in &other.entries {
            self.entries.push((format!("{prefix}.{k}"), v.clone()));
        }
        for l in &other.prose {
            self.prose.push(format!("[{prefix}] {l}"));
        }
        if other.verdict == Verdict::Fail {
            self.verdict = Verdict::Fail;
        }
    }

    /// Line-delimited machine section with a versioned header.
    pub fn machine(&self) -> String {
        let mut out = String::new();
        out.push_str(REPORT_VERSION);
        out.push('\n');
        for (k, v) in &self.entries {
            let _ = writeln!(out, "{k}={v}");
        }
        let _ = writeln!(
            out,
            "result={}",
            match self.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "fail",
            }
        );
        out
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            let _ = writeln!(out, "{k:<42} {v}");
        }
        for p in &self.prose {
            let _ = writeln!(out, "  {p}");
        }
        let _ = writeln!(
            out,
            "=> {}",
            match self.verdict {
                Verdict::Pass => "all checks passed",
                Verdict::Fail => "CHECK FAILURE",
            }
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn machine_section_is_versioned_and_ordered() {
        let mut doc = ReportDocument::new("verify", "2.1.1", 6);
        doc.push_check("check.homomorphism.AB", true, None);
        let text = doc.machine();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], REPORT_VERSION);
        assert_eq!(lines[1], "command=verify");
        assert_eq!(lines[2], "case=2.1.1");
        assert_eq!(lines[3], "order=6");
        assert_eq!(lines[4], "check.homomorphism.AB=pass");
        assert_eq!(lines.last().unwrap(), &"result=pass");
    }

    #[test]
    fn failures_flip_the_verdict() {
        let mut doc = ReportDocument::new("verify", "x", 2);
        doc.push_check("check.counit.A", false, Some(1));
        assert_eq!(doc.verdict(), Verdict::Fail);
        assert!(doc.machine().contains("check.counit.A.first_fail_order=1"));
        assert!(doc.machine().ends_with("result=fail\n"));
    }
}
