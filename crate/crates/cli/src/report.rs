use lftop_core::{AxiomCheck, AxiomReport, Outcome};
use serde::Serialize;
use std::fmt::{self, Write as _};
use std::time::Duration;

#[derive(Clone, Debug, Serialize)]
pub struct Fact {
    pub key: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub subject: String,
    pub checks: Vec<AxiomCheck>,
    pub facts: Vec<Fact>,
    /// Wall-clock figures; human output only.
    #[serde(skip)]
    pub timings: Vec<(String, Duration)>,
}

impl Section {
    pub fn new(subject: impl Into<String>) -> Self {
        Section {
            subject: subject.into(),
            checks: Vec::new(),
            facts: Vec::new(),
            timings: Vec::new(),
        }
    }

    pub fn from_report(subject: impl Into<String>, report: AxiomReport) -> Self {
        let mut s = Section::new(subject);
        s.checks = report.checks;
        s
    }

    pub fn absorb(&mut self, prefix: &str, report: AxiomReport) {
        self.checks.extend(report.checks.into_iter().map(|mut c| {
            c.axiom = format!("{prefix}{}", c.axiom);
            c
        }));
    }

    pub fn check(&mut self, axiom: impl Into<String>, witness: Option<String>) {
        let mut r = AxiomReport::default();
        r.record(axiom, witness);
        self.checks.extend(r.checks);
    }

    pub fn skip(&mut self, axiom: impl Into<String>, reason: impl Into<String>) {
        let mut r = AxiomReport::default();
        r.skip(axiom, reason);
        self.checks.extend(r.checks);
    }

    pub fn fact(&mut self, key: impl Into<String>, value: impl ToString) {
        self.facts.push(Fact {
            key: key.into(),
            value: value.to_string(),
        });
    }

    pub fn time(&mut self, what: impl Into<String>, d: Duration) {
        self.timings.push((what.into(), d));
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub verdict: &'static str,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(command: impl Into<String>, sections: Vec<Section>) -> Self {
        let failed = sections
            .iter()
            .flat_map(|s| &s.checks)
            .any(|c| matches!(c.outcome, Outcome::Fail { .. }));
        Report {
            command: command.into(),
            verdict: if failed { "fail" } else { "pass" },
            sections,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn to_machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for s in &self.sections {
            let _ = writeln!(out, "== {} ==", s.subject);
            for fact in &s.facts {
                let _ = writeln!(out, "  {}: {}", fact.key, fact.value);
            }
            for c in &s.checks {
                let _ = match &c.outcome {
                    Outcome::Pass => writeln!(out, "  pass  {}", c.axiom),
                    Outcome::Fail { witness } => writeln!(out, "  FAIL  {}: {witness}", c.axiom),
                    Outcome::Skipped { reason } => writeln!(out, "  skip  {} ({reason})", c.axiom),
                };
            }
            for (what, d) in &s.timings {
                let _ = writeln!(out, "  time  {what}: {:.3}s", d.as_secs_f64());
            }
        }
        let _ = writeln!(out, "{}: {}", self.command, self.verdict);
        f.write_str(&out)
    }
}
