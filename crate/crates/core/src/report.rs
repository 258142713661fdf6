use serde::Serialize;
use std::fmt;

/// Verdict for a single axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail { witness: String },
    Skipped { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    #[serde(flatten)]
    pub outcome: Outcome,
}

/// Per-axiom verdicts of one checker run. Failures always carry the first
/// witness found by the sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub subject: String,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn new(subject: impl Into<String>) -> Self {
        AxiomReport {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    /// Records `axiom` as passed when `witness` is `None`, failed otherwise.
    pub fn record(&mut self, axiom: impl Into<String>, witness: Option<String>) {
        let outcome = match witness {
            None => Outcome::Pass,
            Some(witness) => Outcome::Fail { witness },
        };
        self.checks.push(AxiomCheck {
            axiom: axiom.into(),
            outcome,
        });
    }

    pub fn skip(&mut self, axiom: impl Into<String>, reason: impl Into<String>) {
        self.checks.push(AxiomCheck {
            axiom: axiom.into(),
            outcome: Outcome::Skipped {
                reason: reason.into(),
            },
        });
    }

    /// Appends the checks of `other`, prefixing their axiom names.
    pub fn absorb(&mut self, prefix: &str, other: AxiomReport) {
        for mut check in other.checks {
            check.axiom = format!("{prefix}{}", check.axiom);
            self.checks.push(check);
        }
    }

    /// True when no check failed. Skipped checks do not count as failures.
    pub fn passed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| !matches!(c.outcome, Outcome::Fail { .. }))
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks
            .iter()
            .filter(|c| matches!(c.outcome, Outcome::Fail { .. }))
    }

    pub fn outcome(&self, axiom: &str) -> Option<&Outcome> {
        self.checks
            .iter()
            .find(|c| c.axiom == axiom)
            .map(|c| &c.outcome)
    }

    pub fn is_pass(&self, axiom: &str) -> bool {
        matches!(self.outcome(axiom), Some(Outcome::Pass))
    }

    pub fn is_fail(&self, axiom: &str) -> bool {
        matches!(self.outcome(axiom), Some(Outcome::Fail { .. }))
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for check in &self.checks {
            match &check.outcome {
                Outcome::Pass => writeln!(f, "  pass  {}", check.axiom)?,
                Outcome::Fail { witness } => {
                    writeln!(f, "  FAIL  {}: {}", check.axiom, witness)?
                }
                Outcome::Skipped { reason } => {
                    writeln!(f, "  skip  {} ({})", check.axiom, reason)?
                }
            }
        }
        Ok(())
    }
}
