use serde::{Deserialize, Serialize};

use crate::exact::Rational;

/// What a single check is about.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Subject {
    Global,
    Edge { edge: usize },
    EdgeSet { edges: Vec<usize> },
    Assignment { lists: Vec<Vec<u32>> },
}

/// One inequality `value (relation) bound` as evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub subject: Subject,
    /// Checks outside the statement's hypothesis are reported but do not
    /// affect the verdict.
    pub in_hypothesis: bool,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn new(subject: Subject, holds: bool) -> Self {
        Check {
            subject,
            in_hypothesis: true,
            holds,
            value: None,
            bound: None,
            note: None,
        }
    }

    pub fn with_values(mut self, value: Rational, bound: Rational) -> Self {
        self.value = Some(value);
        self.bound = Some(bound);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn outside_hypothesis(mut self) -> Self {
        self.in_hypothesis = false;
        self
    }
}

/// Outcome of a certificate or inequality sweep. A failing report always
/// names the subject of its first failing check as the witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Check>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub summary: Vec<(String, Rational)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    pub checks: Vec<Check>,
}

impl CertificateReport {
    pub fn new(name: impl Into<String>) -> Self {
        CertificateReport {
            name: name.into(),
            passed: true,
            witness: None,
            summary: Vec::new(),
            warnings: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        if check.in_hypothesis && !check.holds {
            if self.passed {
                self.witness = Some(check.clone());
            }
            self.passed = false;
        }
        self.checks.push(check);
    }

    pub fn note_value(&mut self, key: impl Into<String>, value: Rational) {
        self.summary.push((key.into(), value));
    }

    pub fn warn(&mut self, msg: impl Into<String>) {
        self.warnings.push(msg.into());
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.in_hypothesis && !c.holds)
    }

    /// Folds `other` into this report, keeping the first witness.
    pub fn absorb(&mut self, other: CertificateReport) {
        for c in other.checks {
            self.push(c);
        }
        self.warnings.extend(other.warnings);
        self.summary.extend(other.summary);
    }
}
