//! Pass/fail reports with witnesses, shared by every validator.

use serde::Serialize;

use crate::linalg::Matrix;

/// Where two matrices first disagree, with both entries rendered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn between(lhs: &Matrix, rhs: &Matrix) -> Option<Witness> {
        if lhs.shape() != rhs.shape() {
            return Some(Witness {
                row: 0,
                col: 0,
                lhs: format!("shape {}x{}", lhs.rows(), lhs.cols()),
                rhs: format!("shape {}x{}", rhs.rows(), rhs.cols()),
            });
        }
        let (row, col) = lhs.first_difference(rhs)?;
        Some(Witness {
            row,
            col,
            lhs: lhs.field().format(lhs.get(row, col)),
            rhs: rhs.field().format(rhs.get(row, col)),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    /// Reported but not counted towards the verdict.
    pub informational: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Report {
        Report { subject: subject.into(), checks: Vec::new() }
    }

    /// Record `lhs == rhs` under `id`.
    pub fn equal(&mut self, id: &str, lhs: &Matrix, rhs: &Matrix) -> bool {
        let witness = Witness::between(lhs, rhs);
        let passed = witness.is_none();
        self.checks.push(Check { id: id.into(), passed, informational: false, witness, note: None });
        passed
    }

    pub fn info_equal(&mut self, id: &str, lhs: &Matrix, rhs: &Matrix) -> bool {
        let passed = self.equal(id, lhs, rhs);
        self.checks.last_mut().unwrap().informational = true;
        passed
    }

    /// Record a check that passed iff no witness was found.
    pub fn witness(&mut self, id: &str, witness: Option<Witness>) -> bool {
        let passed = witness.is_none();
        self.checks.push(Check { id: id.into(), passed, informational: false, witness, note: None });
        passed
    }

    pub fn flag(&mut self, id: &str, passed: bool, note: Option<String>) {
        self.checks.push(Check { id: id.into(), passed, informational: false, witness: None, note });
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.id = format!("{prefix}{}", c.id);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || c.informational)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed && !c.informational)
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            let mark = match (c.passed, c.informational) {
                (true, _) => "pass",
                (false, true) => "info",
                (false, false) => "FAIL",
            };
            write!(f, "  [{mark}] {}", c.id)?;
            if let Some(w) = &c.witness {
                write!(f, "  at ({}, {}): {} != {}", w.row, w.col, w.lhs, w.rhs)?;
            }
            if let Some(n) = &c.note {
                write!(f, "  ({n})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
