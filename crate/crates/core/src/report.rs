//! Verification results.
//!
//! A [`Check`] is one named identity evaluated over every basis combination.
//! It stores the witnesses that failed, each with both evaluated sides, in
//! the order they were found (lexicographic in the basis indices).

use std::fmt;

use crate::linear::{format_rational, Rational, Vector};

/// Witnesses kept per check. The total count is always exact.
pub const MAX_WITNESSES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: String,
    /// Zero-based basis indices; rendered one-based.
    pub indices: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(|i| (i + 1).to_string()).collect();
        write!(
            f,
            "{} at ({}): lhs = {}, rhs = {}",
            self.identity,
            idx.join(", "),
            format_coords(&self.lhs),
            format_coords(&self.rhs)
        )
    }
}

pub fn format_coords(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub violations: Vec<Violation>,
    pub violation_count: usize,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            violations: Vec::new(),
            violation_count: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    /// Compares the two sides and records a witness when they differ.
    pub fn compare(&mut self, identity: &str, indices: &[usize], lhs: Vector, rhs: Vector) -> bool {
        if lhs == rhs {
            return true;
        }
        self.push(Violation {
            identity: identity.to_string(),
            indices: indices.to_vec(),
            lhs,
            rhs,
        });
        false
    }

    /// Records a witness when `value` is not the zero vector.
    pub fn expect_zero(&mut self, identity: &str, indices: &[usize], value: Vector) -> bool {
        let zero = vec![Rational::from_integer(0.into()); value.len()];
        self.compare(identity, indices, value, zero)
    }

    pub fn push(&mut self, v: Violation) {
        self.violation_count += 1;
        if self.violations.len() < MAX_WITNESSES {
            self.violations.push(v);
        }
    }

    pub fn first_witness(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "{}: pass", self.name);
        }
        write!(f, "{}: FAIL ({} violations)", self.name, self.violation_count)?;
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        if self.violation_count > self.violations.len() {
            write!(f, "\n  ...")?;
        }
        Ok(())
    }
}

/// Anything that bundles several checks.
pub trait Report {
    fn checks(&self) -> Vec<&Check>;

    fn passed(&self) -> bool {
        self.checks().iter().all(|c| c.passed())
    }
}

impl Report for Check {
    fn checks(&self) -> Vec<&Check> {
        vec![self]
    }
}
