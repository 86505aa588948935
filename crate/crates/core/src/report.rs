//! Pass/fail reports shared by all verifiers.

use crate::linalg::{LinMap, LinalgError};
use serde::Serialize;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, witness: Option<String>) {
        self.entries.push(CheckEntry { name: name.into(), passed, witness });
    }

    /// Records whether two maps agree; on failure the witness names the first basis vector of
    /// the domain on which they differ.
    pub fn push_eq(&mut self, name: impl Into<String>, lhs: &LinMap, rhs: &LinMap) {
        let name = name.into();
        match lhs.first_difference(rhs) {
            Ok(None) => self.push(name, true, None),
            Ok(Some((_, j))) => {
                let w = format!("on basis vector {}", lhs.domain().label(j));
                self.push(name, false, Some(w))
            }
            Err(e) => self.push(name, false, Some(e.to_string())),
        }
    }

    /// Like [`push_eq`](Self::push_eq) for composites that may fail to typecheck.
    pub fn push_eq_result(
        &mut self,
        name: impl Into<String>,
        lhs: Result<LinMap, LinalgError>,
        rhs: Result<LinMap, LinalgError>,
    ) {
        match (lhs, rhs) {
            (Ok(a), Ok(b)) => self.push_eq(name, &a, &b),
            (Err(e), _) | (_, Err(e)) => self.push(name, false, Some(e.to_string())),
        }
    }

    /// Appends another report, prefixing its entry names.
    pub fn extend_prefixed(&mut self, prefix: &str, other: CheckReport) {
        for mut e in other.entries {
            e.name = format!("{prefix}{}", e.name);
            self.entries.push(e);
        }
    }
}
