//! Pass/fail reports shared by every checker.

use serde::Serialize;

use crate::exactalg::{Field, Matrix};

/// One named check with an optional witness for failures.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport::default()
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.items.push(CheckItem { name: name.into(), passed: true, witness: None, detail: None });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: Option<String>) {
        self.items.push(CheckItem { name: name.into(), passed: false, witness, detail: None });
    }

    pub fn record(&mut self, name: impl Into<String>, passed: bool, witness: Option<String>) {
        if passed {
            self.pass(name);
        } else {
            self.fail(name, witness);
        }
    }

    /// Adds a free-form detail to the most recent item.
    pub fn annotate(&mut self, detail: impl Into<String>) {
        if let Some(last) = self.items.last_mut() {
            last.detail = Some(detail.into());
        }
    }

    /// Compares two matrices; on mismatch the witness names the first
    /// domain basis vector (column) on which they differ.
    pub fn equal<K: Field>(
        &mut self,
        name: impl Into<String>,
        lhs: &Matrix<K>,
        rhs: &Matrix<K>,
        column_label: impl Fn(usize) -> String,
    ) -> bool {
        let name = name.into();
        if lhs.shape() != rhs.shape() {
            self.fail(name, Some(format!("shape {:?} vs {:?}", lhs.shape(), rhs.shape())));
            return false;
        }
        match lhs.first_difference(rhs) {
            None => {
                self.pass(name);
                true
            }
            Some((_, col)) => {
                self.fail(name, Some(column_label(col)));
                false
            }
        }
    }

    /// [`CheckReport::equal`] with plain column indices as witnesses.
    pub fn equal_indexed<K: Field>(&mut self, name: impl Into<String>, lhs: &Matrix<K>, rhs: &Matrix<K>) -> bool {
        self.equal(name, lhs, rhs, |c| format!("basis index {c}"))
    }

    /// Appends all items of `other`, prefixing their names.
    pub fn extend_prefixed(&mut self, prefix: &str, other: CheckReport) {
        for mut item in other.items {
            if !prefix.is_empty() {
                item.name = format!("{prefix}: {}", item.name);
            }
            self.items.push(item);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckItem> {
        self.failures().next()
    }

    pub fn find(&self, name: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.name == name)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}
