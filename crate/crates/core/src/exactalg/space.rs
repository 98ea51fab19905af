//! Based vector spaces: a dimension together with distinct basis labels.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("duplicate basis label `{0}`")]
pub struct DuplicateLabel(pub String);

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasedSpace {
    labels: Vec<String>,
}

impl BasedSpace {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self, DuplicateLabel> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(DuplicateLabel(l.clone()));
            }
        }
        Ok(BasedSpace { labels })
    }

    /// Labels `prefix0, prefix1, …`.
    pub fn indexed(prefix: &str, dim: usize) -> Self {
        BasedSpace { labels: (0..dim).map(|i| format!("{prefix}{i}")).collect() }
    }

    /// The one-dimensional unit space.
    pub fn unit() -> Self {
        BasedSpace { labels: vec!["1".into()] }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Tensor product with labels `a⊗b` in row-major order; falls back to
    /// indexed labels if the joined labels collide.
    pub fn tensor(&self, other: &BasedSpace) -> BasedSpace {
        let labels: Vec<String> =
            self.labels.iter().flat_map(|a| other.labels.iter().map(move |b| format!("{a}⊗{b}"))).collect();
        BasedSpace::new(labels).unwrap_or_else(|_| BasedSpace::indexed("t", self.dim() * other.dim()))
    }

    pub fn tensor_power(&self, n: usize) -> BasedSpace {
        (1..n).fold(if n == 0 { BasedSpace::unit() } else { self.clone() }, |acc, _| acc.tensor(self))
    }

    /// The coordinate subspace on the given indices.
    pub fn subspace(&self, indices: &[usize]) -> BasedSpace {
        BasedSpace { labels: indices.iter().map(|&i| self.labels[i].clone()).collect() }
    }

    pub fn direct_sum(&self, other: &BasedSpace) -> BasedSpace {
        let labels: Vec<String> = self.labels.iter().chain(other.labels.iter()).cloned().collect();
        BasedSpace::new(labels.clone()).unwrap_or_else(|_| {
            BasedSpace {
                labels: self
                    .labels
                    .iter()
                    .map(|l| format!("{l}'"))
                    .chain(other.labels.iter().map(|l| format!("{l}\"")))
                    .collect(),
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_must_be_distinct() {
        assert!(BasedSpace::new(["1", "g"]).is_ok());
        assert_eq!(BasedSpace::new(["x", "x"]), Err(DuplicateLabel("x".into())));
    }

    #[test]
    fn tensor_labels_are_row_major() {
        let a = BasedSpace::new(["1", "g"]).unwrap();
        let t = a.tensor(&a);
        assert_eq!(t.labels(), &["1⊗1", "1⊗g", "g⊗1", "g⊗g"]);
    }
}
