use std::collections::BTreeSet;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Vertices,
    Edges,
}

impl Target {
    pub fn as_str(self) -> &'static str {
        match self {
            Target::Vertices => "vertices",
            Target::Edges => "edges",
        }
    }
}

/// An injective assignment of positive integers to vertices or edges,
/// indexed by element position. Elements may be left unlabeled.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    target: Target,
    labels: Vec<Option<u64>>,
}

impl Labeling {
    /// A bijection from the labeled elements onto `1..=n`.
    pub fn new(target: Target, labels: Vec<Option<u64>>) -> Result<Self> {
        let labeling = Self::injective(target, labels)?;
        let n = labeling.labels.iter().flatten().count() as u64;
        if let Some(bad) = labeling.labels.iter().flatten().find(|&&l| l > n) {
            return Err(Error::InvalidLabeling(format!(
                "label {bad} is outside 1..={n}"
            )));
        }
        Ok(labeling)
    }

    /// Any injective labeling by positive integers.
    pub fn injective(target: Target, labels: Vec<Option<u64>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &l in labels.iter().flatten() {
            if l == 0 {
                return Err(Error::InvalidLabeling("labels must be positive".into()));
            }
            if !seen.insert(l) {
                return Err(Error::InvalidLabeling(format!("label {l} is used twice")));
            }
        }
        Ok(Labeling { target, labels })
    }

    /// Labels every element: element `i` receives `labels[i]`.
    pub fn total(target: Target, labels: Vec<u64>) -> Result<Self> {
        Self::new(target, labels.into_iter().map(Some).collect())
    }

    /// Element `i` gets label `i + 1`.
    pub fn identity(target: Target, n: usize) -> Self {
        Labeling {
            target,
            labels: (1..=n as u64).map(Some).collect(),
        }
    }

    /// Element `i` gets label `n - i`.
    pub fn reversed(target: Target, n: usize) -> Self {
        Labeling {
            target,
            labels: (1..=n as u64).rev().map(Some).collect(),
        }
    }

    pub fn target(&self) -> Target {
        self.target
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<u64> {
        self.labels.get(i).copied().flatten()
    }

    pub fn labels(&self) -> &[Option<u64>] {
        &self.labels
    }

    /// Applies `f` to every label. `f` must be strictly increasing for the
    /// result to order elements the same way.
    pub fn map_values(&self, f: impl Fn(u64) -> u64) -> Result<Self> {
        Self::injective(self.target, self.labels.iter().map(|l| l.map(&f)).collect())
    }
}
