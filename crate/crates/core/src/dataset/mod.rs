//! Tabular PU datasets: ingestion, synthesis, SCAR masking, and splitting.
//!
//! An [`Example`] carries a feature vector, a binary sensitive attribute,
//! the observed label indicator `L`, and (when known) the latent ground
//! truth `Y`. A [`Dataset`] is an immutable, validated collection of
//! examples sharing one feature layout; all operations return new
//! datasets rather than mutating.

mod csv;
mod scar;
mod split;
mod standardize;
mod synthetic;

pub use csv::{load_csv, load_csv_with_encoder, CsvSchema, FittedEncoder, KeepFilter, MappedColumn};
pub use scar::{apply_scar, ScarMode};
pub use split::split;
pub use standardize::Standardizer;
pub use synthetic::{synthesize_gaussian, GaussianCell, SyntheticSpec};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How a feature column should be treated by preprocessing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColumnKind {
    /// Real-valued; standardized when a [`Standardizer`] is applied.
    Numeric,
    /// 0/1 indicator (e.g. a one-hot column); left untouched.
    Indicator,
}

/// Name and kind of one encoded feature column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeatureColumn {
    pub name: String,
    pub kind: ColumnKind,
}

/// One observation: features, sensitive group, observed label indicator,
/// and optional ground truth.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Example {
    pub features: Vec<f64>,
    /// Sensitive group id, 0 or 1.
    pub sensitive: u8,
    /// Observed PU label `L`: true means labeled (hence positive).
    pub label_indicator: bool,
    /// Latent label `Y`, present only for evaluation and oracle training.
    pub ground_truth: Option<bool>,
}

impl Example {
    pub fn new(
        features: Vec<f64>,
        sensitive: u8,
        label_indicator: bool,
        ground_truth: Option<bool>,
    ) -> Self {
        Example {
            features,
            sensitive,
            label_indicator,
            ground_truth,
        }
    }

    pub fn group_index(&self) -> usize {
        self.sensitive as usize
    }
}

/// Immutable collection of examples with a fixed feature layout.
///
/// Invariants, checked on construction: non-empty, uniform feature
/// dimension, sensitive attributes in {0, 1} with both groups present,
/// and no labeled example with a negative ground truth.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    examples: Vec<Example>,
    columns: Vec<FeatureColumn>,
    provenance: String,
}

impl Dataset {
    pub fn new(
        examples: Vec<Example>,
        columns: Vec<FeatureColumn>,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        let provenance = provenance.into();
        if examples.is_empty() {
            return Err(Error::EmptyDataset {
                context: provenance,
            });
        }
        let dim = columns.len();
        let mut seen = [false; 2];
        for (index, ex) in examples.iter().enumerate() {
            if ex.features.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: ex.features.len(),
                });
            }
            if ex.sensitive > 1 {
                return Err(Error::InvalidSensitive {
                    found: ex.sensitive,
                    index,
                });
            }
            seen[ex.group_index()] = true;
            if ex.label_indicator && ex.ground_truth == Some(false) {
                return Err(Error::LabeledNegative { index });
            }
        }
        for group in 0..2u8 {
            if !seen[group as usize] {
                return Err(Error::MissingGroup {
                    group,
                    context: provenance,
                });
            }
        }
        Ok(Dataset {
            examples,
            columns,
            provenance,
        })
    }

    /// Builds a dataset with generated column names `x0..x{d-1}`, all numeric.
    pub fn with_default_columns(
        examples: Vec<Example>,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        let dim = examples.first().map_or(0, |e| e.features.len());
        let columns = default_columns(dim);
        Dataset::new(examples, columns, provenance)
    }

    pub fn len(&self) -> usize {
        self.examples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.examples.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.columns.len()
    }

    pub fn examples(&self) -> &[Example] {
        &self.examples
    }

    pub fn columns(&self) -> &[FeatureColumn] {
        &self.columns
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Example> {
        self.examples.iter()
    }

    /// Number of examples in each sensitive group.
    pub fn group_counts(&self) -> [usize; 2] {
        let mut counts = [0usize; 2];
        for ex in &self.examples {
            counts[ex.group_index()] += 1;
        }
        counts
    }

    /// Number of labeled (L = 1) examples.
    pub fn n_labeled(&self) -> usize {
        self.examples.iter().filter(|e| e.label_indicator).count()
    }

    /// Number of ground-truth positives; `None` if any ground truth is missing.
    pub fn n_positive(&self) -> Option<usize> {
        let mut n = 0;
        for ex in &self.examples {
            match ex.ground_truth {
                Some(true) => n += 1,
                Some(false) => {}
                None => return None,
            }
        }
        Some(n)
    }

    pub fn has_ground_truth(&self) -> bool {
        self.examples.iter().all(|e| e.ground_truth.is_some())
    }

    /// New dataset from a subset of indices, keeping the column layout.
    /// Re-validates the invariants (the subset may lose a group).
    pub fn subset(&self, indices: &[usize], provenance: impl Into<String>) -> Result<Self> {
        let examples = indices
            .iter()
            .map(|&i| self.examples[i].clone())
            .collect();
        Dataset::new(examples, self.columns.clone(), provenance)
    }

    /// Replaces the examples, keeping columns and provenance intact.
    pub(crate) fn with_examples(&self, examples: Vec<Example>) -> Result<Self> {
        Dataset::new(examples, self.columns.clone(), self.provenance.clone())
    }
}

pub(crate) fn default_columns(dim: usize) -> Vec<FeatureColumn> {
    (0..dim)
        .map(|j| FeatureColumn {
            name: format!("x{j}"),
            kind: ColumnKind::Numeric,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex(f: Vec<f64>, s: u8, l: bool, y: Option<bool>) -> Example {
        Example::new(f, s, l, y)
    }

    #[test]
    fn rejects_empty() {
        assert!(matches!(
            Dataset::with_default_columns(vec![], "t"),
            Err(Error::EmptyDataset { .. })
        ));
    }

    #[test]
    fn rejects_mixed_dimensions() {
        let examples = vec![
            ex(vec![1.0], 0, false, None),
            ex(vec![1.0, 2.0], 1, false, None),
        ];
        assert!(matches!(
            Dataset::with_default_columns(examples, "t"),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rejects_single_group() {
        let examples = vec![
            ex(vec![1.0], 0, false, None),
            ex(vec![2.0], 0, true, Some(true)),
        ];
        assert!(matches!(
            Dataset::with_default_columns(examples, "t"),
            Err(Error::MissingGroup { group: 1, .. })
        ));
    }

    #[test]
    fn rejects_labeled_negative() {
        let examples = vec![
            ex(vec![1.0], 0, true, Some(false)),
            ex(vec![2.0], 1, false, Some(false)),
        ];
        assert!(matches!(
            Dataset::with_default_columns(examples, "t"),
            Err(Error::LabeledNegative { index: 0 })
        ));
    }

    #[test]
    fn counts_and_accessors() {
        let examples = vec![
            ex(vec![1.0], 0, true, Some(true)),
            ex(vec![2.0], 1, false, Some(false)),
            ex(vec![3.0], 1, false, Some(true)),
        ];
        let ds = Dataset::with_default_columns(examples, "t").unwrap();
        assert_eq!(ds.len(), 3);
        assert_eq!(ds.dimension(), 1);
        assert_eq!(ds.group_counts(), [1, 2]);
        assert_eq!(ds.n_labeled(), 1);
        assert_eq!(ds.n_positive(), Some(2));
        assert!(ds.has_ground_truth());
    }
}
