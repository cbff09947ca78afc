//! Gaussian benchmark synthesis.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use super::{default_columns, Dataset, Example};
use crate::error::{Error, Result};

/// One (group, class) cell of the synthetic benchmark: an isotropic
/// Gaussian with the given mean, variance, and sample count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaussianCell {
    pub group: u8,
    /// Ground-truth class, 0 or 1.
    pub class: u8,
    pub mean: Vec<f64>,
    pub variance: f64,
    pub count: usize,
}

/// Specification of a two-group Gaussian mixture benchmark: exactly one
/// cell per (group, class) combination.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SyntheticSpec {
    pub cells: Vec<GaussianCell>,
}

impl SyntheticSpec {
    /// Validates the spec and returns the feature dimension.
    pub fn validate(&self) -> Result<usize> {
        if self.cells.len() != 4 {
            return Err(Error::InvalidSpec(format!(
                "expected exactly 4 (group, class) cells, got {}",
                self.cells.len()
            )));
        }
        let dim = self.cells[0].mean.len();
        if dim == 0 {
            return Err(Error::InvalidSpec("mean vector is empty".into()));
        }
        let mut seen = [[false; 2]; 2];
        for cell in &self.cells {
            if cell.group > 1 || cell.class > 1 {
                return Err(Error::InvalidSpec(format!(
                    "cell (group={}, class={}) out of range",
                    cell.group, cell.class
                )));
            }
            if seen[cell.group as usize][cell.class as usize] {
                return Err(Error::InvalidSpec(format!(
                    "duplicate cell (group={}, class={})",
                    cell.group, cell.class
                )));
            }
            seen[cell.group as usize][cell.class as usize] = true;
            if cell.mean.len() != dim {
                return Err(Error::InvalidSpec(
                    "cells disagree on mean dimension".into(),
                ));
            }
            if !(cell.variance > 0.0) || !cell.variance.is_finite() {
                return Err(Error::InvalidSpec(format!(
                    "variance must be positive, got {}",
                    cell.variance
                )));
            }
            if cell.count == 0 {
                return Err(Error::InvalidSpec("cell count must be positive".into()));
            }
        }
        Ok(dim)
    }

    fn cell(group: u8, class: u8, mean: [f64; 2], variance: f64, count: usize) -> GaussianCell {
        GaussianCell {
            group,
            class,
            mean: mean.to_vec(),
            variance,
            count,
        }
    }
}

/// The default benchmark: 2-d isotropic Gaussians with a majority group
/// (group 0) and a minority group (group 1) whose positive cell is small,
/// so an unconstrained classifier under-predicts positives for group 1.
impl Default for SyntheticSpec {
    fn default() -> Self {
        SyntheticSpec {
            cells: vec![
                Self::cell(0, 1, [-1.0, -1.0], 0.8, 1000),
                Self::cell(0, 0, [1.0, 1.0], 0.8, 1000),
                Self::cell(1, 1, [-0.5, -0.5], 0.5, 200),
                Self::cell(1, 0, [0.5, 0.5], 0.5, 1000),
            ],
        }
    }
}

/// Samples a fully labeled dataset from `spec`. Deterministic given the
/// seed: cells are generated in (group, class) order. `label_indicator`
/// starts equal to the ground truth; apply SCAR masking separately.
pub fn synthesize_gaussian(spec: &SyntheticSpec, seed: u64) -> Result<Dataset> {
    let dim = spec.validate()?;
    let mut cells: Vec<&GaussianCell> = spec.cells.iter().collect();
    cells.sort_by_key(|c| (c.group, c.class));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let total: usize = cells.iter().map(|c| c.count).sum();
    let mut examples = Vec::with_capacity(total);
    for cell in cells {
        let sd = cell.variance.sqrt();
        let positive = cell.class == 1;
        for _ in 0..cell.count {
            let features: Vec<f64> = cell
                .mean
                .iter()
                .map(|&m| Normal::new(m, sd).unwrap().sample(&mut rng))
                .collect();
            examples.push(Example::new(
                features,
                cell.group,
                positive,
                Some(positive),
            ));
        }
    }
    Dataset::new(
        examples,
        default_columns(dim),
        format!("synthetic-gaussian(seed={seed})"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_spec_counts() {
        let ds = synthesize_gaussian(&SyntheticSpec::default(), 0).unwrap();
        assert_eq!(ds.len(), 3200);
        assert_eq!(ds.dimension(), 2);
        assert_eq!(ds.group_counts(), [2000, 1200]);
        assert_eq!(ds.n_positive(), Some(1200));
        // label indicator initialized from ground truth
        assert_eq!(ds.n_labeled(), 1200);
    }

    #[test]
    fn zero_variance_rejected() {
        let mut spec = SyntheticSpec::default();
        spec.cells[0].variance = 0.0;
        assert!(matches!(
            synthesize_gaussian(&spec, 0),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn deterministic_given_seed() {
        let spec = SyntheticSpec::default();
        let a = synthesize_gaussian(&spec, 7).unwrap();
        let b = synthesize_gaussian(&spec, 7).unwrap();
        assert_eq!(a, b);
        let c = synthesize_gaussian(&spec, 8).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn cell_means_converge() {
        // sample mean within 3*sigma/sqrt(n) of mu per coordinate
        let spec = SyntheticSpec {
            cells: vec![
                SyntheticSpec::cell(0, 1, [-1.0, -1.0], 0.8, 10_000),
                SyntheticSpec::cell(0, 0, [1.0, 1.0], 0.8, 10_000),
                SyntheticSpec::cell(1, 1, [-0.5, -0.5], 0.5, 10_000),
                SyntheticSpec::cell(1, 0, [0.5, 0.5], 0.5, 10_000),
            ],
        };
        let ds = synthesize_gaussian(&spec, 123).unwrap();
        for cell in &spec.cells {
            let sd = cell.variance.sqrt();
            let tol = 3.0 * sd / (cell.count as f64).sqrt();
            for coord in 0..2 {
                let vals: Vec<f64> = ds
                    .iter()
                    .filter(|e| {
                        e.sensitive == cell.group && e.ground_truth == Some(cell.class == 1)
                    })
                    .map(|e| e.features[coord])
                    .collect();
                assert_eq!(vals.len(), cell.count);
                let mean = vals.iter().sum::<f64>() / vals.len() as f64;
                assert!(
                    (mean - cell.mean[coord]).abs() <= tol,
                    "cell ({},{}) coord {coord}: mean {mean} vs {} tol {tol}",
                    cell.group,
                    cell.class,
                    cell.mean[coord]
                );
            }
        }
    }
}
