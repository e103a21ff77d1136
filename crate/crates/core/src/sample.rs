//! Finite weighted samples: the empirical distributions all computations run on.

use crate::error::{Error, Result};

/// Probability weights are accepted if they sum to 1 within this slack.
pub const PROB_SUM_TOL: f64 = 1e-12;

fn validate_probabilities(n: usize, probabilities: &[f64]) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptySample);
    }
    if probabilities.len() != n {
        return Err(Error::LengthMismatch {
            values: n,
            probabilities: probabilities.len(),
        });
    }
    let sum: f64 = probabilities.iter().sum();
    if probabilities.iter().any(|&p| !(p > 0.0)) || (sum - 1.0).abs() > PROB_SUM_TOL {
        return Err(Error::InvalidProbabilities { sum });
    }
    Ok(())
}

/// A univariate random variable with finitely many atoms.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarSample {
    values: Vec<f64>,
    probabilities: Vec<f64>,
}

impl ScalarSample {
    pub fn new(values: Vec<f64>, probabilities: Vec<f64>) -> Result<Self> {
        validate_probabilities(values.len(), &probabilities)?;
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("non-finite sample value".into()));
        }
        Ok(Self {
            values,
            probabilities,
        })
    }

    pub fn uniform(values: Vec<f64>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::EmptySample);
        }
        let p = vec![1.0 / n as f64; n];
        Self::new(values, p)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn mean(&self) -> f64 {
        self.values
            .iter()
            .zip(&self.probabilities)
            .map(|(v, p)| v * p)
            .sum()
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Atoms sorted by value with tied values merged into one breakpoint.
    pub(crate) fn merged_sorted(&self) -> Vec<(f64, f64)> {
        let mut pairs: Vec<(f64, f64)> = self
            .values
            .iter()
            .copied()
            .zip(self.probabilities.iter().copied())
            .collect();
        pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(pairs.len());
        for (v, p) in pairs {
            match merged.last_mut() {
                Some((lv, lp)) if *lv == v => *lp += p,
                _ => merged.push((v, p)),
            }
        }
        merged
    }
}

/// A finitely supported random vector in `R^d`: atoms plus their weights.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedSample {
    points: Vec<Vec<f64>>,
    probabilities: Vec<f64>,
    dim: usize,
}

impl WeightedSample {
    pub fn new(points: Vec<Vec<f64>>, probabilities: Vec<f64>) -> Result<Self> {
        validate_probabilities(points.len(), &probabilities)?;
        let dim = points[0].len();
        if dim == 0 {
            return Err(Error::InvalidInput("points must have dimension >= 1".into()));
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidInput("non-finite sample point".into()));
            }
        }
        Ok(Self {
            points,
            probabilities,
            dim,
        })
    }

    pub fn uniform(points: Vec<Vec<f64>>) -> Result<Self> {
        let n = points.len();
        if n == 0 {
            return Err(Error::EmptySample);
        }
        let p = vec![1.0 / n as f64; n];
        Self::new(points, p)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    /// The projected univariate sample `w^T X`.
    pub fn project(&self, w: &[f64]) -> Result<ScalarSample> {
        if w.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: w.len(),
            });
        }
        let values = self
            .points
            .iter()
            .map(|x| x.iter().zip(w).map(|(a, b)| a * b).sum())
            .collect();
        ScalarSample::new(values, self.probabilities.clone())
    }

    pub fn mean(&self) -> Vec<f64> {
        let mut m = vec![0.0; self.dim];
        for (x, p) in self.points.iter().zip(&self.probabilities) {
            for (mi, xi) in m.iter_mut().zip(x) {
                *mi += p * xi;
            }
        }
        m
    }

    pub fn negate(&self) -> Self {
        let points = self
            .points
            .iter()
            .map(|x| x.iter().map(|v| -v).collect())
            .collect();
        Self {
            points,
            probabilities: self.probabilities.clone(),
            dim: self.dim,
        }
    }

    /// Pointwise translation `X + b`.
    pub fn shift(&self, b: &[f64]) -> Result<Self> {
        if b.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: b.len(),
            });
        }
        let points = self
            .points
            .iter()
            .map(|x| x.iter().zip(b).map(|(a, c)| a + c).collect())
            .collect();
        Ok(Self {
            points,
            probabilities: self.probabilities.clone(),
            dim: self.dim,
        })
    }

    pub fn scale(&self, s: f64) -> Self {
        let points = self
            .points
            .iter()
            .map(|x| x.iter().map(|v| s * v).collect())
            .collect();
        Self {
            points,
            probabilities: self.probabilities.clone(),
            dim: self.dim,
        }
    }

    /// Atomwise sum of two variables on the same atom space.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        if self.len() != other.len() {
            return Err(Error::InvalidInput(
                "atomwise sum requires samples on the same atom space".into(),
            ));
        }
        let points = self
            .points
            .iter()
            .zip(&other.points)
            .map(|(x, y)| x.iter().zip(y).map(|(a, b)| a + b).collect())
            .collect();
        Ok(Self {
            points,
            probabilities: self.probabilities.clone(),
            dim: self.dim,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_probabilities() {
        assert!(ScalarSample::new(vec![1.0, 2.0], vec![0.5, 0.6]).is_err());
        assert!(ScalarSample::new(vec![1.0, 2.0], vec![1.0, 0.0]).is_err());
        assert!(ScalarSample::new(vec![], vec![]).is_err());
        assert!(ScalarSample::new(vec![1.0], vec![0.5, 0.5]).is_err());
    }

    #[test]
    fn merged_sorted_merges_ties() {
        let s = ScalarSample::new(vec![2.0, 1.0, 2.0], vec![0.25, 0.5, 0.25]).unwrap();
        assert_eq!(s.merged_sorted(), vec![(1.0, 0.5), (2.0, 0.5)]);
    }

    #[test]
    fn projection_matches_dot_product() {
        let x = WeightedSample::uniform(vec![vec![5.0, 2.0], vec![4.0, -1.0], vec![3.0, 1.0]])
            .unwrap();
        let s = x.project(&[1.0, 0.0]).unwrap();
        assert_eq!(s.values(), &[5.0, 4.0, 3.0]);
        let m = x.mean();
        assert!((m[0] - 4.0).abs() < 1e-14 && (m[1] - 2.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn dimension_checks() {
        let x = WeightedSample::uniform(vec![vec![1.0, 2.0]]).unwrap();
        assert!(x.project(&[1.0]).is_err());
        assert!(x.shift(&[1.0, 2.0, 3.0]).is_err());
        assert!(WeightedSample::uniform(vec![vec![1.0], vec![1.0, 2.0]]).is_err());
    }
}
