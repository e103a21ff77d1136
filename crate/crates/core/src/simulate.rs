//! Reproducible bivariate demo data: Gumbel-copula samples with normal and
//! gamma marginals, plus an empirical Kendall tau for sanity checks.
//!
//! The copula is sampled through its frailty representation: a positive
//! stable variable `S` with Laplace transform `exp(-t^(1/theta))` (Kanter's
//! construction) mixed with independent unit exponentials gives uniforms
//! `U_i = exp(-(E_i / S)^(1/theta))` whose joint law is the Gumbel copula.
//! `theta = 1` degenerates to independence and is special-cased.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ContinuousCDF, Gamma, Normal};

use crate::error::{Error, Result};
use crate::sample::WeightedSample;

/// Parameters of the bivariate demo dataset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimulationConfig {
    pub n: usize,
    pub seed: u64,
    /// Gumbel copula parameter, `>= 1`; Kendall tau is `1 - 1/theta`.
    pub theta: f64,
    pub normal_mean: f64,
    pub normal_std: f64,
    pub gamma_shape: f64,
    pub gamma_rate: f64,
}

impl Default for SimulationConfig {
    /// Normal(mean 7, variance 4) and Gamma(shape 4, rate 3) marginals.
    fn default() -> Self {
        Self {
            n: 200,
            seed: 0,
            theta: 2.0,
            normal_mean: 7.0,
            normal_std: 2.0,
            gamma_shape: 4.0,
            gamma_rate: 3.0,
        }
    }
}

fn exp1<R: Rng>(rng: &mut R) -> f64 {
    let u: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    -u.ln()
}

/// Positive stable variable with Laplace transform `exp(-t^a)`, `a in (0,1)`.
fn positive_stable<R: Rng>(a: f64, rng: &mut R) -> f64 {
    let v: f64 = rng.gen_range(f64::EPSILON..1.0) * std::f64::consts::PI;
    let w = exp1(rng);
    let s = (a * v).sin() / v.sin().powf(1.0 / a);
    s * (((1.0 - a) * v).sin() / w).powf((1.0 - a) / a)
}

/// One pair of Gumbel-copula uniforms.
fn gumbel_pair<R: Rng>(theta: f64, rng: &mut R) -> (f64, f64) {
    if theta == 1.0 {
        return (rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0));
    }
    let s = positive_stable(1.0 / theta, rng);
    let u = (-(exp1(rng) / s).powf(1.0 / theta)).exp();
    let v = (-(exp1(rng) / s).powf(1.0 / theta)).exp();
    (u, v)
}

/// Draws `n` points whose first coordinate is normal and second gamma,
/// coupled by the Gumbel copula. Deterministic in the seed.
pub fn simulate_gumbel(config: &SimulationConfig) -> Result<WeightedSample> {
    if !(config.theta >= 1.0) {
        return Err(Error::InvalidInput(format!(
            "Gumbel copula parameter must be >= 1, got {}",
            config.theta
        )));
    }
    if config.n == 0 {
        return Err(Error::EmptySample);
    }
    let normal = Normal::new(config.normal_mean, config.normal_std)
        .map_err(|e| Error::InvalidInput(format!("normal marginal: {e}")))?;
    let gamma = Gamma::new(config.gamma_shape, config.gamma_rate)
        .map_err(|e| Error::InvalidInput(format!("gamma marginal: {e}")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let points = (0..config.n)
        .map(|_| {
            let (u, v) = gumbel_pair(config.theta, &mut rng);
            vec![normal.inverse_cdf(u), gamma.inverse_cdf(v)]
        })
        .collect();
    WeightedSample::uniform(points)
}

/// Empirical Kendall tau (tau-a) of a bivariate sample, via inversion
/// counting after sorting by the first coordinate: `O(n log n)`.
pub fn kendall_tau(points: &[Vec<f64>]) -> Result<f64> {
    if points.len() < 2 {
        return Err(Error::InvalidInput(
            "Kendall tau needs at least two points".into(),
        ));
    }
    if points.iter().any(|p| p.len() != 2) {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: points.iter().map(Vec::len).find(|&l| l != 2).unwrap_or(2),
        });
    }
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| {
        points[i][0]
            .partial_cmp(&points[j][0])
            .unwrap()
            .then(points[i][1].partial_cmp(&points[j][1]).unwrap())
    });
    let mut ys: Vec<f64> = order.iter().map(|&i| points[i][1]).collect();
    let inversions = count_inversions(&mut ys);
    let n = points.len() as f64;
    Ok(1.0 - 4.0 * inversions as f64 / (n * (n - 1.0)))
}

/// Merge-sort inversion count; `v` ends up sorted.
fn count_inversions(v: &mut [f64]) -> u64 {
    let n = v.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut right: Vec<f64> = v[mid..].to_vec();
    let mut left: Vec<f64> = v[..mid].to_vec();
    let mut count = count_inversions(&mut left) + count_inversions(&mut right);
    let (mut i, mut j) = (0, 0);
    for slot in v.iter_mut() {
        if i < left.len() && (j >= right.len() || left[i] <= right[j]) {
            *slot = left[i];
            i += 1;
        } else {
            if i < left.len() {
                count += (left.len() - i) as u64;
            }
            *slot = right[j];
            j += 1;
        }
    }
    count
}
