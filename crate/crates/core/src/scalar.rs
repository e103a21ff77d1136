//! Exact univariate expectiles, inverse expectiles and the scenario-vertex
//! dual oracle for finite weighted samples.
//!
//! The asymmetric-least-squares first-order condition
//! `alpha * E[(X - t)_+] = (1 - alpha) * E[(t - X)_+]` is linear in `t`
//! between consecutive order statistics, so the expectile is solved exactly
//! by locating the bracketing inter-atom interval. No iteration is involved.

use crate::error::{Error, Result};
use crate::sample::ScalarSample;

/// One point of an expectile curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpectileCurvePoint {
    pub alpha: f64,
    pub value: f64,
}

fn check_alpha_open(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidAlpha {
            alpha,
            range: "(0, 1)",
        });
    }
    Ok(())
}

/// Prefix statistics over the merged sorted atoms: for breakpoint `k`,
/// `below` covers atoms with value <= v_k and `above` the rest.
struct Interval {
    p_below: f64,
    s_below: f64,
    p_above: f64,
    s_above: f64,
}

fn interval_stats(atoms: &[(f64, f64)], k: usize) -> Interval {
    let mut p_below = 0.0;
    let mut s_below = 0.0;
    for &(v, p) in &atoms[..=k] {
        p_below += p;
        s_below += p * v;
    }
    let total_p: f64 = atoms.iter().map(|&(_, p)| p).sum();
    let total_s: f64 = atoms.iter().map(|&(v, p)| p * v).sum();
    Interval {
        p_below,
        s_below,
        p_above: total_p - p_below,
        s_above: total_s - s_below,
    }
}

/// Imbalance `alpha E[(X-t)_+] - (1-alpha) E[(t-X)_+]`, strictly decreasing in `t`.
fn imbalance(sample: &ScalarSample, alpha: f64, t: f64) -> f64 {
    let mut gain = 0.0;
    let mut loss = 0.0;
    for (&v, &p) in sample.values().iter().zip(sample.probabilities()) {
        if v > t {
            gain += p * (v - t);
        } else {
            loss += p * (t - v);
        }
    }
    alpha * gain - (1.0 - alpha) * loss
}

/// The unique `alpha`-expectile of a finite weighted sample, solved exactly.
pub fn expectile(sample: &ScalarSample, alpha: f64) -> Result<f64> {
    check_alpha_open(alpha)?;
    let atoms = sample.merged_sorted();
    if atoms.len() == 1 {
        return Ok(atoms[0].0);
    }
    // Bracket: imbalance is >= 0 at the smallest atom and <= 0 at the largest.
    let mut k = 0;
    while k + 2 < atoms.len() && imbalance(sample, alpha, atoms[k + 1].0) > 0.0 {
        k += 1;
    }
    let iv = interval_stats(&atoms, k);
    let num = alpha * iv.s_above + (1.0 - alpha) * iv.s_below;
    let den = alpha * iv.p_above + (1.0 - alpha) * iv.p_below;
    Ok(num / den)
}

/// Expectile curve over a grid of levels.
pub fn expectile_curve(sample: &ScalarSample, alphas: &[f64]) -> Result<Vec<ExpectileCurvePoint>> {
    alphas
        .iter()
        .map(|&alpha| {
            expectile(sample, alpha).map(|value| ExpectileCurvePoint { alpha, value })
        })
        .collect()
}

/// The inverse expectile function: the unique `alpha` with
/// `e_alpha(sample) = t` for `t` inside the sample range, clamped to 0
/// below the minimum and 1 above the maximum.
///
/// The clamping extends the usual `(0,1)`-valued definition to the
/// full `[0,1]` codomain: an infimum over an empty level set is 1, a
/// supremum over an empty level set is 0.
pub fn inverse_expectile(sample: &ScalarSample, t: f64) -> f64 {
    let atoms = sample.merged_sorted();
    let lo = atoms[0].0;
    let hi = atoms[atoms.len() - 1].0;
    if t <= lo {
        return 0.0;
    }
    if t >= hi {
        return 1.0;
    }
    // Locate the inter-atom interval containing t; the first-order condition
    // is a ratio of linear functions in alpha there.
    let mut k = 0;
    while k + 2 < atoms.len() && atoms[k + 1].0 < t {
        k += 1;
    }
    let iv = interval_stats(&atoms, k);
    let a = iv.s_above - t * iv.p_above; // alpha-side slack, >= 0
    let b = t * iv.p_below - iv.s_below; // (1-alpha)-side slack, >= 0
    b / (a + b)
}

/// Side of the scenario polytope to optimize over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleSense {
    Min,
    Max,
}

/// Optimum of `E^Q[X]` over the scenario polytope `W(alpha)`, scanned over
/// the candidate vertices in which the k smallest (resp. largest) outcomes
/// carry density ratio `beta = (1-alpha)/alpha` and the rest ratio 1.
///
/// Equals `expectile(sample, alpha)` for `Min` and
/// `expectile(sample, 1 - alpha)` for `Max`.
pub fn dual_expectile_oracle(
    sample: &ScalarSample,
    alpha: f64,
    sense: OracleSense,
) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 0.5) {
        return Err(Error::InvalidAlpha {
            alpha,
            range: "(0, 1/2]",
        });
    }
    let beta = (1.0 - alpha) / alpha;
    let mut pairs: Vec<(f64, f64)> = sample
        .values()
        .iter()
        .copied()
        .zip(sample.probabilities().iter().copied())
        .collect();
    match sense {
        OracleSense::Min => pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap()),
        OracleSense::Max => pairs.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap()),
    }
    let total_s: f64 = pairs.iter().map(|&(v, p)| p * v).sum();
    let mut best = total_s; // k = 0 is the base measure itself
    let mut w_head = 0.0;
    let mut s_head = 0.0;
    for &(v, p) in &pairs {
        w_head += p;
        s_head += p * v;
        let z = beta * w_head + (1.0 - w_head);
        let e = (beta * s_head + (total_s - s_head)) / z;
        best = match sense {
            OracleSense::Min => best.min(e),
            OracleSense::Max => best.max(e),
        };
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn s345() -> ScalarSample {
        ScalarSample::uniform(vec![3.0, 4.0, 5.0]).unwrap()
    }

    #[test]
    fn expectile_at_half_is_the_mean() {
        assert_abs_diff_eq!(expectile(&s345(), 0.5).unwrap(), 4.0, epsilon = 1e-14);
    }

    #[test]
    fn expectile_quarter_of_three_point_sample() {
        let t = expectile(&s345(), 0.25).unwrap();
        assert_abs_diff_eq!(t, 3.6, epsilon = 1e-14);
        // first-order condition holds: 0.25 * E[(X-t)_+] = 0.75 * E[(t-X)_+]
        assert_abs_diff_eq!(imbalance(&s345(), 0.25, t), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn bernoulli_expectile_is_alpha() {
        let s = ScalarSample::uniform(vec![0.0, 1.0]).unwrap();
        assert_abs_diff_eq!(expectile(&s, 0.3).unwrap(), 0.3, epsilon = 1e-14);
    }

    #[test]
    fn reflection_identity() {
        let s = ScalarSample::uniform(vec![-5.0, -4.0, -3.0]).unwrap();
        assert_abs_diff_eq!(expectile(&s, 0.75).unwrap(), -3.6, epsilon = 1e-14);
    }

    #[test]
    fn rejects_alpha_outside_open_interval() {
        assert!(expectile(&s345(), 0.0).is_err());
        assert!(expectile(&s345(), 1.0).is_err());
        assert!(expectile(&s345(), -0.2).is_err());
    }

    #[test]
    fn inverse_expectile_examples() {
        assert_abs_diff_eq!(inverse_expectile(&s345(), 3.6), 0.25, epsilon = 1e-12);
        assert_abs_diff_eq!(inverse_expectile(&s345(), 4.0), 0.5, epsilon = 1e-12);
        assert_eq!(inverse_expectile(&s345(), 7.0), 1.0);
        assert_eq!(inverse_expectile(&s345(), 3.0), 0.0);
    }

    #[test]
    fn dual_oracle_three_point_example() {
        assert_abs_diff_eq!(
            dual_expectile_oracle(&s345(), 0.25, OracleSense::Min).unwrap(),
            3.6,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            dual_expectile_oracle(&s345(), 0.25, OracleSense::Max).unwrap(),
            4.4,
            epsilon = 1e-14
        );
    }

    #[test]
    fn dual_oracle_constant_sample() {
        let s = ScalarSample::new(vec![2.5, 2.5, 2.5], vec![0.2, 0.3, 0.5]).unwrap();
        for sense in [OracleSense::Min, OracleSense::Max] {
            assert_abs_diff_eq!(
                dual_expectile_oracle(&s, 0.1, sense).unwrap(),
                2.5,
                epsilon = 1e-14
            );
        }
    }

    #[test]
    fn dual_oracle_rejects_alpha_above_half() {
        assert!(dual_expectile_oracle(&s345(), 0.75, OracleSense::Min).is_err());
    }

    #[test]
    fn constant_sample_expectile() {
        let s = ScalarSample::uniform(vec![7.0, 7.0]).unwrap();
        for a in [0.05, 0.5, 0.95] {
            assert_eq!(expectile(&s, a).unwrap(), 7.0);
        }
    }

    #[test]
    fn ties_are_merged_consistently() {
        let tied = ScalarSample::uniform(vec![3.0, 3.0, 4.0, 5.0, 5.0, 4.0]).unwrap();
        let merged = ScalarSample::uniform(vec![3.0, 4.0, 5.0]).unwrap();
        for a in [0.1, 0.25, 0.6, 0.9] {
            assert_abs_diff_eq!(
                expectile(&tied, a).unwrap(),
                expectile(&merged, a).unwrap(),
                epsilon = 1e-14
            );
        }
    }
}
