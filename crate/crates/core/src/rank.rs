//! Downward/upward expectile rank functions, the complete preorders they
//! induce, indifference relations, rank-to-cone-order inference and
//! rank-based certification of stochastic orders.
//!
//! Ranks are computed as max/min of directional inverse expectiles: `z` lies
//! in a cone expectile set iff every directional inequality holds, and each
//! directional inequality is monotone in the level, so the extremal
//! directional level is exactly the infimum/supremum over the set family.
//! A bisection over the level is retained as a debug oracle.

use crate::cone_expectile::{downward_expectile, lower_expectile_order, default_alpha_grid};
use crate::error::{Error, Result};
use crate::geometry::{dot, ConeSpec};
use crate::sample::{ScalarSample, WeightedSample};
use crate::scalar::inverse_expectile;

/// Per-generator directional levels backing a rank evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorLevel {
    pub generator: usize,
    pub downward_level: f64,
    pub upward_level: f64,
}

/// Downward and upward ranks of a point together with the directional levels.
#[derive(Debug, Clone, PartialEq)]
pub struct RankResult {
    pub downward: f64,
    pub upward: f64,
    pub per_generator: Vec<GeneratorLevel>,
}

/// Directional level for the downward family: the smallest level at which
/// the directional inequality `t <= e_alpha(sample)` starts to hold.
/// Degenerate (constant) directions use the clamping convention.
fn directional_level_down(sample: &ScalarSample, t: f64) -> f64 {
    if sample.min() == sample.max() {
        return if t <= sample.min() { 0.0 } else { 1.0 };
    }
    inverse_expectile(sample, t)
}

/// Directional level for the upward family: the largest level `beta` with
/// `e_beta(sample) <= t`.
fn directional_level_up(sample: &ScalarSample, t: f64) -> f64 {
    if sample.min() == sample.max() {
        return if t >= sample.max() { 1.0 } else { 0.0 };
    }
    inverse_expectile(sample, t)
}

fn check_dims(z: &[f64], x: &WeightedSample, cone: &ConeSpec) -> Result<()> {
    if z.len() != x.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            got: z.len(),
        });
    }
    if cone.dim() != x.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            got: cone.dim(),
        });
    }
    Ok(())
}

/// Downward expectile rank `D_{-C}(z; X)`: max over dual generators of the
/// directional inverse expectile of `w^T z` under `w^T X`.
pub fn downward_rank(z: &[f64], x: &WeightedSample, cone: &ConeSpec) -> Result<f64> {
    check_dims(z, x, cone)?;
    let mut rank = 0.0f64;
    for w in cone.dual_generators() {
        let level = directional_level_down(&x.project(w)?, dot(w, z));
        rank = rank.max(level);
    }
    Ok(rank)
}

/// Upward expectile rank `D_C(z; X)`: min over dual generators of the
/// directional level for the upward family.
pub fn upward_rank(z: &[f64], x: &WeightedSample, cone: &ConeSpec) -> Result<f64> {
    check_dims(z, x, cone)?;
    let mut rank = 1.0f64;
    for w in cone.dual_generators() {
        let level = directional_level_up(&x.project(w)?, dot(w, z));
        rank = rank.min(level);
    }
    Ok(rank)
}

/// Both ranks plus per-generator directional levels.
pub fn rank(z: &[f64], x: &WeightedSample, cone: &ConeSpec) -> Result<RankResult> {
    check_dims(z, x, cone)?;
    let mut per_generator = Vec::with_capacity(cone.dual_generators().len());
    let mut down = 0.0f64;
    let mut up = 1.0f64;
    for (m, w) in cone.dual_generators().iter().enumerate() {
        let s = x.project(w)?;
        let t = dot(w, z);
        let dl = directional_level_down(&s, t);
        let ul = directional_level_up(&s, t);
        down = down.max(dl);
        up = up.min(ul);
        per_generator.push(GeneratorLevel {
            generator: m,
            downward_level: dl,
            upward_level: ul,
        });
    }
    Ok(RankResult {
        downward: down,
        upward: up,
        per_generator,
    })
}

/// Debug oracle: downward rank by bisection on set membership.
pub fn downward_rank_bisect(
    z: &[f64],
    x: &WeightedSample,
    cone: &ConeSpec,
    iterations: usize,
) -> Result<f64> {
    check_dims(z, x, cone)?;
    let member = |alpha: f64| -> Result<bool> {
        downward_expectile(x, cone, alpha)?.contains(z, 0.0)
    };
    let eps = 1e-9;
    if member(eps)? {
        return Ok(0.0);
    }
    if !member(1.0 - eps)? {
        return Ok(1.0);
    }
    let (mut lo, mut hi) = (eps, 1.0 - eps);
    for _ in 0..iterations {
        let mid = 0.5 * (lo + hi);
        if member(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Pairwise comparison report: ranks of both points, the induced order
/// flags and the indifference relations.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub ranks_y: RankResult,
    pub ranks_z: RankResult,
    /// `y <=_{X,-C} z`
    pub y_below_z_downward: bool,
    pub z_below_y_downward: bool,
    /// `y <=_{X,+C} z`
    pub y_below_z_upward: bool,
    pub z_below_y_upward: bool,
    pub lower_indifferent: bool,
    pub upper_indifferent: bool,
    pub joint_indifferent: bool,
}

/// Indifference tolerance on rank equality.
pub const RANK_TOL: f64 = 1e-9;

pub fn compare(
    y: &[f64],
    z: &[f64],
    x: &WeightedSample,
    cone: &ConeSpec,
) -> Result<ComparisonReport> {
    let ry = rank(y, x, cone)?;
    let rz = rank(z, x, cone)?;
    let lower_indifferent = (ry.downward - rz.downward).abs() <= RANK_TOL;
    let upper_indifferent = (ry.upward - rz.upward).abs() <= RANK_TOL;
    Ok(ComparisonReport {
        y_below_z_downward: ry.downward <= rz.downward + RANK_TOL,
        z_below_y_downward: rz.downward <= ry.downward + RANK_TOL,
        y_below_z_upward: ry.upward <= rz.upward + RANK_TOL,
        z_below_y_upward: rz.upward <= ry.upward + RANK_TOL,
        lower_indifferent,
        upper_indifferent,
        joint_indifferent: lower_indifferent && upper_indifferent,
        ranks_y: ry,
        ranks_z: rz,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderVerdict {
    /// `y <=_C z` certified through the rank comparisons
    Leq,
    /// the rank comparisons rule out `y <=_C z`
    NotLeq,
    /// the hypothesis `D_{-C}(y) <= D_C(z)` fails; ranks cannot decide
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InferenceReport {
    pub verdict: OrderVerdict,
    pub hypothesis_met: bool,
    pub downward_y: f64,
    pub upward_z: f64,
}

/// Rank-to-order inference: under the hypothesis
/// `D_{-C}(y; X) <= D_C(z; X)` (with an admissible level in (0, 1) between
/// the two ranks), `y <=_C z` holds iff both rank comparisons do. A failed
/// rank comparison refutes `y <=_C z` unconditionally; a positive answer
/// without the hypothesis stays inconclusive.
pub fn infer_cone_order(
    y: &[f64],
    z: &[f64],
    x: &WeightedSample,
    cone: &ConeSpec,
) -> Result<InferenceReport> {
    let report = compare(y, z, x, cone)?;
    let downward_y = report.ranks_y.downward;
    let upward_z = report.ranks_z.upward;
    // Besides the ordering of the two ranks, the certificate needs an
    // admissible level strictly inside (0, 1) between them: clamped ranks
    // (0 or 1) carry no membership information beyond the sample range, so
    // an interval touching only the boundary proves nothing.
    let hypothesis_met =
        downward_y <= upward_z + RANK_TOL && downward_y < 1.0 && upward_z > 0.0;
    let verdict = if !(report.y_below_z_downward && report.y_below_z_upward) {
        // a strict rank reversal refutes y <=_C z by monotonicity alone,
        // no hypothesis needed
        OrderVerdict::NotLeq
    } else if hypothesis_met {
        OrderVerdict::Leq
    } else {
        OrderVerdict::Inconclusive
    };
    Ok(InferenceReport {
        verdict,
        hypothesis_met,
        downward_y,
        upward_z,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConsistencyReport {
    pub consistent: bool,
    pub order_holds: bool,
    pub witness: Option<Vec<f64>>,
}

/// Certifies, on a probe grid, that the set-inclusion stochastic order
/// agrees with pointwise downward-rank domination
/// (`X <=_le Y` iff `D_{-C}(z; X) >= D_{-C}(z; Y)` for all `z`).
///
/// A test utility, not a standalone decision procedure: when the order
/// fails, a probe exhibiting the rank violation must be present on the grid
/// for the report to come back consistent.
pub fn stochastic_order_rank_check(
    x: &WeightedSample,
    y: &WeightedSample,
    cone: &ConeSpec,
    probe_points: &[Vec<f64>],
) -> Result<ConsistencyReport> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            got: y.dim(),
        });
    }
    let order = lower_expectile_order(x, y, cone, &default_alpha_grid())?;
    let mut violating_probe: Option<Vec<f64>> = None;
    for z in probe_points {
        let dx = downward_rank(z, x, cone)?;
        let dy = downward_rank(z, y, cone)?;
        if dx < dy - RANK_TOL {
            violating_probe = Some(z.clone());
            break;
        }
    }
    let (consistent, witness) = match (order.holds, violating_probe) {
        (true, Some(z)) => (false, Some(z)),
        (true, None) => (true, None),
        (false, Some(z)) => (true, Some(z)),
        (false, None) => (false, None),
    };
    Ok(ConsistencyReport {
        consistent,
        order_holds: order.holds,
        witness,
    })
}
