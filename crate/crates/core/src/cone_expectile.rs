//! Downward/upward cone expectile sets, the set-valued expectile risk
//! measure and the expectile stochastic orders.
//!
//! All sets are kept in H-representation keyed by the finite dual generator
//! list of the cone. For `alpha <= 1/2` the finite intersection is exact;
//! for larger levels the same intersection is computed and flagged as the
//! finite-generator outer approximation.

use crate::error::{Error, Result};
use crate::geometry::{ConeSpec, HalfspaceSet, Sense, DEFAULT_TOL};
use crate::sample::WeightedSample;
use crate::scalar::expectile;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Downward,
    Upward,
}

/// A cone expectile set `E^alpha_{-C}(X)` or `E^alpha_C(X)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeExpectileSet {
    pub direction: Direction,
    /// The expectile level used per direction (for upward sets this is the
    /// level `1 - alpha` of the defining inequalities).
    pub alpha: f64,
    pub halfspaces: HalfspaceSet,
    /// True when the finite-generator identity is proved for this level;
    /// false marks the outer approximation for levels where it is not.
    pub exact: bool,
}

impl ConeExpectileSet {
    pub fn contains(&self, z: &[f64], tol: f64) -> Result<bool> {
        self.halfspaces.contains(z, tol)
    }

    pub fn offsets(&self) -> &[f64] {
        &self.halfspaces.offsets
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidAlpha {
            alpha,
            range: "(0, 1)",
        });
    }
    Ok(())
}

fn directional_offsets(x: &WeightedSample, cone: &ConeSpec, level: f64) -> Result<Vec<f64>> {
    cone.dual_generators()
        .iter()
        .map(|w| expectile(&x.project(w)?, level))
        .collect()
}

/// The downward cone expectile `E^alpha_{-C}(X)`: intersection of
/// `{z | w_m^T z <= e_alpha(w_m^T X)}` over the dual generators.
pub fn downward_expectile(
    x: &WeightedSample,
    cone: &ConeSpec,
    alpha: f64,
) -> Result<ConeExpectileSet> {
    check_alpha(alpha)?;
    if cone.dim() != x.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            got: cone.dim(),
        });
    }
    let offsets = directional_offsets(x, cone, alpha)?;
    Ok(ConeExpectileSet {
        direction: Direction::Downward,
        alpha,
        halfspaces: HalfspaceSet::new(cone.dual_generators().to_vec(), offsets, Sense::Leq)?,
        exact: alpha <= 0.5,
    })
}

/// The upward cone expectile `E^level_C(X)` where `level` is the value
/// `1 - alpha` appearing in the defining inequalities
/// `{z | w_m^T z >= e_level(w_m^T X)}`.
pub fn upward_expectile(
    x: &WeightedSample,
    cone: &ConeSpec,
    level: f64,
) -> Result<ConeExpectileSet> {
    check_alpha(level)?;
    if cone.dim() != x.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            got: cone.dim(),
        });
    }
    let offsets = directional_offsets(x, cone, level)?;
    Ok(ConeExpectileSet {
        direction: Direction::Upward,
        alpha: level,
        halfspaces: HalfspaceSet::new(cone.dual_generators().to_vec(), offsets, Sense::Geq)?,
        exact: level >= 0.5,
    })
}

/// The set-valued expectile risk measure
/// `R^exp_alpha(X) = -E^alpha_{-C}(X)` for `alpha in (0, 1/2]`.
///
/// Requires `C` to contain the nonnegative orthant; this is validated against
/// the dual generators rather than trusted.
pub fn risk_measure(
    x: &WeightedSample,
    cone: &ConeSpec,
    alpha: f64,
) -> Result<ConeExpectileSet> {
    if !(alpha > 0.0 && alpha <= 0.5) {
        return Err(Error::InvalidAlpha {
            alpha,
            range: "(0, 1/2]",
        });
    }
    if cone.dim() != x.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            got: cone.dim(),
        });
    }
    if !cone.contains_orthant(DEFAULT_TOL) {
        return Err(Error::UnsupportedCone(
            "risk measure requires a cone containing the nonnegative orthant".into(),
        ));
    }
    let offsets: Vec<f64> = directional_offsets(x, cone, alpha)?
        .into_iter()
        .map(|c| -c)
        .collect();
    Ok(ConeExpectileSet {
        direction: Direction::Upward,
        alpha,
        halfspaces: HalfspaceSet::new(cone.dual_generators().to_vec(), offsets, Sense::Geq)?,
        exact: true,
    })
}

/// Outcome of a stochastic-order certification on a level grid.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderReport {
    pub holds: bool,
    /// First violating `(alpha, generator index)` when the order fails.
    pub witness: Option<(f64, usize)>,
    /// The grid the certificate refers to.
    pub alpha_grid: Vec<f64>,
}

/// The default certification grid: 99 points 0.01..0.99.
pub fn default_alpha_grid() -> Vec<f64> {
    (1..100).map(|k| k as f64 / 100.0).collect()
}

fn order_on_grid(
    x: &WeightedSample,
    y: &WeightedSample,
    cone: &ConeSpec,
    alpha_grid: &[f64],
    level_of: impl Fn(f64) -> f64,
) -> Result<OrderReport> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            got: y.dim(),
        });
    }
    for &a in alpha_grid {
        check_alpha(a)?;
    }
    for &alpha in alpha_grid {
        let level = level_of(alpha);
        for (m, w) in cone.dual_generators().iter().enumerate() {
            let ex = expectile(&x.project(w)?, level)?;
            let ey = expectile(&y.project(w)?, level)?;
            if ex > ey {
                return Ok(OrderReport {
                    holds: false,
                    witness: Some((alpha, m)),
                    alpha_grid: alpha_grid.to_vec(),
                });
            }
        }
    }
    Ok(OrderReport {
        holds: true,
        witness: None,
        alpha_grid: alpha_grid.to_vec(),
    })
}

/// Lower expectile order `X <=_le Y` certified on a level grid: for every
/// grid alpha and dual generator, `e_alpha(w^T X) <= e_alpha(w^T Y)`
/// (set inclusion of the downward sets, decided on offsets because both
/// share the same normal fan).
pub fn lower_expectile_order(
    x: &WeightedSample,
    y: &WeightedSample,
    cone: &ConeSpec,
    alpha_grid: &[f64],
) -> Result<OrderReport> {
    order_on_grid(x, y, cone, alpha_grid, |a| a)
}

/// Upper expectile order `X <=_ue Y` certified on a level grid: the upward
/// set of `X` at level `1 - alpha` contains that of `Y`, i.e.
/// `e_{1-alpha}(w^T X) <= e_{1-alpha}(w^T Y)`.
pub fn upper_expectile_order(
    x: &WeightedSample,
    y: &WeightedSample,
    cone: &ConeSpec,
    alpha_grid: &[f64],
) -> Result<OrderReport> {
    order_on_grid(x, y, cone, alpha_grid, |a| 1.0 - a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn example() -> WeightedSample {
        WeightedSample::uniform(vec![vec![5.0, 2.0], vec![4.0, -1.0], vec![3.0, 1.0]]).unwrap()
    }

    #[test]
    fn downward_offsets_of_worked_example() {
        let e = downward_expectile(&example(), &ConeSpec::orthant(2), 0.25).unwrap();
        assert_abs_diff_eq!(e.offsets()[0], 3.6, epsilon = 1e-12);
        assert_abs_diff_eq!(e.offsets()[1], 0.0, epsilon = 1e-12);
        assert!(e.exact);
    }

    #[test]
    fn downward_at_half_is_mean_minus_cone() {
        let e = downward_expectile(&example(), &ConeSpec::orthant(2), 0.5).unwrap();
        assert_abs_diff_eq!(e.offsets()[0], 4.0, epsilon = 1e-12);
        assert_abs_diff_eq!(e.offsets()[1], 2.0 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn translativity_shifts_offsets() {
        let shifted = example().shift(&[1.0, 1.0]).unwrap();
        let e = downward_expectile(&shifted, &ConeSpec::orthant(2), 0.25).unwrap();
        assert_abs_diff_eq!(e.offsets()[0], 4.6, epsilon = 1e-12);
        assert_abs_diff_eq!(e.offsets()[1], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn upward_offsets_of_worked_example() {
        let e = upward_expectile(&example(), &ConeSpec::orthant(2), 0.75).unwrap();
        assert_abs_diff_eq!(e.offsets()[0], 4.4, epsilon = 1e-12);
        assert_abs_diff_eq!(e.offsets()[1], 1.2, epsilon = 1e-12);
        let at_half = upward_expectile(&example(), &ConeSpec::orthant(2), 0.5).unwrap();
        assert_abs_diff_eq!(at_half.offsets()[0], 4.0, epsilon = 1e-12);
        assert_abs_diff_eq!(at_half.offsets()[1], 2.0 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn duality_transfer() {
        // E^{1-alpha}_C(X) = -E^alpha_{-C}(-X)
        let up = upward_expectile(&example(), &ConeSpec::orthant(2), 0.75).unwrap();
        let down_neg =
            downward_expectile(&example().negate(), &ConeSpec::orthant(2), 0.25).unwrap();
        let negated = down_neg.halfspaces.negate();
        assert_eq!(negated.sense, Sense::Geq);
        // both sets share the dual-generator normals, so equality of the
        // offset vectors is equality of the sets
        for (c1, c2) in up.offsets().iter().zip(&negated.offsets) {
            assert_abs_diff_eq!(*c1, *c2, epsilon = 1e-12);
        }
    }

    #[test]
    fn risk_of_zero_is_the_orthant() {
        let zero = WeightedSample::uniform(vec![vec![0.0, 0.0]]).unwrap();
        let r = risk_measure(&zero, &ConeSpec::orthant(2), 0.25).unwrap();
        assert!(r.contains(&[0.5, 0.5], 0.0).unwrap());
        assert!(r.contains(&[0.0, 0.0], 1e-12).unwrap());
        assert!(!r.contains(&[-0.1, 0.5], 0.0).unwrap());
    }

    #[test]
    fn risk_offsets_negate_downward() {
        let r = risk_measure(&example(), &ConeSpec::orthant(2), 0.25).unwrap();
        assert_abs_diff_eq!(r.offsets()[0], -3.6, epsilon = 1e-12);
        assert_abs_diff_eq!(r.offsets()[1], 0.0, epsilon = 1e-12);
        assert_eq!(r.halfspaces.sense, Sense::Geq);
    }

    #[test]
    fn risk_translativity() {
        let z = [1.0, 2.0];
        let r0 = risk_measure(&example(), &ConeSpec::orthant(2), 0.25).unwrap();
        let r1 = risk_measure(&example().shift(&z).unwrap(), &ConeSpec::orthant(2), 0.25)
            .unwrap();
        for ((c0, c1), w) in r0
            .offsets()
            .iter()
            .zip(r1.offsets())
            .zip(ConeSpec::orthant(2).dual_generators())
        {
            let wz: f64 = w.iter().zip(&z).map(|(a, b)| a * b).sum();
            assert_abs_diff_eq!(*c1, c0 - wz, epsilon = 1e-12);
        }
    }

    #[test]
    fn risk_rejects_cone_without_orthant() {
        let wedge = ConeSpec::from_generators_2d(&[vec![1.0, 1.0], vec![1.0, 2.0]]).unwrap();
        assert!(matches!(
            risk_measure(&example(), &wedge, 0.25),
            Err(Error::UnsupportedCone(_))
        ));
    }

    #[test]
    fn shift_dominance_in_lower_order() {
        let x = example();
        let y = x.shift(&[1.0, 1.0]).unwrap();
        let grid = default_alpha_grid();
        let cone = ConeSpec::orthant(2);
        assert!(lower_expectile_order(&x, &y, &cone, &grid).unwrap().holds);
        assert!(upper_expectile_order(&x, &y, &cone, &grid).unwrap().holds);
        // reflexivity
        assert!(lower_expectile_order(&x, &x, &cone, &grid).unwrap().holds);
        assert!(upper_expectile_order(&x, &x, &cone, &grid).unwrap().holds);
    }

    #[test]
    fn bernoulli_vs_tight_pair_gives_witness() {
        // e_alpha({0,1}) = alpha overtakes e_alpha({0.4,0.5}) = 0.4 + 0.1 alpha
        let x = WeightedSample::uniform(vec![vec![0.0], vec![1.0]]).unwrap();
        let y = WeightedSample::uniform(vec![vec![0.4], vec![0.5]]).unwrap();
        let cone = ConeSpec::from_dual_generators(1, vec![vec![1.0]]).unwrap();
        let small: Vec<f64> = (1..40).map(|k| k as f64 / 100.0).collect();
        assert!(lower_expectile_order(&x, &y, &cone, &small).unwrap().holds);
        let full = default_alpha_grid();
        let r = lower_expectile_order(&x, &y, &cone, &full).unwrap();
        assert!(!r.holds);
        let (alpha, m) = r.witness.unwrap();
        assert!(alpha > 4.0 / 9.0);
        assert_eq!(m, 0);
    }

    #[test]
    fn lower_holds_but_upper_fails_on_restricted_grid() {
        let x = WeightedSample::uniform(vec![vec![0.0], vec![10.0]]).unwrap();
        let y = WeightedSample::uniform(vec![vec![4.0], vec![5.0]]).unwrap();
        let cone = ConeSpec::from_dual_generators(1, vec![vec![1.0]]).unwrap();
        let grid: Vec<f64> = (1..=40).map(|k| k as f64 / 100.0).collect();
        // e_alpha(X) = 10 alpha stays below e_alpha(Y) = 4 + alpha on this grid
        assert!(lower_expectile_order(&x, &y, &cone, &grid).unwrap().holds);
        // but at level 1 - alpha the comparison reverses
        assert!(!upper_expectile_order(&x, &y, &cone, &grid).unwrap().holds);
    }

    #[test]
    fn high_level_sets_are_flagged_approximate() {
        let e = downward_expectile(&example(), &ConeSpec::orthant(2), 0.75).unwrap();
        assert!(!e.exact);
        let u = upward_expectile(&example(), &ConeSpec::orthant(2), 0.25).unwrap();
        assert!(!u.exact);
    }
}
