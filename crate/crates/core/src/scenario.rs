//! The scenario polytope `W(alpha)` of reweighting measures, its vertex
//! enumeration, the dual construction of cone expectiles, and the expectile
//! region as the set of scenario-reweighted means.
//!
//! Vertex candidates carry the two-value density-ratio structure (ratio
//! `beta` on a subset of atoms, ratio 1 elsewhere, normalized). That
//! structure is treated as a candidate generator, not an assumed theorem:
//! every candidate passes an explicit rank check, and the brute-force
//! active-set oracle in the test suite validates completeness at small `N`.

use nalgebra::DMatrix;

use crate::cone_expectile::{ConeExpectileSet, Direction};
use crate::error::{Error, Result};
use crate::geometry::{
    convex_hull_2d, dot, ConeSpec, HalfspaceSet, RegionPolytope, Sense, DEFAULT_TOL,
};
use crate::sample::WeightedSample;
use crate::scalar::expectile;

/// Vertex enumeration over subsets is restricted to this many atoms.
pub const MAX_SCENARIO_ATOMS: usize = 20;

/// The polytope `W(alpha)` of probability vectors `q` on `N` atoms with
/// `max_i(q_i/p_i) <= beta * min_j(q_j/p_j)`, `beta = (1-alpha)/alpha`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioPolytope {
    pub base_probabilities: Vec<f64>,
    pub alpha: f64,
    pub beta: f64,
    pub vertices: Vec<Vec<f64>>,
}

impl ScenarioPolytope {
    /// Checks the defining inequalities for an arbitrary probability vector.
    pub fn is_feasible(&self, q: &[f64], tol: f64) -> bool {
        if q.len() != self.base_probabilities.len() {
            return false;
        }
        let sum: f64 = q.iter().sum();
        if (sum - 1.0).abs() > tol || q.iter().any(|&qi| qi <= 0.0) {
            return false;
        }
        let ratios: Vec<f64> = q
            .iter()
            .zip(&self.base_probabilities)
            .map(|(qi, pi)| qi / pi)
            .collect();
        let max = ratios.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let min = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
        max <= self.beta * min + 1e-10
    }
}

fn check_alpha_half(alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 0.5) {
        return Err(Error::InvalidAlpha {
            alpha,
            range: "(0, 1/2]",
        });
    }
    Ok((1.0 - alpha) / alpha)
}

/// Enumerates the vertices of `W(alpha)` over the nonempty proper subsets of
/// atoms: ratio `beta` on the subset, ratio 1 off it, normalized. Candidates
/// must pass a rank check (N-1 linearly independent active ratio constraints
/// plus the simplex equation) and are deduplicated. Deterministic output
/// ordering: candidates are visited in increasing bitmask order, then the
/// surviving vertices sorted lexicographically.
pub fn scenario_vertices(p: &[f64], alpha: f64) -> Result<ScenarioPolytope> {
    let beta = check_alpha_half(alpha)?;
    let n = p.len();
    if n == 0 {
        return Err(Error::EmptySample);
    }
    let sum: f64 = p.iter().sum();
    if p.iter().any(|&pi| !(pi > 0.0)) || (sum - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidProbabilities { sum });
    }
    if n > MAX_SCENARIO_ATOMS {
        return Err(Error::SizeLimit {
            n,
            max: MAX_SCENARIO_ATOMS,
        });
    }
    if n == 1 || (beta - 1.0).abs() < 1e-14 {
        // at alpha = 1/2 all ratios must coincide: W collapses to {p}
        return Ok(ScenarioPolytope {
            base_probabilities: p.to_vec(),
            alpha,
            beta,
            vertices: vec![p.to_vec()],
        });
    }
    let full: u32 = (1u32 << n) - 1;
    let mut vertices: Vec<Vec<f64>> = Vec::new();
    for mask in 1..full {
        let p_in: f64 = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| p[i]).sum();
        let c = 1.0 / (beta * p_in + (1.0 - p_in));
        let q: Vec<f64> = (0..n)
            .map(|i| {
                if mask >> i & 1 == 1 {
                    beta * c * p[i]
                } else {
                    c * p[i]
                }
            })
            .collect();
        if candidate_rank_ok(p, beta, mask, n) {
            vertices.push(q);
        }
    }
    vertices.sort_by(|a, b| a.partial_cmp(b).unwrap());
    vertices.dedup_by(|a, b| a.iter().zip(b.iter()).all(|(x, y)| (x - y).abs() < DEFAULT_TOL));
    Ok(ScenarioPolytope {
        base_probabilities: p.to_vec(),
        alpha,
        beta,
        vertices,
    })
}

/// Rank check for a subset candidate: a spanning selection of its active
/// ratio constraints plus the simplex row must have full rank N.
fn candidate_rank_ok(p: &[f64], beta: f64, mask: u32, n: usize) -> bool {
    let beta_rows = |i: usize, j: usize| -> Vec<f64> {
        // active constraint q_i / p_i = beta * q_j / p_j, written as a row
        let mut row = vec![0.0; n];
        row[i] = 1.0 / p[i];
        row[j] = -beta / p[j];
        row
    };
    let in_s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
    let out_s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 0).collect();
    if in_s.is_empty() || out_s.is_empty() {
        return false;
    }
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(n);
    let i0 = in_s[0];
    let j0 = out_s[0];
    for &j in &out_s {
        rows.push(beta_rows(i0, j));
    }
    for &i in in_s.iter().skip(1) {
        rows.push(beta_rows(i, j0));
    }
    rows.push(vec![1.0; n]);
    let flat: Vec<f64> = rows.iter().flatten().copied().collect();
    let m = DMatrix::from_row_slice(rows.len(), n, &flat);
    m.rank(1e-10) == n
}

/// The expectile region `ED^alpha(X) = W_alpha(X)` as the convex hull of the
/// scenario-vertex images `sum_i q_i x_i`. Exact for `d <= 3`.
pub fn region_vertices(x: &WeightedSample, alpha: f64) -> Result<RegionPolytope> {
    check_alpha_half(alpha)?;
    let d = x.dim();
    if x.len() == 1 {
        return Ok(RegionPolytope {
            dim: d,
            vertices: vec![x.points()[0].clone()],
        });
    }
    let scen = scenario_vertices(x.probabilities(), alpha)?;
    let mapped: Vec<Vec<f64>> = scen
        .vertices
        .iter()
        .map(|q| reweighted_mean(x, q))
        .collect();
    match d {
        1 => {
            let lo = mapped.iter().map(|v| v[0]).fold(f64::INFINITY, f64::min);
            let hi = mapped
                .iter()
                .map(|v| v[0])
                .fold(f64::NEG_INFINITY, f64::max);
            let vertices = if (hi - lo).abs() < DEFAULT_TOL {
                vec![vec![lo]]
            } else {
                vec![vec![lo], vec![hi]]
            };
            Ok(RegionPolytope { dim: 1, vertices })
        }
        2 => convex_hull_2d(&mapped),
        3 => {
            // extreme-point filtering by distance to the hull of the others
            let mut vertices: Vec<Vec<f64>> = Vec::new();
            for (i, v) in mapped.iter().enumerate() {
                let others: Vec<Vec<f64>> = mapped
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, u)| u.clone())
                    .collect();
                if crate::geometry::hull_distance(v, &others, 2000) > 1e-7 {
                    vertices.push(v.clone());
                }
            }
            Ok(RegionPolytope { dim: 3, vertices })
        }
        _ => Err(Error::UnsupportedDimension(d)),
    }
}

pub(crate) fn reweighted_mean(x: &WeightedSample, q: &[f64]) -> Vec<f64> {
    let d = x.dim();
    let mut m = vec![0.0; d];
    for (qi, pt) in q.iter().zip(x.points()) {
        for (mi, xi) in m.iter_mut().zip(pt) {
            *mi += qi * xi;
        }
    }
    m
}

/// Primal outer approximation of the expectile region for `d = 2`: sample
/// `n_directions` unit vectors on the circle, offset `e_{1-alpha}` of each
/// projected sample. Independent of the scenario-vertex path.
pub fn region_primal_2d(
    x: &WeightedSample,
    alpha: f64,
    n_directions: usize,
) -> Result<HalfspaceSet> {
    check_alpha_half(alpha)?;
    if x.dim() != 2 {
        return Err(Error::UnsupportedDimension(x.dim()));
    }
    if n_directions < 4 {
        return Err(Error::InvalidInput(
            "need at least 4 directions for a bounded outer approximation".into(),
        ));
    }
    let mut normals = Vec::with_capacity(n_directions);
    let mut offsets = Vec::with_capacity(n_directions);
    for k in 0..n_directions {
        let theta = k as f64 * std::f64::consts::TAU / n_directions as f64;
        let w = vec![theta.cos(), theta.sin()];
        let offset = expectile(&x.project(&w)?, 1.0 - alpha)?;
        normals.push(w);
        offsets.push(offset);
    }
    HalfspaceSet::new(normals, offsets, Sense::Leq)
}

/// Cone expectile offsets from the scenario-vertex dual: for each dual
/// generator `w`, offset `min_Q w^T E^Q[X]` over the scenario vertices.
/// Equals the primal downward construction for `alpha <= 1/2`.
pub fn dual_cone_expectile(
    x: &WeightedSample,
    cone: &ConeSpec,
    alpha: f64,
) -> Result<ConeExpectileSet> {
    dual_cone_expectile_impl(x, cone, alpha, Direction::Downward)
}

/// Upward variant: offsets `max_Q w^T E^Q[X]`, sense `>=`, matching the
/// upward cone expectile at level `1 - alpha`.
pub fn dual_upward_cone_expectile(
    x: &WeightedSample,
    cone: &ConeSpec,
    alpha: f64,
) -> Result<ConeExpectileSet> {
    dual_cone_expectile_impl(x, cone, alpha, Direction::Upward)
}

fn dual_cone_expectile_impl(
    x: &WeightedSample,
    cone: &ConeSpec,
    alpha: f64,
    direction: Direction,
) -> Result<ConeExpectileSet> {
    check_alpha_half(alpha)?;
    if cone.dim() != x.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            got: cone.dim(),
        });
    }
    let scen = scenario_vertices(x.probabilities(), alpha)?;
    let means: Vec<Vec<f64>> = scen.vertices.iter().map(|q| reweighted_mean(x, q)).collect();
    let offsets: Vec<f64> = cone
        .dual_generators()
        .iter()
        .map(|w| {
            let vals = means.iter().map(|m| dot(w, m));
            match direction {
                Direction::Downward => vals.fold(f64::INFINITY, f64::min),
                Direction::Upward => vals.fold(f64::NEG_INFINITY, f64::max),
            }
        })
        .collect();
    let (level, sense) = match direction {
        Direction::Downward => (alpha, Sense::Leq),
        Direction::Upward => (1.0 - alpha, Sense::Geq),
    };
    Ok(ConeExpectileSet {
        direction,
        alpha: level,
        halfspaces: HalfspaceSet::new(cone.dual_generators().to_vec(), offsets, sense)?,
        exact: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn example() -> WeightedSample {
        WeightedSample::uniform(vec![vec![5.0, 2.0], vec![4.0, -1.0], vec![3.0, 1.0]]).unwrap()
    }

    fn contains_vec(set: &[Vec<f64>], v: &[f64]) -> bool {
        set.iter()
            .any(|q| q.iter().zip(v).all(|(a, b)| (a - b).abs() < 1e-10))
    }

    #[test]
    fn three_atom_uniform_has_six_vertices() {
        let s = scenario_vertices(&[1.0 / 3.0; 3], 0.25).unwrap();
        assert_eq!(s.vertices.len(), 6);
        assert_abs_diff_eq!(s.beta, 3.0, epsilon = 1e-14);
        for perm in [
            [0.6, 0.2, 0.2],
            [0.2, 0.6, 0.2],
            [0.2, 0.2, 0.6],
            [3.0 / 7.0, 3.0 / 7.0, 1.0 / 7.0],
            [3.0 / 7.0, 1.0 / 7.0, 3.0 / 7.0],
            [1.0 / 7.0, 3.0 / 7.0, 3.0 / 7.0],
        ] {
            assert!(contains_vec(&s.vertices, &perm), "missing {perm:?}");
        }
        for q in &s.vertices {
            assert!(s.is_feasible(q, 1e-10));
        }
        assert!(s.is_feasible(&s.base_probabilities, 1e-10));
    }

    #[test]
    fn two_atom_uniform() {
        let s = scenario_vertices(&[0.5, 0.5], 0.25).unwrap();
        assert_eq!(s.vertices.len(), 2);
        assert!(contains_vec(&s.vertices, &[0.75, 0.25]));
        assert!(contains_vec(&s.vertices, &[0.25, 0.75]));
    }

    #[test]
    fn half_collapses_to_base_measure() {
        let p = [0.2, 0.3, 0.5];
        let s = scenario_vertices(&p, 0.5).unwrap();
        assert_eq!(s.vertices.len(), 1);
        assert!(contains_vec(&s.vertices, &p));
    }

    #[test]
    fn vertices_converge_to_p_as_alpha_grows() {
        let p = [1.0 / 3.0; 3];
        let s = scenario_vertices(&p, 0.499).unwrap();
        for q in &s.vertices {
            for (qi, pi) in q.iter().zip(&p) {
                assert!((qi - pi).abs() < 0.01);
            }
        }
    }

    #[test]
    fn size_limit_enforced() {
        let n = 21;
        let p = vec![1.0 / n as f64; n];
        assert!(matches!(
            scenario_vertices(&p, 0.25),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn region_of_worked_example() {
        let r = region_vertices(&example(), 0.25).unwrap();
        let expected = [
            vec![4.4, 1.2],
            vec![4.0, 0.0],
            vec![3.6, 0.8],
            vec![30.0 / 7.0, 4.0 / 7.0],
            vec![4.0, 8.0 / 7.0],
            vec![26.0 / 7.0, 2.0 / 7.0],
        ];
        // hexagonal hull: all six mapped scenario vertices are extreme here
        assert_eq!(r.vertices.len(), 6);
        for v in &r.vertices {
            assert!(contains_vec(&expected, v), "unexpected vertex {v:?}");
        }
        assert!(contains_vec(&r.vertices, &[4.4, 1.2]));
        assert!(contains_vec(&r.vertices, &[4.0, 0.0]));
        assert!(contains_vec(&r.vertices, &[3.6, 0.8]));
    }

    #[test]
    fn region_at_half_is_the_mean() {
        let r = region_vertices(&example(), 0.5).unwrap();
        assert_eq!(r.vertices.len(), 1);
        assert_abs_diff_eq!(r.vertices[0][0], 4.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.vertices[0][1], 2.0 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn region_of_single_atom() {
        let x = WeightedSample::uniform(vec![vec![1.5, -2.0]]).unwrap();
        let r = region_vertices(&x, 0.1).unwrap();
        assert_eq!(r.vertices, vec![vec![1.5, -2.0]]);
    }

    #[test]
    fn primal_with_axes_gives_coordinate_box() {
        let hs = region_primal_2d(&example(), 0.25, 4).unwrap();
        // directions (1,0),(0,1),(-1,0),(0,-1): box [3.6,4.4] x [0,1.2]
        assert_abs_diff_eq!(hs.offsets[0], 4.4, epsilon = 1e-12);
        assert_abs_diff_eq!(hs.offsets[1], 1.2, epsilon = 1e-12);
        assert_abs_diff_eq!(hs.offsets[2], -3.6, epsilon = 1e-12);
        assert_abs_diff_eq!(hs.offsets[3], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn dual_cone_expectile_matches_primal() {
        let cone = ConeSpec::orthant(2);
        let dual = dual_cone_expectile(&example(), &cone, 0.25).unwrap();
        assert_abs_diff_eq!(dual.offsets()[0], 3.6, epsilon = 1e-12);
        assert_abs_diff_eq!(dual.offsets()[1], 0.0, epsilon = 1e-12);
        let up = dual_upward_cone_expectile(&example(), &cone, 0.25).unwrap();
        assert_abs_diff_eq!(up.offsets()[0], 4.4, epsilon = 1e-12);
        assert_abs_diff_eq!(up.offsets()[1], 1.2, epsilon = 1e-12);
    }

    #[test]
    fn dual_at_half_is_the_mean_projection() {
        let cone = ConeSpec::orthant(2);
        let dual = dual_cone_expectile(&example(), &cone, 0.5).unwrap();
        assert_abs_diff_eq!(dual.offsets()[0], 4.0, epsilon = 1e-12);
        assert_abs_diff_eq!(dual.offsets()[1], 2.0 / 3.0, epsilon = 1e-12);
    }
}
