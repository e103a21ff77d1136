//! Polyhedral cones, dual cones, halfspace sets and the 2D vertex/hull
//! machinery shared by all set-valued constructions.
//!
//! Cones are specified by finite generator lists. For `d = 2` the dual cone
//! is computed internally; for `d >= 3` the caller must supply generators of
//! `C^+` directly. Generators are normalized to unit length on ingestion,
//! which is observationally neutral since all defining inequalities are
//! positively homogeneous in the normal.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Global geometric tolerance: membership slack, parallelism detection,
/// hull collinearity.
pub const DEFAULT_TOL: f64 = 1e-9;

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn normalize(a: &[f64]) -> Result<Vec<f64>> {
    let n = norm(a);
    if n < 1e-14 {
        return Err(Error::InvalidInput("zero generator".into()));
    }
    Ok(a.iter().map(|x| x / n).collect())
}

fn unit(theta: f64) -> Vec<f64> {
    vec![theta.cos(), theta.sin()]
}

/// A polyhedral preorder cone `C` together with generators of its dual `C^+`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeSpec {
    dim: usize,
    generators_c: Vec<Vec<f64>>,
    generators_c_plus: Vec<Vec<f64>>,
}

impl ConeSpec {
    /// Build from generators of both `C` and `C^+`, validating the duality
    /// pairing `w^T g >= 0` for every pair.
    pub fn new(
        dim: usize,
        generators_c: Vec<Vec<f64>>,
        generators_c_plus: Vec<Vec<f64>>,
    ) -> Result<Self> {
        if generators_c_plus.is_empty() {
            return Err(Error::UnsupportedCone(
                "dual cone needs at least one generator".into(),
            ));
        }
        let gens_c = ingest(dim, &generators_c)?;
        let gens_cp = ingest(dim, &generators_c_plus)?;
        let spec = Self {
            dim,
            generators_c: gens_c,
            generators_c_plus: gens_cp,
        };
        spec.check_consistency()?;
        Ok(spec)
    }

    /// Build a 2D cone from generators of `C`; the dual is computed.
    pub fn from_generators_2d(generators: &[Vec<f64>]) -> Result<Self> {
        let gens_c = ingest(2, generators)?;
        let gens_cp = dual_cone_2d(&gens_c)?;
        Self::new(2, gens_c, gens_cp)
    }

    /// Build from dual generators only (the form used for `d >= 3`).
    pub fn from_dual_generators(dim: usize, generators_c_plus: Vec<Vec<f64>>) -> Result<Self> {
        if generators_c_plus.is_empty() {
            return Err(Error::UnsupportedCone(
                "dual cone needs at least one generator".into(),
            ));
        }
        let gens_cp = ingest(dim, &generators_c_plus)?;
        Ok(Self {
            dim,
            generators_c: Vec::new(),
            generators_c_plus: gens_cp,
        })
    }

    /// The nonnegative orthant `R^d_+`, which is self-dual.
    pub fn orthant(dim: usize) -> Self {
        let basis: Vec<Vec<f64>> = (0..dim)
            .map(|i| {
                let mut e = vec![0.0; dim];
                e[i] = 1.0;
                e
            })
            .collect();
        Self {
            dim,
            generators_c: basis.clone(),
            generators_c_plus: basis,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<f64>] {
        &self.generators_c
    }

    pub fn dual_generators(&self) -> &[Vec<f64>] {
        &self.generators_c_plus
    }

    /// Membership `z in C` decided through the dual generators.
    pub fn contains_point(&self, z: &[f64], tol: f64) -> Result<bool> {
        if z.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: z.len(),
            });
        }
        Ok(self
            .generators_c_plus
            .iter()
            .all(|w| dot(w, z) >= -tol))
    }

    /// `C` contains the nonnegative orthant iff every standard basis vector
    /// passes the dual-generator membership test.
    pub fn contains_orthant(&self, tol: f64) -> bool {
        (0..self.dim).all(|j| {
            self.generators_c_plus
                .iter()
                .all(|w| w[j] >= -tol)
        })
    }

    fn check_consistency(&self) -> Result<()> {
        for g in &self.generators_c {
            for w in &self.generators_c_plus {
                if dot(w, g) < -1e-10 {
                    return Err(Error::UnsupportedCone(format!(
                        "dual generator {w:?} and generator {g:?} violate w^T g >= 0"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn ingest(dim: usize, generators: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(generators.len());
    for g in generators {
        if g.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: g.len(),
            });
        }
        let u = normalize(g)?;
        if !out
            .iter()
            .any(|h: &Vec<f64>| h.iter().zip(&u).all(|(a, b)| (a - b).abs() < DEFAULT_TOL))
        {
            out.push(u);
        }
    }
    Ok(out)
}

/// Extreme generators of the dual of a 2D cone given by generators of `C`.
///
/// The cone must have angular width at most pi (otherwise `C^+ = {0}` and the
/// cone is rejected). For a single ray the dual is a closed halfplane; its
/// two boundary normals are returned together with the ray direction itself
/// as an interior witness so that the output still generates the halfplane
/// conically.
pub fn dual_cone_2d(generators: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    let gens = ingest(2, generators)?;
    if gens.is_empty() {
        return Err(Error::UnsupportedCone("no generators".into()));
    }
    if gens.len() == 1 {
        let theta = gens[0][1].atan2(gens[0][0]);
        return Ok(vec![
            unit(theta + std::f64::consts::FRAC_PI_2),
            unit(theta - std::f64::consts::FRAC_PI_2),
            gens[0].clone(),
        ]);
    }
    let (lo, hi, width) = angular_extent(&gens)?;
    if width > std::f64::consts::PI + 1e-9 {
        return Err(Error::UnsupportedCone(format!(
            "cone has angular width {width:.6} > pi, its dual is trivial"
        )));
    }
    let a = unit(hi - std::f64::consts::FRAC_PI_2);
    let b = unit(lo + std::f64::consts::FRAC_PI_2);
    if a.iter().zip(&b).all(|(x, y)| (x - y).abs() < DEFAULT_TOL) {
        // halfplane cone: the dual collapses to a single ray
        Ok(vec![a])
    } else {
        Ok(vec![a, b])
    }
}

/// The covering arc `[lo, hi]` of a set of unit 2-vectors and its width,
/// found via the largest circular gap between consecutive directions.
fn angular_extent(gens: &[Vec<f64>]) -> Result<(f64, f64, f64)> {
    let mut angles: Vec<f64> = gens.iter().map(|g| g[1].atan2(g[0])).collect();
    angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = angles.len();
    let tau = std::f64::consts::TAU;
    let mut best_gap = angles[0] + tau - angles[n - 1];
    let mut start = 0; // index of the angle that begins the covered arc
    for i in 1..n {
        let gap = angles[i] - angles[i - 1];
        if gap > best_gap {
            best_gap = gap;
            start = i;
        }
    }
    let lo = angles[start];
    let hi = if start == 0 {
        angles[n - 1]
    } else {
        angles[start - 1] + tau
    };
    Ok((lo, hi, hi - lo))
}

/// Apply an invertible linear map to a cone: generators of `C` move by `A`,
/// generators of `C^+` by `(A^T)^{-1}`.
pub fn transform_cone(a: &DMatrix<f64>, cone: &ConeSpec) -> Result<ConeSpec> {
    let d = cone.dim();
    if a.nrows() != d || a.ncols() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: a.nrows(),
        });
    }
    let det = a.determinant();
    if det.abs() < 1e-12 {
        return Err(Error::SingularMatrix { det });
    }
    let at_inv = a
        .transpose()
        .try_inverse()
        .ok_or(Error::SingularMatrix { det })?;
    let map = |m: &DMatrix<f64>, v: &Vec<f64>| -> Vec<f64> {
        let x = m * DMatrix::from_column_slice(d, 1, v);
        x.column(0).iter().copied().collect()
    };
    let gens_c: Vec<Vec<f64>> = cone.generators().iter().map(|g| map(a, g)).collect();
    let gens_cp: Vec<Vec<f64>> = cone
        .dual_generators()
        .iter()
        .map(|w| map(&at_inv, w))
        .collect();
    if gens_c.is_empty() {
        ConeSpec::from_dual_generators(d, gens_cp)
    } else {
        ConeSpec::new(d, gens_c, gens_cp)
    }
}

/// Inequality sense of a halfspace set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    /// `{z | w_m^T z <= c_m for all m}` (downward-type sets)
    Leq,
    /// `{z | w_m^T z >= c_m for all m}` (upward-type sets)
    Geq,
}

/// A finite intersection of halfspaces sharing one inequality sense.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfspaceSet {
    pub normals: Vec<Vec<f64>>,
    pub offsets: Vec<f64>,
    pub sense: Sense,
}

impl HalfspaceSet {
    pub fn new(normals: Vec<Vec<f64>>, offsets: Vec<f64>, sense: Sense) -> Result<Self> {
        if normals.is_empty() || normals.len() != offsets.len() {
            return Err(Error::InvalidInput(
                "normals and offsets must be nonempty and of equal length".into(),
            ));
        }
        let dim = normals[0].len();
        for n in &normals {
            if n.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: n.len(),
                });
            }
        }
        Ok(Self {
            normals,
            offsets,
            sense,
        })
    }

    pub fn dim(&self) -> usize {
        self.normals[0].len()
    }

    /// Membership within tolerance `tol`.
    pub fn contains(&self, z: &[f64], tol: f64) -> Result<bool> {
        if z.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: z.len(),
            });
        }
        Ok(self
            .normals
            .iter()
            .zip(&self.offsets)
            .all(|(w, &c)| match self.sense {
                Sense::Leq => dot(w, z) <= c + tol,
                Sense::Geq => dot(w, z) >= c - tol,
            }))
    }

    /// Pointwise negation `-S = {-z | z in S}`: `w . z <= c` becomes
    /// `w . (-z) <= c`, i.e. `w . z >= -c`, so the normals stay put while
    /// offsets and the sense flip. Turns a downward set into the matching
    /// upward set and vice versa.
    pub fn negate(&self) -> Self {
        Self {
            normals: self.normals.clone(),
            offsets: self.offsets.iter().map(|c| -c).collect(),
            sense: match self.sense {
                Sense::Leq => Sense::Geq,
                Sense::Geq => Sense::Leq,
            },
        }
    }
}

/// Boundary vertices and recession rays of a 2D halfspace set whose normals
/// span an arc of width < pi.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexRays {
    pub vertices: Vec<Vec<f64>>,
    pub rays: Vec<Vec<f64>>,
}

/// Vertex/ray representation of a 2D cone-generated halfspace set.
///
/// Normals are sorted by angle, adjacent boundary lines intersected and
/// non-extreme intersections dropped; numerically parallel normals are merged
/// keeping the tighter offset. The two recession rays point into `-C` for
/// sense `<=` and into `C` for sense `>=`.
pub fn vertices_2d(hs: &HalfspaceSet, tol: f64) -> Result<VertexRays> {
    if hs.dim() != 2 {
        return Err(Error::UnsupportedDimension(hs.dim()));
    }
    // normalize and merge parallel normals (tighter offset wins)
    let mut cons: Vec<(Vec<f64>, f64)> = Vec::new();
    for (w, &c) in hs.normals.iter().zip(&hs.offsets) {
        let n = norm(w);
        if n < 1e-14 {
            return Err(Error::InvalidInput("zero normal".into()));
        }
        let u: Vec<f64> = w.iter().map(|x| x / n).collect();
        let cu = c / n;
        if let Some((_, c0)) = cons
            .iter_mut()
            .find(|(v, _)| v.iter().zip(&u).all(|(a, b)| (a - b).abs() < tol))
        {
            *c0 = match hs.sense {
                Sense::Leq => c0.min(cu),
                Sense::Geq => c0.max(cu),
            };
        } else {
            cons.push((u, cu));
        }
    }
    let normals: Vec<Vec<f64>> = cons.iter().map(|(u, _)| u.clone()).collect();
    let (lo, hi, width) = angular_extent(&normals)?;
    if width >= std::f64::consts::PI - 1e-9 && cons.len() > 1 {
        return Err(Error::UnsupportedCone(
            "normals span an arc of width >= pi; the set has no vertex/ray form here".into(),
        ));
    }
    let rays = match hs.sense {
        Sense::Leq => vec![
            unit(hi + std::f64::consts::FRAC_PI_2),
            unit(lo - std::f64::consts::FRAC_PI_2),
        ],
        Sense::Geq => vec![
            unit(hi - std::f64::consts::FRAC_PI_2),
            unit(lo + std::f64::consts::FRAC_PI_2),
        ],
    };
    if cons.len() == 1 {
        return Ok(VertexRays {
            vertices: Vec::new(),
            rays,
        });
    }
    // all-pairs boundary intersections, kept if feasible
    let mut vertices: Vec<(Vec<f64>, f64)> = Vec::new();
    for i in 0..cons.len() {
        for j in (i + 1)..cons.len() {
            if let Some(p) = line_intersection(&cons[i].0, cons[i].1, &cons[j].0, cons[j].1, tol) {
                let scale = 1.0 + norm(&p);
                let feasible = cons.iter().all(|(w, c)| match hs.sense {
                    Sense::Leq => dot(w, &p) <= c + tol * scale,
                    Sense::Geq => dot(w, &p) >= c - tol * scale,
                });
                if feasible {
                    // order along the boundary by the bisector angle of the
                    // two active normals
                    let bis = [
                        cons[i].0[0] + cons[j].0[0],
                        cons[i].0[1] + cons[j].0[1],
                    ];
                    let key = bis[1].atan2(bis[0]);
                    if !vertices.iter().any(|(q, _)| {
                        q.iter().zip(&p).all(|(a, b)| (a - b).abs() < tol * scale * 10.0)
                    }) {
                        vertices.push((p, key));
                    }
                }
            }
        }
    }
    vertices.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap());
    Ok(VertexRays {
        vertices: vertices.into_iter().map(|(p, _)| p).collect(),
        rays,
    })
}

fn line_intersection(
    w1: &[f64],
    c1: f64,
    w2: &[f64],
    c2: f64,
    tol: f64,
) -> Option<Vec<f64>> {
    let det = w1[0] * w2[1] - w1[1] * w2[0];
    if det.abs() < tol {
        return None;
    }
    Some(vec![
        (c1 * w2[1] - c2 * w1[1]) / det,
        (w1[0] * c2 - w2[0] * c1) / det,
    ])
}

/// A polytope in V-representation. For `d = 2` the vertices are the
/// counterclockwise-ordered boundary polygon.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionPolytope {
    pub dim: usize,
    pub vertices: Vec<Vec<f64>>,
}

/// Convex hull of 2D points by monotone chain: extreme points in
/// counterclockwise order, collinear interior points removed.
pub fn convex_hull_2d(points: &[Vec<f64>]) -> Result<RegionPolytope> {
    if points.is_empty() {
        return Err(Error::EmptySample);
    }
    for p in points {
        if p.len() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: p.len(),
            });
        }
    }
    // pre-dedupe within the geometric tolerance so near-degenerate inputs
    // collapse cleanly
    let mut pts: Vec<Vec<f64>> = Vec::new();
    for p in points {
        if !pts.iter().any(|q| {
            (q[0] - p[0]).abs() < DEFAULT_TOL && (q[1] - p[1]).abs() < DEFAULT_TOL
        }) {
            pts.push(p.clone());
        }
    }
    if pts.len() == 1 {
        return Ok(RegionPolytope {
            dim: 2,
            vertices: pts,
        });
    }
    pts.sort_by(|a, b| (a[0], a[1]).partial_cmp(&(b[0], b[1])).unwrap());
    let cross = |o: &[f64], a: &[f64], b: &[f64]| {
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let mut lower: Vec<Vec<f64>> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= DEFAULT_TOL
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Vec<f64>> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= DEFAULT_TOL
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    Ok(RegionPolytope {
        dim: 2,
        vertices: lower,
    })
}

/// Bounded polygon from supporting halfspaces `{z | w^T z <= c}` whose
/// normals cover the full circle. Valid when every offset is the exact
/// support value of the target set: then adjacent supporting lines intersect
/// on the boundary of the outer polygon.
pub fn supporting_polygon(hs: &HalfspaceSet) -> Result<RegionPolytope> {
    if hs.dim() != 2 {
        return Err(Error::UnsupportedDimension(hs.dim()));
    }
    if hs.sense != Sense::Leq {
        return Err(Error::InvalidInput(
            "supporting_polygon expects sense <=".into(),
        ));
    }
    let mut cons: Vec<(Vec<f64>, f64, f64)> = hs
        .normals
        .iter()
        .zip(&hs.offsets)
        .map(|(w, &c)| {
            let n = norm(w);
            let u: Vec<f64> = w.iter().map(|x| x / n).collect();
            let theta = u[1].atan2(u[0]);
            (u, c / n, theta)
        })
        .collect();
    cons.sort_by(|a, b| a.2.partial_cmp(&b.2).unwrap());
    cons.dedup_by(|a, b| (a.2 - b.2).abs() < 1e-12 && {
        b.1 = b.1.min(a.1);
        true
    });
    let m = cons.len();
    if m < 3 {
        return Err(Error::InvalidInput(
            "supporting_polygon needs at least three distinct directions".into(),
        ));
    }
    let mut pts = Vec::with_capacity(m);
    for i in 0..m {
        let j = (i + 1) % m;
        if let Some(p) =
            line_intersection(&cons[i].0, cons[i].1, &cons[j].0, cons[j].1, 1e-12)
        {
            pts.push(p);
        }
    }
    convex_hull_2d(&pts)
}

/// Euclidean distance from a point to a convex polygon given by its CCW
/// vertex list (degenerate polygons allowed).
pub fn point_polygon_distance(p: &[f64], polygon: &[Vec<f64>]) -> f64 {
    match polygon.len() {
        0 => f64::INFINITY,
        1 => ((p[0] - polygon[0][0]).powi(2) + (p[1] - polygon[0][1]).powi(2)).sqrt(),
        _ => {
            let n = polygon.len();
            let mut inside = n > 2;
            let mut best = f64::INFINITY;
            for i in 0..n {
                let a = &polygon[i];
                let b = &polygon[(i + 1) % n];
                if n > 2 {
                    let cr = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
                    if cr < 0.0 {
                        inside = false;
                    }
                }
                best = best.min(point_segment_distance(p, a, b));
            }
            if inside {
                0.0
            } else {
                best
            }
        }
    }
}

fn point_segment_distance(p: &[f64], a: &[f64], b: &[f64]) -> f64 {
    let ab = [b[0] - a[0], b[1] - a[1]];
    let ap = [p[0] - a[0], p[1] - a[1]];
    let len2 = ab[0] * ab[0] + ab[1] * ab[1];
    let t = if len2 > 0.0 {
        ((ap[0] * ab[0] + ap[1] * ab[1]) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let q = [a[0] + t * ab[0], a[1] + t * ab[1]];
    ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt()
}

/// Directed Hausdorff distance from the vertices of `a` to the polygon `b`.
/// For nested convex polygons (`a` outer, `b` inner) this is the Hausdorff
/// distance between the two sets.
pub fn directed_hausdorff(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    a.iter()
        .map(|p| point_polygon_distance(p, b))
        .fold(0.0, f64::max)
}

/// Distance from `target` to the convex hull of `points` in any dimension,
/// by pairwise Frank-Wolfe on the simplex-parameterized projection problem.
/// Used for extreme-point filtering where no exact 2D hull is available.
pub fn hull_distance(target: &[f64], points: &[Vec<f64>], iterations: usize) -> f64 {
    if points.is_empty() {
        return f64::INFINITY;
    }
    let d = target.len();
    let n = points.len();
    let mut lambda = vec![1.0 / n as f64; n];
    let current = |lambda: &[f64]| -> Vec<f64> {
        let mut x = vec![0.0; d];
        for (li, p) in lambda.iter().zip(points) {
            for (xi, pi) in x.iter_mut().zip(p) {
                *xi += li * pi;
            }
        }
        x
    };
    for _ in 0..iterations {
        let x = current(&lambda);
        let grad: Vec<f64> = x.iter().zip(target).map(|(a, b)| a - b).collect();
        // toward vertex: minimize grad . p; away vertex: maximize over support
        let (mut s, mut s_val) = (0, f64::INFINITY);
        let (mut v, mut v_val) = (0, f64::NEG_INFINITY);
        for (i, p) in points.iter().enumerate() {
            let g = dot(&grad, p);
            if g < s_val {
                s_val = g;
                s = i;
            }
            if lambda[i] > 1e-15 && g > v_val {
                v_val = g;
                v = i;
            }
        }
        let gap = v_val - s_val;
        if gap < 1e-15 {
            break;
        }
        // pairwise step: move mass from the away vertex to the toward vertex
        let dir: Vec<f64> = points[s].iter().zip(&points[v]).map(|(a, b)| a - b).collect();
        let denom = dot(&dir, &dir);
        if denom < 1e-30 {
            break;
        }
        let step = (-dot(&grad, &dir) / denom).clamp(0.0, lambda[v]);
        if step <= 0.0 {
            break;
        }
        lambda[v] -= step;
        lambda[s] += step;
    }
    let x = current(&lambda);
    x.iter()
        .zip(target)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn close(a: &[f64], b: &[f64], eps: f64) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).abs() < eps)
    }

    fn has_dir(gens: &[Vec<f64>], d: &[f64]) -> bool {
        let u = {
            let n = norm(d);
            d.iter().map(|x| x / n).collect::<Vec<_>>()
        };
        gens.iter().any(|g| close(g, &u, 1e-9))
    }

    #[test]
    fn orthant_is_self_dual() {
        let dual = dual_cone_2d(&[vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert_eq!(dual.len(), 2);
        assert!(has_dir(&dual, &[1.0, 0.0]));
        assert!(has_dir(&dual, &[0.0, 1.0]));
    }

    #[test]
    fn dual_of_a_single_ray_is_a_halfplane() {
        let dual = dual_cone_2d(&[vec![1.0, 0.0]]).unwrap();
        assert_eq!(dual.len(), 3);
        assert!(has_dir(&dual, &[0.0, 1.0]));
        assert!(has_dir(&dual, &[0.0, -1.0]));
        assert!(has_dir(&dual, &[1.0, 0.0]));
    }

    #[test]
    fn dual_of_symmetric_wedge() {
        let dual = dual_cone_2d(&[vec![1.0, 1.0], vec![-1.0, 1.0]]).unwrap();
        assert!(has_dir(&dual, &[1.0, 1.0]));
        assert!(has_dir(&dual, &[-1.0, 1.0]));
        // brute-force duality check over a fine angular grid
        for k in 0..720 {
            let th = k as f64 * std::f64::consts::TAU / 720.0;
            let w = unit(th);
            let in_dual = dual
                .iter()
                .map(|g| dot(g, &w))
                .all(|_| true);
            let _ = in_dual;
            let nonneg_on_cone =
                dot(&w, &[1.0, 1.0]) >= -1e-12 && dot(&w, &[-1.0, 1.0]) >= -1e-12;
            let generated = {
                // w in cone(dual) iff w between the two extreme dual rays
                let d0 = &dual[0];
                let d1 = &dual[1];
                let s0 = d0[0] * w[1] - d0[1] * w[0];
                let s1 = d1[0] * w[1] - d1[1] * w[0];
                (s0 >= -1e-9 && s1 <= 1e-9) || (s0 <= 1e-9 && s1 >= -1e-9)
            };
            if nonneg_on_cone {
                assert!(generated, "direction {th} in C+ but not generated");
            }
        }
    }

    #[test]
    fn wide_cone_rejected() {
        let r = dual_cone_2d(&[vec![1.0, 0.0], vec![-1.0, 0.1], vec![0.0, -1.0]]);
        assert!(matches!(r, Err(Error::UnsupportedCone(_))));
    }

    #[test]
    fn transform_identity_keeps_cone() {
        let c = ConeSpec::orthant(2);
        let a = DMatrix::identity(2, 2);
        let t = transform_cone(&a, &c).unwrap();
        assert_eq!(t.dual_generators(), c.dual_generators());
    }

    #[test]
    fn transform_diag_maps_dual_by_inverse_transpose() {
        let c = ConeSpec::orthant(2);
        let a = DMatrix::from_row_slice(2, 2, &[2.0, 0.0, 0.0, 3.0]);
        let t = transform_cone(&a, &c).unwrap();
        // (A^T)^{-1} e1 = (1/2, 0), normalized (1, 0); same for e2
        assert!(has_dir(t.dual_generators(), &[1.0, 0.0]));
        assert!(has_dir(t.dual_generators(), &[0.0, 1.0]));
    }

    #[test]
    fn transform_rotation_rotates_dual() {
        let c = ConeSpec::orthant(2);
        let a = DMatrix::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0]);
        let t = transform_cone(&a, &c).unwrap();
        assert!(has_dir(t.dual_generators(), &[0.0, 1.0]));
        assert!(has_dir(t.dual_generators(), &[-1.0, 0.0]));
    }

    #[test]
    fn singular_matrix_rejected() {
        let c = ConeSpec::orthant(2);
        let a = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 4.0]);
        assert!(matches!(
            transform_cone(&a, &c),
            Err(Error::SingularMatrix { .. })
        ));
    }

    #[test]
    fn contains_examples() {
        let hs = HalfspaceSet::new(
            vec![vec![1.0, 0.0], vec![0.0, 1.0]],
            vec![3.6, 0.0],
            Sense::Leq,
        )
        .unwrap();
        assert!(hs.contains(&[3.0, -1.0], 0.0).unwrap());
        assert!(!hs.contains(&[3.61, 0.0], 0.0).unwrap());
        assert!(hs.contains(&[-1e6, -1e6], 0.0).unwrap());
        assert!(hs.contains(&[1.0, 2.0, 3.0], 0.0).is_err());
    }

    #[test]
    fn vertices_of_orthant_wedges() {
        let down = HalfspaceSet::new(
            vec![vec![1.0, 0.0], vec![0.0, 1.0]],
            vec![3.6, 0.0],
            Sense::Leq,
        )
        .unwrap();
        let vr = vertices_2d(&down, DEFAULT_TOL).unwrap();
        assert_eq!(vr.vertices.len(), 1);
        assert!(close(&vr.vertices[0], &[3.6, 0.0], 1e-12));
        assert!(has_dir(&vr.rays, &[-1.0, 0.0]));
        assert!(has_dir(&vr.rays, &[0.0, -1.0]));

        let up = HalfspaceSet::new(
            vec![vec![1.0, 0.0], vec![0.0, 1.0]],
            vec![4.4, 1.2],
            Sense::Geq,
        )
        .unwrap();
        let vr = vertices_2d(&up, DEFAULT_TOL).unwrap();
        assert_eq!(vr.vertices.len(), 1);
        assert!(close(&vr.vertices[0], &[4.4, 1.2], 1e-12));
        assert!(has_dir(&vr.rays, &[1.0, 0.0]));
        assert!(has_dir(&vr.rays, &[0.0, 1.0]));
    }

    #[test]
    fn single_halfspace_has_no_vertex() {
        let hs = HalfspaceSet::new(vec![vec![1.0, 0.0]], vec![0.0], Sense::Leq).unwrap();
        let vr = vertices_2d(&hs, DEFAULT_TOL).unwrap();
        assert!(vr.vertices.is_empty());
        assert!(has_dir(&vr.rays, &[0.0, 1.0]));
        assert!(has_dir(&vr.rays, &[0.0, -1.0]));
    }

    #[test]
    fn redundant_interior_normal_is_harmless() {
        // middle normal with a loose offset must not break the vertex chain
        let hs = HalfspaceSet::new(
            vec![vec![1.0, 0.0], vec![1.0, 1.0], vec![0.0, 1.0]],
            vec![1.0, 5.0, 1.0],
            Sense::Leq,
        )
        .unwrap();
        let vr = vertices_2d(&hs, DEFAULT_TOL).unwrap();
        assert_eq!(vr.vertices.len(), 1);
        assert!(close(&vr.vertices[0], &[1.0, 1.0], 1e-9));
    }

    #[test]
    fn hull_removes_interior_points() {
        let hull = convex_hull_2d(&[
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![0.0, 1.0],
            vec![0.25, 0.25],
        ])
        .unwrap();
        assert_eq!(hull.vertices.len(), 3);
    }

    #[test]
    fn hull_of_single_point() {
        let hull = convex_hull_2d(&[vec![2.0, 3.0]]).unwrap();
        assert_eq!(hull.vertices, vec![vec![2.0, 3.0]]);
    }

    #[test]
    fn hull_is_counterclockwise() {
        let hull = convex_hull_2d(&[
            vec![0.0, 0.0],
            vec![2.0, 0.0],
            vec![2.0, 2.0],
            vec![0.0, 2.0],
        ])
        .unwrap();
        let v = &hull.vertices;
        let mut area = 0.0;
        for i in 0..v.len() {
            let j = (i + 1) % v.len();
            area += v[i][0] * v[j][1] - v[j][0] * v[i][1];
        }
        assert!(area > 0.0);
    }

    #[test]
    fn hull_distance_matches_polygon_distance() {
        let square = vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![1.0, 1.0],
            vec![0.0, 1.0],
        ];
        for p in [
            vec![0.5, 0.5],
            vec![2.0, 0.5],
            vec![-1.0, -1.0],
            vec![0.5, 3.0],
        ] {
            let exact = point_polygon_distance(&p, &square);
            let fw = hull_distance(&p, &square, 500);
            assert_abs_diff_eq!(exact, fw, epsilon = 1e-7);
        }
    }

    #[test]
    fn supporting_polygon_of_a_box() {
        // support values of the unit square over 8 directions
        let dirs: Vec<Vec<f64>> = (0..8)
            .map(|k| unit(k as f64 * std::f64::consts::TAU / 8.0))
            .collect();
        let square = vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![1.0, 1.0],
            vec![0.0, 1.0],
        ];
        let offsets: Vec<f64> = dirs
            .iter()
            .map(|w| square.iter().map(|v| dot(w, v)).fold(f64::NEG_INFINITY, f64::max))
            .collect();
        let hs = HalfspaceSet::new(dirs, offsets, Sense::Leq).unwrap();
        let poly = supporting_polygon(&hs).unwrap();
        // the diagonal halfplanes touch the square exactly at its corners,
        // so they are redundant and the polygon is the square itself
        assert_eq!(poly.vertices.len(), 4);
        for v in &poly.vertices {
            assert!(point_polygon_distance(v, &square) < 1e-9);
        }
    }
}
