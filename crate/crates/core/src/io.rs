//! File formats: CSV sample ingestion, JSON cone specifications, and the
//! JSON report schemas emitted by the `conex` binary.
//!
//! Reports round every number to 15 significant digits before
//! serialization, so identical inputs produce byte-identical output files.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cone_expectile::{ConeExpectileSet, Direction, OrderReport};
use crate::error::{Error, Result};
use crate::geometry::{vertices_2d, ConeSpec, Sense};
use crate::rank::RankResult;
use crate::sample::WeightedSample;
use crate::scenario::ScenarioPolytope;

/// Rounds to 15 significant digits, the precision used in emitted JSON.
pub fn round_sig15(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.14e}").parse().unwrap()
}

fn round_vec(v: &[f64]) -> Vec<f64> {
    v.iter().copied().map(round_sig15).collect()
}

fn round_mat(m: &[Vec<f64>]) -> Vec<Vec<f64>> {
    m.iter().map(|row| round_vec(row)).collect()
}

/// Reads a weighted sample from CSV: header row with columns `x1..xd` and
/// an optional `weight` column (normalized internally). Malformed cells are
/// reported with their 1-based data row number.
pub fn read_sample_csv(path: &Path) -> Result<WeightedSample> {
    let mut reader = csv::Reader::from_path(path)?;
    let headers = reader.headers()?.clone();
    let mut coord_cols = Vec::new();
    let mut weight_col = None;
    for (idx, name) in headers.iter().enumerate() {
        let name = name.trim();
        if name == "weight" {
            if weight_col.replace(idx).is_some() {
                return Err(Error::InvalidInput("duplicate weight column".into()));
            }
            continue;
        }
        let Some(k) = name
            .strip_prefix('x')
            .and_then(|s| s.parse::<usize>().ok())
            .filter(|&k| k >= 1)
        else {
            return Err(Error::InvalidInput(format!(
                "unexpected column {name:?}: expected x1..xd and optional weight"
            )));
        };
        coord_cols.push((k, idx));
    }
    coord_cols.sort();
    let dim = coord_cols.len();
    if dim == 0 {
        return Err(Error::InvalidInput("no coordinate columns x1..xd".into()));
    }
    if coord_cols.iter().map(|&(k, _)| k).ne(1..=dim) {
        return Err(Error::InvalidInput(
            "coordinate columns must be exactly x1..xd with no gaps".into(),
        ));
    }

    let parse = |cell: &str, row: usize, col: &str| -> Result<f64> {
        cell.trim().parse::<f64>().map_err(|_| {
            Error::InvalidInput(format!("row {row}: non-numeric value {cell:?} in column {col}"))
        })
    };
    let mut points = Vec::new();
    let mut weights = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let row = i + 1;
        let mut point = Vec::with_capacity(dim);
        for &(k, idx) in &coord_cols {
            let cell = record.get(idx).ok_or_else(|| {
                Error::InvalidInput(format!("row {row}: missing column x{k}"))
            })?;
            point.push(parse(cell, row, &format!("x{k}"))?);
        }
        points.push(point);
        if let Some(idx) = weight_col {
            let cell = record.get(idx).ok_or_else(|| {
                Error::InvalidInput(format!("row {row}: missing weight"))
            })?;
            let w = parse(cell, row, "weight")?;
            if !(w > 0.0) {
                return Err(Error::InvalidInput(format!(
                    "row {row}: weight must be positive, got {w}"
                )));
            }
            weights.push(w);
        }
    }
    if points.is_empty() {
        return Err(Error::EmptySample);
    }
    if weight_col.is_some() {
        let total: f64 = weights.iter().sum();
        let probabilities = weights.iter().map(|w| w / total).collect();
        WeightedSample::new(points, probabilities)
    } else {
        WeightedSample::uniform(points)
    }
}

#[derive(Debug, Deserialize)]
struct ConeFile {
    dimension: usize,
    #[serde(rename = "generators_C")]
    generators_c: Option<Vec<Vec<f64>>>,
    #[serde(rename = "generators_C_plus")]
    generators_c_plus: Option<Vec<Vec<f64>>>,
}

/// Reads a cone from a JSON file of the form
/// `{"dimension": d, "generators_C": [[..]], "generators_C_plus": [[..]]}`
/// with at least one generator list present. When only `generators_C` is
/// given the dual is computed, which is supported for `d <= 2` only.
pub fn read_cone_json(path: &Path) -> Result<ConeSpec> {
    let text = fs::read_to_string(path)?;
    let file: ConeFile = serde_json::from_str(&text)?;
    let d = file.dimension;
    match (file.generators_c, file.generators_c_plus) {
        (Some(c), Some(cp)) => ConeSpec::new(d, c, cp),
        (None, Some(cp)) => ConeSpec::from_dual_generators(d, cp),
        (Some(c), None) if d == 2 => ConeSpec::from_generators_2d(&c),
        (Some(c), None) if d == 1 => {
            let mut signs: Vec<f64> = Vec::new();
            for g in &c {
                if g.len() != 1 {
                    return Err(Error::DimensionMismatch { expected: 1, got: g.len() });
                }
                let s = g[0].signum();
                if g[0] != 0.0 && !signs.contains(&s) {
                    signs.push(s);
                }
            }
            match signs.len() {
                // C = {0}: dual is the whole line
                0 => ConeSpec::new(1, Vec::new(), vec![vec![1.0], vec![-1.0]]),
                1 => ConeSpec::new(1, vec![vec![signs[0]]], vec![vec![signs[0]]]),
                _ => Err(Error::UnsupportedCone(
                    "C = R has a trivial dual; no ordering directions remain".into(),
                )),
            }
        }
        (Some(_), None) => Err(Error::UnsupportedCone(format!(
            "dual-cone computation is only built in for d <= 2; \
             supply generators_C_plus for d = {d}"
        ))),
        (None, None) => Err(Error::InvalidInput(
            "cone file needs generators_C or generators_C_plus".into(),
        )),
    }
}

fn sense_name(sense: Sense) -> &'static str {
    match sense {
        Sense::Leq => "leq",
        Sense::Geq => "geq",
    }
}

/// One expectile value on a level grid.
#[derive(Debug, Serialize, Deserialize)]
pub struct ExpectilePoint {
    pub alpha: f64,
    pub expectile: f64,
}

/// Report of the `expectile` subcommand.
#[derive(Debug, Serialize, Deserialize)]
pub struct ExpectileReport {
    pub direction: Vec<f64>,
    pub values: Vec<ExpectilePoint>,
}

/// Halfspace representation of a cone expectile set, plus its vertices and
/// recession rays for `d = 2`.
#[derive(Debug, Serialize, Deserialize)]
pub struct ConeExpectileReport {
    pub direction: String,
    pub alpha: f64,
    pub exact: bool,
    pub normals: Vec<Vec<f64>>,
    pub offsets: Vec<f64>,
    pub sense: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<f64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rays: Option<Vec<Vec<f64>>>,
}

impl ConeExpectileReport {
    /// Builds the report, attaching vertex/ray data in dimension 2.
    pub fn from_set(set: &ConeExpectileSet, tol: f64) -> Result<Self> {
        let hs = &set.halfspaces;
        let (vertices, rays) = if hs.dim() == 2 {
            let vr = vertices_2d(hs, tol)?;
            (Some(round_mat(&vr.vertices)), Some(round_mat(&vr.rays)))
        } else {
            (None, None)
        };
        Ok(Self {
            direction: match set.direction {
                Direction::Downward => "downward".into(),
                Direction::Upward => "upward".into(),
            },
            alpha: round_sig15(set.alpha),
            exact: set.exact,
            normals: round_mat(&hs.normals),
            offsets: round_vec(&hs.offsets),
            sense: sense_name(hs.sense).into(),
            vertices,
            rays,
        })
    }

    /// Membership query against the serialized halfspace data; used to
    /// round-trip reports back into `contains` checks.
    pub fn contains(&self, z: &[f64], tol: f64) -> Result<bool> {
        if self.normals.iter().any(|w| w.len() != z.len()) {
            return Err(Error::DimensionMismatch {
                expected: self.normals.first().map_or(0, Vec::len),
                got: z.len(),
            });
        }
        let leq = self.sense == "leq";
        Ok(self
            .normals
            .iter()
            .zip(&self.offsets)
            .all(|(w, &c)| {
                let v: f64 = w.iter().zip(z).map(|(a, b)| a * b).sum();
                if leq {
                    v <= c + tol
                } else {
                    v >= c - tol
                }
            }))
    }
}

/// Report of the `scenarios` and `region` subcommands.
#[derive(Debug, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub alpha: f64,
    pub beta: f64,
    pub scenario_vertices: Vec<Vec<f64>>,
    pub region_vertices: Vec<Vec<f64>>,
    /// CCW boundary polygon, present for `d = 2`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polygon: Option<Vec<Vec<f64>>>,
}

impl ScenarioReport {
    pub fn new(
        polytope: &ScenarioPolytope,
        region_vertices: &[Vec<f64>],
        polygon: Option<&[Vec<f64>]>,
    ) -> Self {
        Self {
            alpha: round_sig15(polytope.alpha),
            beta: round_sig15(polytope.beta),
            scenario_vertices: round_mat(&polytope.vertices),
            region_vertices: round_mat(region_vertices),
            polygon: polygon.map(round_mat),
        }
    }
}

/// Per-generator directional levels in a rank report.
#[derive(Debug, Serialize, Deserialize)]
pub struct GeneratorLevelReport {
    pub generator: usize,
    pub downward_level: f64,
    pub upward_level: f64,
}

/// Report of the `rank` subcommand.
#[derive(Debug, Serialize, Deserialize)]
pub struct RankReport {
    pub point: Vec<f64>,
    pub downward_rank: f64,
    pub upward_rank: f64,
    pub per_generator: Vec<GeneratorLevelReport>,
}

impl RankReport {
    pub fn new(point: &[f64], result: &RankResult) -> Self {
        Self {
            point: round_vec(point),
            downward_rank: round_sig15(result.downward),
            upward_rank: round_sig15(result.upward),
            per_generator: result
                .per_generator
                .iter()
                .map(|g| GeneratorLevelReport {
                    generator: g.generator,
                    downward_level: round_sig15(g.downward_level),
                    upward_level: round_sig15(g.upward_level),
                })
                .collect(),
        }
    }
}

/// One side of an `order` report.
#[derive(Debug, Serialize, Deserialize)]
pub struct OrderSideReport {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_generator: Option<usize>,
}

impl OrderSideReport {
    pub fn new(report: &OrderReport) -> Self {
        Self {
            holds: report.holds,
            witness_alpha: report.witness.map(|(a, _)| round_sig15(a)),
            witness_generator: report.witness.map(|(_, m)| m),
        }
    }
}

/// Report of the `order` subcommand: both expectile orders certified on the
/// same level grid.
#[derive(Debug, Serialize, Deserialize)]
pub struct StochasticOrderReport {
    pub alpha_grid: Vec<f64>,
    pub lower: OrderSideReport,
    pub upper: OrderSideReport,
}

/// Serializes a report as pretty JSON with a trailing newline.
pub fn to_json_string<T: Serialize>(report: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(report)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_temp(content: &str, suffix: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::Builder::new().suffix(suffix).tempfile().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn round_sig15_is_stable() {
        let x = 0.1 + 0.2;
        assert_eq!(round_sig15(x), round_sig15(round_sig15(x)));
        assert_eq!(round_sig15(0.0), 0.0);
        assert_eq!(round_sig15(-3.6), -3.6);
    }

    #[test]
    fn reads_plain_csv() {
        let f = write_temp("x1,x2\n5,2\n4,-1\n3,1\n", ".csv");
        let s = read_sample_csv(f.path()).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.points()[0], vec![5.0, 2.0]);
        assert!((s.probabilities()[1] - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn reads_weighted_csv_and_normalizes() {
        let f = write_temp("x1,weight\n1,2\n3,6\n", ".csv");
        let s = read_sample_csv(f.path()).unwrap();
        assert!((s.probabilities()[0] - 0.25).abs() < 1e-15);
        assert!((s.probabilities()[1] - 0.75).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_cell_with_row_number() {
        let f = write_temp("x1,x2\n1,2\n1,oops\n", ".csv");
        let err = read_sample_csv(f.path()).unwrap_err().to_string();
        assert!(err.contains("row 2"), "{err}");
        assert!(err.contains("x2"), "{err}");
    }

    #[test]
    fn rejects_gap_in_columns() {
        let f = write_temp("x1,x3\n1,2\n", ".csv");
        assert!(read_sample_csv(f.path()).is_err());
    }

    #[test]
    fn reads_cone_with_primal_generators_2d() {
        let f = write_temp(
            r#"{"dimension": 2, "generators_C": [[1, 0], [0, 1]]}"#,
            ".json",
        );
        let cone = read_cone_json(f.path()).unwrap();
        assert_eq!(cone.dim(), 2);
        assert!(cone.contains_orthant(1e-12));
    }

    #[test]
    fn reads_cone_with_dual_generators_3d() {
        let f = write_temp(
            r#"{"dimension": 3, "generators_C_plus": [[1,0,0],[0,1,0],[0,0,1]]}"#,
            ".json",
        );
        let cone = read_cone_json(f.path()).unwrap();
        assert_eq!(cone.dual_generators().len(), 3);
    }

    #[test]
    fn primal_only_3d_is_rejected() {
        let f = write_temp(
            r#"{"dimension": 3, "generators_C": [[1,0,0]]}"#,
            ".json",
        );
        assert!(matches!(
            read_cone_json(f.path()),
            Err(Error::UnsupportedCone(_))
        ));
    }

    #[test]
    fn zero_cone_1d_gets_two_sided_dual() {
        let f = write_temp(r#"{"dimension": 1, "generators_C": []}"#, ".json");
        let cone = read_cone_json(f.path()).unwrap();
        assert_eq!(cone.dual_generators().len(), 2);
    }

    #[test]
    fn cone_expectile_report_round_trips_membership() {
        let x = WeightedSample::uniform(vec![
            vec![5.0, 2.0],
            vec![4.0, -1.0],
            vec![3.0, 1.0],
        ])
        .unwrap();
        let set =
            crate::cone_expectile::downward_expectile(&x, &ConeSpec::orthant(2), 0.25).unwrap();
        let report = ConeExpectileReport::from_set(&set, 1e-9).unwrap();
        let json = to_json_string(&report).unwrap();
        let back: ConeExpectileReport = serde_json::from_str(&json).unwrap();
        for z in [[3.0, -1.0], [3.6, 0.0], [3.7, 0.1], [4.0, 1.0]] {
            assert_eq!(
                back.contains(&z, 1e-9).unwrap(),
                set.contains(&z, 1e-9).unwrap(),
                "disagreement at {z:?}"
            );
        }
        assert_eq!(back.vertices.unwrap(), vec![vec![3.6, 0.0]]);
    }

    #[test]
    fn json_output_is_deterministic() {
        let report = ExpectileReport {
            direction: vec![1.0, 0.0],
            values: vec![ExpectilePoint {
                alpha: 0.25,
                expectile: round_sig15(3.6),
            }],
        };
        assert_eq!(
            to_json_string(&report).unwrap(),
            to_json_string(&report).unwrap()
        );
    }
}
