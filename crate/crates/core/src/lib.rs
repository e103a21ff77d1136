//! Set-valued expectiles for finite weighted samples in `R^d`.
//!
//! The crate computes:
//!
//! - exact univariate expectiles, inverse expectiles and expectile curves
//!   ([`scalar`]);
//! - downward and upward cone expectile sets and the set-valued expectile
//!   risk measure, represented by halfspaces along the dual generators of a
//!   closed convex ordering cone ([`cone_expectile`]);
//! - the scenario polytope of reweighted probability measures and the
//!   expectile region it generates, with both primal (halfspace) and dual
//!   (vertex) constructions cross-checking each other ([`scenario`]);
//! - expectile rank functions, the complete preorders they induce, and
//!   rank-based certification of expectile stochastic orders ([`rank`]);
//! - 2-d cone geometry: dual cones, halfspace intersections, convex hulls
//!   and Hausdorff distances used to verify everything else ([`geometry`]).
//!
//! Samples are finite lists of points with strictly positive probabilities
//! ([`sample`]). All level parameters `alpha` live in `(0, 1)`; set-valued
//! outputs are exact for `alpha <= 1/2` (downward) and flagged as outer
//! approximations otherwise.
//!
//! The `conex` binary exposes the same functionality as a command-line
//! tool; the `examples/` directory walks through each capability on small
//! concrete datasets.

pub mod cli;
pub mod cone_expectile;
pub mod error;
pub mod geometry;
pub mod io;
pub mod rank;
pub mod simulate;
pub mod sample;
pub mod scalar;
pub mod scenario;

pub use cone_expectile::{
    default_alpha_grid, downward_expectile, lower_expectile_order, risk_measure,
    upper_expectile_order, upward_expectile, ConeExpectileSet, Direction, OrderReport,
};
pub use error::{Error, Result};
pub use io::{read_cone_json, read_sample_csv, round_sig15};
pub use geometry::{
    convex_hull_2d, directed_hausdorff, supporting_polygon, transform_cone, vertices_2d,
    ConeSpec, HalfspaceSet, RegionPolytope, Sense, VertexRays, DEFAULT_TOL,
};
pub use rank::{
    compare, downward_rank, infer_cone_order, rank, stochastic_order_rank_check, upward_rank,
    ComparisonReport, InferenceReport, OrderVerdict, RankResult,
};
pub use sample::{ScalarSample, WeightedSample};
pub use scalar::{
    dual_expectile_oracle, expectile, expectile_curve, inverse_expectile, ExpectileCurvePoint,
    OracleSense,
};
pub use simulate::{kendall_tau, simulate_gumbel, SimulationConfig};
pub use scenario::{
    dual_cone_expectile, dual_upward_cone_expectile, region_primal_2d, region_vertices,
    scenario_vertices, ScenarioPolytope, MAX_SCENARIO_ATOMS,
};
