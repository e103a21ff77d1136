//! Command-line front end behind the `conex` binary.
//!
//! Thin orchestration over the library: parse flags, read CSV samples and
//! JSON cone files, call one analysis entry point, emit a JSON (or, for
//! `simulate`, CSV) report to stdout or `--output`.
//!
//! Exit codes: 0 success, 2 input or usage error, 3 unsupported dimension,
//! 4 sample-size limit exceeded.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::cone_expectile::{
    default_alpha_grid, downward_expectile, lower_expectile_order, risk_measure,
    upper_expectile_order, upward_expectile,
};
use crate::error::{Error, Result};
use crate::geometry::{supporting_polygon, ConeSpec, DEFAULT_TOL};
use crate::io::{
    read_cone_json, read_sample_csv, round_sig15, to_json_string, ConeExpectileReport,
    ExpectilePoint, ExpectileReport, OrderSideReport, RankReport, ScenarioReport,
    StochasticOrderReport,
};
use crate::rank::rank;
use crate::sample::WeightedSample;
use crate::scalar::expectile_curve;
use crate::scenario::{region_primal_2d, region_vertices, scenario_vertices};
use crate::simulate::{simulate_gumbel, SimulationConfig};

#[derive(Debug, Parser)]
#[command(
    name = "conex",
    about = "Set-valued expectiles, expectile regions, risk measures and ranks \
             for finite weighted samples"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Sample CSV: header x1..xd plus optional weight column
    #[arg(long)]
    input: PathBuf,
}

#[derive(Debug, Args)]
struct ConeArgs {
    /// Cone JSON file; defaults to the nonnegative orthant of the sample
    /// dimension
    #[arg(long)]
    cone: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Geometric tolerance for membership and vertex computations
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tolerance: f64,
    /// Write the report here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Univariate expectiles of a projected sample over a level grid
    Expectile {
        #[command(flatten)]
        input: InputArgs,
        /// Projection direction, comma-separated; defaults to the first axis
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        direction: Option<Vec<f64>>,
        /// Levels in (0,1); repeatable
        #[arg(long, required = true)]
        alpha: Vec<f64>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Downward cone expectile at alpha and upward at 1-alpha
    ConeExpectile {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        cone: ConeArgs,
        #[arg(long)]
        alpha: f64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Expectile region: scenario polytope image with its boundary polygon
    Region {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        alpha: f64,
        /// Also compute a primal outer polygon from this many support
        /// directions (d = 2 only, at least 8)
        #[arg(long)]
        directions: Option<usize>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Set-valued expectile risk measure (requires C to contain the orthant)
    Risk {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        cone: ConeArgs,
        #[arg(long)]
        alpha: f64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Downward and upward expectile ranks of a query point
    Rank {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        cone: ConeArgs,
        /// Query point, comma-separated
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        point: Vec<f64>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Lower and upper expectile stochastic orders between two samples
    Order {
        #[command(flatten)]
        input: InputArgs,
        /// CSV of the dominating candidate sample
        #[arg(long)]
        other: PathBuf,
        #[command(flatten)]
        cone: ConeArgs,
        /// Certification grid; defaults to 0.01..0.99
        #[arg(long)]
        alpha: Vec<f64>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Vertices of the scenario polytope and of the region it generates
    Scenarios {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        alpha: f64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Reproducible bivariate Gumbel-copula demo dataset as CSV
    Simulate {
        /// Number of points
        #[arg(long, default_value_t = 200)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Copula parameter, >= 1
        #[arg(long, default_value_t = 2.0)]
        theta: f64,
        /// Write the CSV here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn load_cone(cone: &ConeArgs, dim: usize) -> Result<ConeSpec> {
    match &cone.cone {
        Some(path) => {
            let spec = read_cone_json(path)?;
            if spec.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: spec.dim(),
                });
            }
            Ok(spec)
        }
        None => Ok(ConeSpec::orthant(dim)),
    }
}

fn check_tolerance(common: &CommonArgs) -> Result<()> {
    if !(common.tolerance > 0.0) {
        return Err(Error::InvalidInput(format!(
            "tolerance must be positive, got {}",
            common.tolerance
        )));
    }
    Ok(())
}

fn emit(output: &Option<PathBuf>, content: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn sample_to_csv(sample: &WeightedSample) -> String {
    let header: Vec<String> = (1..=sample.dim()).map(|k| format!("x{k}")).collect();
    let mut out = header.join(",");
    out.push('\n');
    for point in sample.points() {
        let row: Vec<String> = point.iter().map(|&v| round_sig15(v).to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Expectile {
            input,
            direction,
            alpha,
            common,
        } => {
            check_tolerance(&common)?;
            let sample = read_sample_csv(&input.input)?;
            let direction = direction.unwrap_or_else(|| {
                let mut e1 = vec![0.0; sample.dim()];
                e1[0] = 1.0;
                e1
            });
            let projected = sample.project(&direction)?;
            let values = expectile_curve(&projected, &alpha)?
                .into_iter()
                .map(|p| ExpectilePoint {
                    alpha: round_sig15(p.alpha),
                    expectile: round_sig15(p.value),
                })
                .collect();
            let report = ExpectileReport { direction, values };
            emit(&common.output, &to_json_string(&report)?)
        }
        Command::ConeExpectile {
            input,
            cone,
            alpha,
            common,
        } => {
            check_tolerance(&common)?;
            let sample = read_sample_csv(&input.input)?;
            let cone = load_cone(&cone, sample.dim())?;
            let down = downward_expectile(&sample, &cone, alpha)?;
            let up = upward_expectile(&sample, &cone, 1.0 - alpha)?;
            #[derive(serde::Serialize)]
            struct Pair {
                downward: ConeExpectileReport,
                upward: ConeExpectileReport,
            }
            let report = Pair {
                downward: ConeExpectileReport::from_set(&down, common.tolerance)?,
                upward: ConeExpectileReport::from_set(&up, common.tolerance)?,
            };
            emit(&common.output, &to_json_string(&report)?)
        }
        Command::Region {
            input,
            alpha,
            directions,
            common,
        } => {
            check_tolerance(&common)?;
            let sample = read_sample_csv(&input.input)?;
            let polytope = scenario_vertices(sample.probabilities(), alpha)?;
            let region = region_vertices(&sample, alpha)?;
            let polygon = (sample.dim() == 2).then(|| region.vertices.clone());
            let mut report = serde_json::to_value(ScenarioReport::new(
                &polytope,
                &region.vertices,
                polygon.as_deref(),
            ))?;
            if let Some(m) = directions {
                if sample.dim() != 2 {
                    return Err(Error::UnsupportedDimension(sample.dim()));
                }
                if m < 8 {
                    return Err(Error::InvalidInput(format!(
                        "--directions must be at least 8, got {m}"
                    )));
                }
                let outer = supporting_polygon(&region_primal_2d(&sample, alpha, m)?)?;
                let rounded: Vec<Vec<f64>> = outer
                    .vertices
                    .iter()
                    .map(|v| v.iter().copied().map(round_sig15).collect())
                    .collect();
                report["primal_polygon"] = serde_json::to_value(rounded)?;
            }
            emit(&common.output, &to_json_string(&report)?)
        }
        Command::Risk {
            input,
            cone,
            alpha,
            common,
        } => {
            check_tolerance(&common)?;
            let sample = read_sample_csv(&input.input)?;
            let cone = load_cone(&cone, sample.dim())?;
            let set = risk_measure(&sample, &cone, alpha)?;
            let report = ConeExpectileReport::from_set(&set, common.tolerance)?;
            emit(&common.output, &to_json_string(&report)?)
        }
        Command::Rank {
            input,
            cone,
            point,
            common,
        } => {
            check_tolerance(&common)?;
            let sample = read_sample_csv(&input.input)?;
            let cone = load_cone(&cone, sample.dim())?;
            let result = rank(&point, &sample, &cone)?;
            let report = RankReport::new(&point, &result);
            emit(&common.output, &to_json_string(&report)?)
        }
        Command::Order {
            input,
            other,
            cone,
            alpha,
            common,
        } => {
            check_tolerance(&common)?;
            let x = read_sample_csv(&input.input)?;
            let y = read_sample_csv(&other)?;
            let cone = load_cone(&cone, x.dim())?;
            let grid = if alpha.is_empty() {
                default_alpha_grid()
            } else {
                alpha
            };
            let lower = lower_expectile_order(&x, &y, &cone, &grid)?;
            let upper = upper_expectile_order(&x, &y, &cone, &grid)?;
            let report = StochasticOrderReport {
                alpha_grid: grid.iter().copied().map(round_sig15).collect(),
                lower: OrderSideReport::new(&lower),
                upper: OrderSideReport::new(&upper),
            };
            emit(&common.output, &to_json_string(&report)?)
        }
        Command::Scenarios {
            input,
            alpha,
            common,
        } => {
            check_tolerance(&common)?;
            let sample = read_sample_csv(&input.input)?;
            let polytope = scenario_vertices(sample.probabilities(), alpha)?;
            let region = region_vertices(&sample, alpha)?;
            let polygon = (sample.dim() == 2).then(|| region.vertices.clone());
            let report =
                ScenarioReport::new(&polytope, &region.vertices, polygon.as_deref());
            emit(&common.output, &to_json_string(&report)?)
        }
        Command::Simulate { n, seed, theta, output } => {
            let config = SimulationConfig {
                n,
                seed,
                theta,
                ..SimulationConfig::default()
            };
            let sample = simulate_gumbel(&config)?;
            emit(&output, &sample_to_csv(&sample))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::UnsupportedDimension(_) => 3,
        Error::SizeLimit { .. } => 4,
        _ => 2,
    }
}

/// Parses the process arguments, runs the selected subcommand and maps
/// errors to the documented exit codes.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
