//! Reproducible demo data: a bivariate sample from the Gumbel copula with
//! a normal first marginal and a gamma second marginal, the dataset family
//! used throughout the other examples for larger-scale runs.
//!
//! Run with `cargo run --example simulate_data`.

use cone_expectiles::{
    downward_expectile, kendall_tau, simulate_gumbel, vertices_2d, ConeSpec, SimulationConfig,
};

fn main() -> cone_expectiles::Result<()> {
    let config = SimulationConfig {
        n: 2000,
        seed: 42,
        theta: 2.0,
        ..SimulationConfig::default()
    };
    let sample = simulate_gumbel(&config)?;
    println!(
        "{} points, Gumbel theta = {}, seed = {}",
        config.n, config.theta, config.seed
    );

    let mean = sample.mean();
    println!("empirical mean: [{:.3}, {:.3}]", mean[0], mean[1]);
    println!(
        "  (population: [{}, {:.3}])",
        config.normal_mean,
        config.gamma_shape / config.gamma_rate
    );

    // Kendall tau of the Gumbel copula is 1 - 1/theta.
    let tau = kendall_tau(sample.points())?;
    println!(
        "empirical Kendall tau: {tau:.3} (population {})",
        1.0 - 1.0 / config.theta
    );

    // Downward cone expectile corners trace a curve as alpha varies.
    let cone = ConeSpec::orthant(2);
    println!("\ndownward wedge corners:");
    for alpha in [0.05, 0.15, 0.3, 0.5] {
        let set = downward_expectile(&sample, &cone, alpha)?;
        let corner = &vertices_2d(&set.halfspaces, 1e-9)?.vertices[0];
        println!("  alpha = {alpha:<4}: [{:.3}, {:.3}]", corner[0], corner[1]);
    }

    // Same seed, same data - the CLI's `conex simulate` writes this CSV.
    let again = simulate_gumbel(&config)?;
    println!("\nrerun with the same seed is identical: {}", sample.points() == again.points());
    Ok(())
}
