//! The scenario polytope behind the dual view of expectiles: all
//! reweightings q of the base probabilities whose density ratios satisfy
//! max(q_i/p_i) <= beta * min(q_j/p_j) with beta = (1-alpha)/alpha.
//!
//! Minimizing E^Q[xi] over this polytope recovers the alpha-expectile;
//! maximizing recovers the (1-alpha)-expectile.
//!
//! Run with `cargo run --example scenario_polytope`.

use cone_expectiles::{
    dual_expectile_oracle, expectile, scenario_vertices, OracleSense, ScalarSample,
};

fn main() -> cone_expectiles::Result<()> {
    let p = vec![1.0 / 3.0; 3];
    let alpha = 0.25;
    let polytope = scenario_vertices(&p, alpha)?;
    println!(
        "scenario polytope at alpha = {alpha} (beta = {}):",
        polytope.beta
    );
    for q in &polytope.vertices {
        println!("  {q:?}");
    }
    println!("({} vertices from a 3-atom uniform base)", polytope.vertices.len());

    // Reweighting a scalar sample by each vertex and taking the extremes
    // reproduces the expectile pair.
    let xi = ScalarSample::uniform(vec![3.0, 4.0, 5.0])?;
    let means: Vec<f64> = polytope
        .vertices
        .iter()
        .map(|q| q.iter().zip(xi.values()).map(|(qi, v)| qi * v).sum())
        .collect();
    let min = means.iter().copied().fold(f64::INFINITY, f64::min);
    let max = means.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    println!("\nreweighted means of {{3,4,5}}: {means:?}");
    println!("  min = {min}  vs e_0.25   = {}", expectile(&xi, alpha)?);
    println!("  max = {max}  vs e_0.75   = {}", expectile(&xi, 1.0 - alpha)?);

    // The same extremes, computed directly by the prefix-sum oracle.
    println!(
        "\noracle: min = {}, max = {}",
        dual_expectile_oracle(&xi, alpha, OracleSense::Min)?,
        dual_expectile_oracle(&xi, alpha, OracleSense::Max)?,
    );

    // At alpha = 1/2 the polytope collapses to the base measure.
    let at_half = scenario_vertices(&p, 0.5)?;
    println!("\nat alpha = 1/2: {:?}", at_half.vertices);
    Ok(())
}
