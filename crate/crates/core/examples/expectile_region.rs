//! The expectile region of a bivariate sample: the set of reweighted means
//! over the scenario polytope. It is a convex polygon that shrinks to the
//! mean as alpha -> 1/2, and its support values in any direction w are
//! exactly the pair e_alpha(w.X) <= w.z <= e_{1-alpha}(w.X).
//!
//! Run with `cargo run --example expectile_region`.

use cone_expectiles::{
    directed_hausdorff, expectile, region_primal_2d, region_vertices, supporting_polygon,
    WeightedSample,
};

fn main() -> cone_expectiles::Result<()> {
    let x = WeightedSample::uniform(vec![
        vec![5.0, 2.0],
        vec![4.0, -1.0],
        vec![3.0, 1.0],
    ])?;
    let alpha = 0.25;

    // Dual (exact) construction: images of the scenario-polytope vertices.
    let region = region_vertices(&x, alpha)?;
    println!("region vertices at alpha = {alpha} (CCW):");
    for v in &region.vertices {
        println!("  [{:.6}, {:.6}]", v[0], v[1]);
    }

    // Support values match the scalar expectile pair in every direction.
    let w = [1.0, 0.0];
    let support_lo = region
        .vertices
        .iter()
        .map(|v| v[0])
        .fold(f64::INFINITY, f64::min);
    let support_hi = region
        .vertices
        .iter()
        .map(|v| v[0])
        .fold(f64::NEG_INFINITY, f64::max);
    let s = x.project(&w)?;
    println!(
        "\nsupport along {w:?}: [{support_lo}, {support_hi}] vs expectiles [{}, {}]",
        expectile(&s, alpha)?,
        expectile(&s, 1.0 - alpha)?
    );

    // Primal outer approximation from finitely many support directions;
    // it converges to the region as the direction count grows.
    for m in [8, 36, 360] {
        let outer = supporting_polygon(&region_primal_2d(&x, alpha, m)?)?;
        let gap = directed_hausdorff(&outer.vertices, &region.vertices);
        println!("outer polygon from {m:>3} directions: Hausdorff gap {gap:.6}");
    }

    // Shrinks to the mean.
    let near_half = region_vertices(&x, 0.499)?;
    println!("\nmean = {:?}", x.mean());
    println!("region at alpha = 0.499: {:?}", near_half.vertices);
    Ok(())
}
