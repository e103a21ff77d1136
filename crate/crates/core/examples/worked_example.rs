//! End-to-end tour on a three-point bivariate sample: scalar expectiles of
//! a projection, the downward/upward cone expectile sets, and where the
//! mean sits between them.
//!
//! Run with `cargo run --example worked_example`.

use cone_expectiles::{
    downward_expectile, expectile, upward_expectile, vertices_2d, ConeSpec, WeightedSample,
};

fn main() -> cone_expectiles::Result<()> {
    // Three equally likely outcomes in R^2.
    let x = WeightedSample::uniform(vec![
        vec![5.0, 2.0],
        vec![4.0, -1.0],
        vec![3.0, 1.0],
    ])?;
    let alpha = 0.25;

    // Project onto the first axis: the classic univariate expectile.
    let first = x.project(&[1.0, 0.0])?;
    println!("scalar sample (first coordinate): {:?}", first.values());
    println!("  e_0.25 = {}", expectile(&first, alpha)?);
    println!("  e_0.50 = {} (the mean)", expectile(&first, 0.5)?);
    println!("  e_0.75 = {}", expectile(&first, 0.75)?);

    // The componentwise order: C = R^2_+, self-dual.
    let cone = ConeSpec::orthant(2);

    let down = downward_expectile(&x, &cone, alpha)?;
    println!("\ndownward cone expectile at alpha = {alpha}:");
    for (w, c) in down.halfspaces.normals.iter().zip(down.offsets()) {
        println!("  {:?} . z <= {c}", w);
    }
    let wedge = vertices_2d(&down.halfspaces, 1e-9)?;
    println!("  wedge corner: {:?}", wedge.vertices[0]);

    let up = upward_expectile(&x, &cone, 1.0 - alpha)?;
    println!("\nupward cone expectile at level {}:", 1.0 - alpha);
    for (w, c) in up.halfspaces.normals.iter().zip(up.offsets()) {
        println!("  {:?} . z >= {c}", w);
    }

    // At alpha = 0.25 the two wedges exclude the mean; as alpha -> 1/2
    // both corners slide to the mean and the wedges meet exactly there.
    let mean = x.mean();
    println!("\nmean = {mean:?}");
    println!(
        "  in downward set at alpha = {alpha}: {}",
        down.contains(&mean, 1e-12)?
    );
    let down_half = downward_expectile(&x, &cone, 0.5)?;
    let up_half = upward_expectile(&x, &cone, 0.5)?;
    println!(
        "  in both sets at alpha = 1/2:      {}",
        down_half.contains(&mean, 1e-12)? && up_half.contains(&mean, 1e-12)?
    );
    Ok(())
}
