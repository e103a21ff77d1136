//! A gallery of ordering cones and how they reshape the downward cone
//! expectile set of one fixed sample: the componentwise orthant, a narrow
//! wedge, a halfplane (whose dual is a single ray), a rotated cone obtained
//! by a linear transform, and the degenerate C = {0} in dimension one.
//!
//! Run with `cargo run --example cone_gallery`.

use cone_expectiles::{
    downward_expectile, transform_cone, vertices_2d, ConeSpec, WeightedSample,
};
use nalgebra::DMatrix;

fn show(name: &str, x: &WeightedSample, cone: &ConeSpec) -> cone_expectiles::Result<()> {
    let set = downward_expectile(x, cone, 0.25)?;
    println!("{name}:");
    println!("  dual generators: {:?}", cone.dual_generators());
    println!("  offsets: {:?}", set.offsets());
    let vr = vertices_2d(&set.halfspaces, 1e-9)?;
    println!("  vertices: {:?}", vr.vertices);
    println!("  recession rays: {:?}\n", vr.rays);
    Ok(())
}

fn main() -> cone_expectiles::Result<()> {
    let x = WeightedSample::uniform(vec![
        vec![5.0, 2.0],
        vec![4.0, -1.0],
        vec![3.0, 1.0],
    ])?;

    // The componentwise order; self-dual.
    show("orthant", &x, &ConeSpec::orthant(2))?;

    // A narrow wedge: stricter order, wider dual, smaller downward set.
    let wedge = ConeSpec::from_generators_2d(&[vec![2.0, 1.0], vec![1.0, 2.0]])?;
    show("narrow wedge spanned by (2,1),(1,2)", &x, &wedge)?;

    // A halfplane: the widest preorder cone supported; its dual is the
    // single ray normal to the boundary, so the expectile set is a
    // halfplane too (one constraint, no vertex).
    let halfplane = ConeSpec::from_generators_2d(&[vec![1.0, 0.0], vec![-1.0, 0.0], vec![0.0, 1.0]])?;
    show("upper halfplane", &x, &halfplane)?;

    // Transforming the cone by an invertible matrix maps the dual by the
    // inverse transpose; expectile sets follow the same equivariance.
    let a = DMatrix::from_row_slice(2, 2, &[1.0, 1.0, 0.0, 1.0]);
    let sheared = transform_cone(&a, &ConeSpec::orthant(2))?;
    show("sheared orthant A*R^2_+, A = [[1,1],[0,1]]", &x, &sheared)?;

    // C = {0} in dimension 1: both directions are dual generators and the
    // downward set collapses to the expectile interval's single point.
    let zero = ConeSpec::new(1, Vec::new(), vec![vec![1.0], vec![-1.0]])?;
    let first = WeightedSample::new(
        x.points().iter().map(|p| vec![p[0]]).collect(),
        x.probabilities().to_vec(),
    )?;
    let set = downward_expectile(&first, &zero, 0.25)?;
    println!("C = {{0}} on the first coordinate:");
    println!("  constraints: z <= {} and -z <= {}", set.offsets()[0], set.offsets()[1]);
    println!("  (empty unless both coincide; singleton at alpha = 1/2 only for symmetric laws)");
    Ok(())
}
