//! The set-valued expectile risk measure R(X) = -E^alpha_{-C}(X): all
//! deterministic portfolios whose addition makes X acceptable. Requires the
//! ordering cone to contain the componentwise order, and is translative:
//! adding cash z to X shifts the risk set by -z.
//!
//! Run with `cargo run --example risk_measure`.

use cone_expectiles::{risk_measure, vertices_2d, ConeSpec, WeightedSample};

fn main() -> cone_expectiles::Result<()> {
    let x = WeightedSample::uniform(vec![
        vec![5.0, 2.0],
        vec![4.0, -1.0],
        vec![3.0, 1.0],
    ])?;
    let cone = ConeSpec::orthant(2);
    let alpha = 0.25;

    let risk = risk_measure(&x, &cone, alpha)?;
    println!("risk set at alpha = {alpha}:");
    for (w, c) in risk.halfspaces.normals.iter().zip(risk.offsets()) {
        println!("  {:?} . z >= {c}", w);
    }
    let corner = &vertices_2d(&risk.halfspaces, 1e-9)?.vertices[0];
    println!("  corner (least elements): {corner:?}");

    // The zero portfolio is acceptable iff 0 is in the risk set.
    println!(
        "\nX acceptable without extra capital: {}",
        risk.contains(&[0.0, 0.0], 1e-12)?
    );

    // Translativity: risk of X + cash = risk of X - cash.
    let cash = [1.0, 2.0];
    let shifted = risk_measure(&x.shift(&cash)?, &cone, alpha)?;
    println!("\nafter adding cash {cash:?}:");
    for ((c0, c1), w) in risk
        .offsets()
        .iter()
        .zip(shifted.offsets())
        .zip(&risk.halfspaces.normals)
    {
        let wz: f64 = w.iter().zip(&cash).map(|(a, b)| a * b).sum();
        println!("  offset {c0} -> {c1} (shifted by -{wz})");
    }

    // A cone that does not contain the orthant is rejected: monotonicity
    // of the risk measure would fail.
    let wedge = ConeSpec::from_generators_2d(&[vec![1.0, 1.0], vec![1.0, 2.0]])?;
    println!(
        "\nwedge not containing the orthant: {:?}",
        risk_measure(&x, &wedge, alpha).err().map(|e| e.to_string())
    );
    Ok(())
}
